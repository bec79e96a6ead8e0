#pragma once

#include "tropseq/rational.hpp"

#include <optional>
#include <vector>

namespace tropseq {

using Row = std::vector<Rational>;

/// row . w = rhs (equality) or row . w < rhs (strict inequality).
struct Constraint {
  Row row;
  Rational rhs;
};

/// A relatively open polyhedron in Q^N: linear equalities plus strict inequalities.
struct LinearSystem {
  int ambient_dim = 0;
  std::vector<Constraint> equalities;
  std::vector<Constraint> strict_inequalities;

  explicit LinearSystem(int n = 0) : ambient_dim(n) {}

  void add_equality(Row row, Rational rhs);
  void add_strict(Row row, Rational rhs);

  /// Throws std::invalid_argument if any row length differs from ambient_dim.
  void validate() const;

  /// True iff the point meets every equality exactly and every strict inequality strictly.
  bool satisfied_by(const std::vector<Rational>& point) const;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<std::vector<Rational>> witness;
};

struct CellResult {
  bool feasible = false;
  int dimension = 0;
  std::vector<Rational> witness;
};

/// Rank over Q. Throws std::invalid_argument for ragged rows.
int rank(const std::vector<Row>& rows);

/**
 * Decides whether some w satisfies all equalities and all strict inequalities.
 *
 * The equalities are eliminated first (reduced row echelon form), then the
 * auxiliary LP  max t  s.t.  g_i . y + t <= h_i,  t <= 1  is solved over the
 * remaining free coordinates y with an exact primal simplex under Bland's rule.
 * The system is strictly feasible iff the optimum t* is positive.
 */
FeasibilityResult strictly_feasible(const LinearSystem& sys);

/// Feasibility plus dimension = ambient_dim - rank(equalities).
CellResult cell_dimension(const LinearSystem& sys);

}  // namespace tropseq
