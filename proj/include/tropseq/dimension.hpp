#pragma once

#include "tropseq/polyhedra.hpp"
#include "tropseq/rational.hpp"
#include "tropseq/tropical.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropseq {

/// Subset of window positions {0..n}, bit k set iff position k attains the minimum.
using WindowSet = std::uint32_t;

std::vector<int> positions(WindowSet s);

/**
 * Attainment pattern: for each window j = 0 .. N-n-1, the positions where the
 * minimum is attained. Every subset has at least two elements.
 */
struct Pattern {
  int order = 2;
  std::vector<WindowSet> windows;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Admissible window subsets in enumeration order. For n = 2 this is
/// {0,1}, {1,2}, {0,2}, {0,1,2}; in general by size, then span, then lowest element.
const std::vector<WindowSet>& subset_order(int order);

/// The cell of W_N selected by a pattern: ties become equalities, positions
/// outside the tie become strict inequalities against the lowest tied position.
/// Throws std::invalid_argument on a malformed pattern.
LinearSystem pattern_to_system(const HolonomicSystem& sys, const Pattern& pat, int n);

struct AttainmentGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

AttainmentGraph attainment_graph(const Pattern& pat, int n);

int components(const AttainmentGraph& g);

/// Component label per vertex, labels numbered by first appearance from vertex 0.
std::vector<int> component_labels(const AttainmentGraph& g);

/// Maximal run of at least two consecutive vertices in one component, [first, last].
struct Interval {
  int first;
  int last;
  int length() const { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::vector<Interval> intervals(const std::vector<int>& labels);

struct EnumerationOptions {
  /// Check strict feasibility after every window and cut infeasible prefixes.
  bool prune = true;
  /// Worker threads for subtree exploration; results do not depend on it.
  int jobs = 1;
};

struct FeasibleCell {
  Pattern pattern;
  CellResult cell;
};

/// Every strictly feasible pattern of W_N, in enumeration order.
std::vector<FeasibleCell> feasible_cells(const HolonomicSystem& sys, int n, const EnumerationOptions& opts = {});

struct DimResult {
  int dim = 0;
  /// First maximal cell in enumeration order; empty pattern when n <= order.
  Pattern pattern;
  std::vector<Rational> witness;
};

/// dim(W_N) as the maximum cell dimension over strictly feasible patterns.
DimResult dim_WN(const HolonomicSystem& sys, int n, const EnumerationOptions& opts = {});

struct ScanRow {
  int n;
  int dim;
  Rational ratio;
};

struct ScanReport {
  HolonomicSystem system;
  std::vector<ScanRow> rows;
  /// Present for second-order systems.
  std::optional<Rational> classified_entropy;
};

ScanReport entropy_scan(const HolonomicSystem& sys, int n_min, int n_max, const EnumerationOptions& opts = {});

struct Violation {
  std::string rule;
  std::string detail;
  Pattern pattern;
  AttainmentGraph graph;
};

struct LemmaReport {
  EntropyClass classification;
  int n = 0;
  std::size_t cells_checked = 0;
  std::vector<Violation> violations;
};

/// The lemma_predicates checks applied to a single cell.
std::vector<Violation> lemma_violations(const EntropyClass& cls, int n, const FeasibleCell& cell);

/**
 * Checks the structural claims on the attainment graph of every strictly
 * feasible pattern:
 *  - "component-bound": cell dimension <= number of components (all systems);
 *  - "adjacent-intervals", "alternation": Case1 and Case2, for neighbouring
 *    intervals whose left member ends at or beyond 4*j0, the intervals do
 *    not adjoin and the vertices from the end of one to the start of the
 *    next alternate between two components;
 *  - "short-interval": Case2, no interval of length exactly 2 starting
 *    beyond 4*j0 whose following window lies inside the sequence;
 *  - "single-tail-interval": Case3 with D eventually positive and E != 0,
 *    at most one interval starts beyond 4*j0 and it ends at vertex N-1.
 * Requires a second-order system.
 */
LemmaReport lemma_predicates(const HolonomicSystem& sys, int n, const EnumerationOptions& opts = {});

}  // namespace tropseq
