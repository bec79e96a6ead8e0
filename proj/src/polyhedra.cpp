#include "tropseq/polyhedra.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tropseq {

void LinearSystem::add_equality(Row row, Rational rhs) { equalities.push_back({std::move(row), std::move(rhs)}); }

void LinearSystem::add_strict(Row row, Rational rhs) {
  strict_inequalities.push_back({std::move(row), std::move(rhs)});
}

void LinearSystem::validate() const {
  if (ambient_dim < 0) throw std::invalid_argument("linear system: negative ambient dimension");
  const auto check = [&](const std::vector<Constraint>& cs, const char* kind) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (static_cast<int>(cs[i].row.size()) != ambient_dim) {
        throw std::invalid_argument(std::string(kind) + " row " + std::to_string(i) + " has " +
                                    std::to_string(cs[i].row.size()) + " entries, expected " +
                                    std::to_string(ambient_dim));
      }
    }
  };
  check(equalities, "equality");
  check(strict_inequalities, "strict inequality");
}

namespace {

Rational dot(const Row& a, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (sgn(a[k]) != 0) s += a[k] * x[k];
  }
  return s;
}

bool is_zero_row(const Row& r, std::size_t width) {
  for (std::size_t k = 0; k < width; ++k) {
    if (sgn(r[k]) != 0) return false;
  }
  return true;
}

/// In-place reduced row echelon form over the first `cols` columns. Returns
/// the pivot column of each of the leading rows; rows past the rank are zero
/// in those columns (but may carry a nonzero augmented entry).
std::vector<int> reduce(std::vector<Row>& m, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][static_cast<std::size_t>(c)]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][static_cast<std::size_t>(c)];
    for (auto& x : m[r]) {
      if (sgn(x) != 0) x *= inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < m[r].size(); ++k) {
      if (sgn(m[r][k]) != 0) support.push_back(k);
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][static_cast<std::size_t>(c)]) == 0) continue;
      const Rational f = m[i][static_cast<std::size_t>(c)];
      for (std::size_t k : support) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/**
 * Dense tableau for  max t  s.t.  G y + t 1 <= h,  t <= 1  with y and t free.
 *
 * Columns: y+ (k), y- (k), t+, t-, one slack per row. All rows carry
 * coefficient -1 on t-, so a single pivot of t- into the row with the most
 * negative right-hand side yields a feasible starting basis.
 */
class SlackLp {
 public:
  SlackLp(const std::vector<Row>& g, const std::vector<Rational>& h, int k)
      : k_(k), rows_(g.size() + 1), cols_(2 * k + 2 + static_cast<int>(rows_)) {
    tab_.assign(rows_, Row(static_cast<std::size_t>(cols_) + 1));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      auto& row = tab_[i];
      if (i < g.size()) {
        for (int f = 0; f < k_; ++f) {
          row[static_cast<std::size_t>(f)] = g[i][static_cast<std::size_t>(f)];
          row[static_cast<std::size_t>(k_ + f)] = -g[i][static_cast<std::size_t>(f)];
        }
        row.back() = h[i];
      } else {
        row.back() = 1;
      }
      row[static_cast<std::size_t>(t_plus())] = 1;
      row[static_cast<std::size_t>(t_minus())] = -1;
      row[static_cast<std::size_t>(slack(i))] = 1;
      basis_[i] = slack(i);
    }
    // Objective row holds -c_j for max c.x, with c = e(t+) - e(t-).
    obj_.assign(static_cast<std::size_t>(cols_) + 1, Rational(0));
    obj_[static_cast<std::size_t>(t_plus())] = -1;
    obj_[static_cast<std::size_t>(t_minus())] = 1;
  }

  /// Runs to optimality; returns t*.
  Rational solve() {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < rows_; ++i) {
      if (tab_[i].back() < tab_[worst].back()) worst = i;
    }
    if (sgn(tab_[worst].back()) < 0) pivot(worst, t_minus());

    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (sgn(obj_[static_cast<std::size_t>(j)]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& a = tab_[i][static_cast<std::size_t>(enter)];
        if (sgn(a) <= 0) continue;
        Rational ratio = tab_[i].back() / a;
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_) throw std::logic_error("slack LP unbounded; t <= 1 should prevent this");
      pivot(leave, enter);
    }
    return obj_.back();
  }

  std::vector<Rational> free_values() const {
    std::vector<Rational> x(static_cast<std::size_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) x[static_cast<std::size_t>(basis_[i])] = tab_[i].back();
    std::vector<Rational> y(static_cast<std::size_t>(k_));
    for (int f = 0; f < k_; ++f) {
      y[static_cast<std::size_t>(f)] = x[static_cast<std::size_t>(f)] - x[static_cast<std::size_t>(k_ + f)];
    }
    return y;
  }

 private:
  int t_plus() const { return 2 * k_; }
  int t_minus() const { return 2 * k_ + 1; }
  int slack(std::size_t i) const { return 2 * k_ + 2 + static_cast<int>(i); }

  void pivot(std::size_t r, int c) {
    auto& prow = tab_[r];
    const Rational inv = 1 / prow[static_cast<std::size_t>(c)];
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < prow.size(); ++k) {
      if (sgn(prow[k]) != 0) {
        prow[k] *= inv;
        support.push_back(k);
      }
    }
    const auto eliminate = [&](Row& row) {
      if (sgn(row[static_cast<std::size_t>(c)]) == 0) return;
      const Rational f = row[static_cast<std::size_t>(c)];
      for (std::size_t k : support) row[k] -= f * prow[k];
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(tab_[i]);
    }
    eliminate(obj_);
    basis_[r] = c;
  }

  int k_;
  std::size_t rows_;
  int cols_;
  std::vector<Row> tab_;
  Row obj_;
  std::vector<int> basis_;
};

}  // namespace

int rank(const std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) throw std::invalid_argument("rank: ragged rows");
  }
  std::vector<Row> m = rows;
  return static_cast<int>(reduce(m, static_cast<int>(width)).size());
}

namespace {

struct Reduction {
  bool consistent = true;
  int rank = 0;
  std::vector<Row> rref;  // leading `rank` rows, augmented with rhs
  std::vector<int> pivots;
};

Reduction reduce_equalities(const LinearSystem& sys) {
  const auto n = static_cast<std::size_t>(sys.ambient_dim);
  Reduction out;
  for (const auto& e : sys.equalities) {
    if (is_zero_row(e.row, n)) {
      if (sgn(e.rhs) != 0) out.consistent = false;
      continue;
    }
    Row r = e.row;
    r.push_back(e.rhs);
    out.rref.push_back(std::move(r));
  }
  if (!out.consistent) return out;
  out.pivots = reduce(out.rref, sys.ambient_dim);
  out.rank = static_cast<int>(out.pivots.size());
  for (std::size_t i = out.pivots.size(); i < out.rref.size(); ++i) {
    if (sgn(out.rref[i][n]) != 0) {
      out.consistent = false;
      return out;
    }
  }
  out.rref.resize(out.pivots.size());
  return out;
}

}  // namespace

FeasibilityResult strictly_feasible(const LinearSystem& sys) {
  sys.validate();
  const auto n = static_cast<std::size_t>(sys.ambient_dim);

  for (const auto& s : sys.strict_inequalities) {
    if (is_zero_row(s.row, n) && sgn(s.rhs) <= 0) return {};
  }
  const Reduction red = reduce_equalities(sys);
  if (!red.consistent) return {};

  std::vector<bool> is_pivot(n, false);
  for (int p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
  }

  // Substitute w_pivot = rhs - sum_f R[f] w_f into every strict row.
  std::vector<Row> g;
  std::vector<Rational> h;
  for (const auto& s : sys.strict_inequalities) {
    Row gi(free_cols.size());
    Rational hi = s.rhs;
    for (std::size_t f = 0; f < free_cols.size(); ++f) gi[f] = s.row[static_cast<std::size_t>(free_cols[f])];
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      const Rational& a = s.row[static_cast<std::size_t>(red.pivots[r])];
      if (sgn(a) == 0) continue;
      hi -= a * red.rref[r][n];
      for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const Rational& m = red.rref[r][static_cast<std::size_t>(free_cols[f])];
        if (sgn(m) != 0) gi[f] -= a * m;
      }
    }
    if (is_zero_row(gi, gi.size())) {
      if (sgn(hi) <= 0) return {};
      continue;
    }
    g.push_back(std::move(gi));
    h.push_back(std::move(hi));
  }

  std::vector<Rational> y(free_cols.size());
  if (!g.empty()) {
    SlackLp lp(g, h, static_cast<int>(free_cols.size()));
    if (sgn(lp.solve()) <= 0) return {};
    y = lp.free_values();
  }

  std::vector<Rational> w(n);
  for (std::size_t f = 0; f < free_cols.size(); ++f) w[static_cast<std::size_t>(free_cols[f])] = y[f];
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    Rational v = red.rref[r][n];
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      const Rational& m = red.rref[r][static_cast<std::size_t>(free_cols[f])];
      if (sgn(m) != 0) v -= m * y[f];
    }
    w[static_cast<std::size_t>(red.pivots[r])] = std::move(v);
  }
  return {true, std::move(w)};
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != ambient_dim) return false;
  for (const auto& e : equalities) {
    if (dot(e.row, point) != e.rhs) return false;
  }
  for (const auto& s : strict_inequalities) {
    if (!(dot(s.row, point) < s.rhs)) return false;
  }
  return true;
}

CellResult cell_dimension(const LinearSystem& sys) {
  auto feas = strictly_feasible(sys);
  if (!feas.feasible) return {};
  std::vector<Row> rows;
  rows.reserve(sys.equalities.size());
  for (const auto& e : sys.equalities) rows.push_back(e.row);
  const int r = rows.empty() ? 0 : rank(rows);
  return {true, sys.ambient_dim - r, std::move(*feas.witness)};
}

}  // namespace tropseq
