#include "tropseq/dimension.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace tropseq {

std::vector<int> positions(WindowSet s) {
  std::vector<int> out;
  for (int k = 0; s != 0; ++k, s >>= 1) {
    if (s & 1U) out.push_back(k);
  }
  return out;
}

const std::vector<WindowSet>& subset_order(int order) {
  static std::map<int, std::vector<WindowSet>> cache;
  static std::mutex mu;
  if (order < 1 || order > 30) throw std::invalid_argument("subset_order: unsupported order");
  std::lock_guard lock(mu);
  auto& sets = cache[order];
  if (sets.empty()) {
    const WindowSet full = (WindowSet{1} << (order + 1)) - 1;
    for (WindowSet s = 1; s <= full; ++s) {
      if (std::popcount(s) >= 2) sets.push_back(s);
    }
    const auto key = [](WindowSet s) {
      const int lo = std::countr_zero(s);
      const int hi = 31 - std::countl_zero(s);
      return std::tuple(std::popcount(s), hi - lo, lo, s);
    };
    std::sort(sets.begin(), sets.end(), [&](WindowSet a, WindowSet b) { return key(a) < key(b); });
  }
  return sets;
}

namespace {

Row difference_row(int n, int plus, int minus) {
  Row r(static_cast<std::size_t>(n));
  r[static_cast<std::size_t>(plus)] = 1;
  r[static_cast<std::size_t>(minus)] = -1;
  return r;
}

int window_count(int n, int order) { return std::max(0, n - order); }

/// Coefficient values A_k(j) for every window, evaluated once.
std::vector<std::vector<Rational>> coefficient_table(const HolonomicSystem& sys, int windows) {
  std::vector<std::vector<Rational>> table(static_cast<std::size_t>(windows));
  for (int j = 0; j < windows; ++j) {
    for (int k = 0; k <= sys.order(); ++k) table[static_cast<std::size_t>(j)].push_back(sys.coeff(k)(j));
  }
  return table;
}

/// Appends the constraints of window j with tie set s; returns (#equalities, #strict) added.
std::pair<std::size_t, std::size_t> append_window(LinearSystem& ls, const std::vector<Rational>& coef, int order,
                                                  int j, WindowSet s) {
  const auto tied = positions(s);
  std::size_t eq = 0;
  std::size_t st = 0;
  for (std::size_t t = 0; t + 1 < tied.size(); ++t) {
    const int p = tied[t];
    const int q = tied[t + 1];
    // w_{j+p} + A_p(j) = w_{j+q} + A_q(j)
    ls.add_equality(difference_row(ls.ambient_dim, j + p, j + q),
                    coef[static_cast<std::size_t>(q)] - coef[static_cast<std::size_t>(p)]);
    ++eq;
  }
  const int p = tied.front();
  for (int r = 0; r <= order; ++r) {
    if (s & (WindowSet{1} << r)) continue;
    // w_{j+p} + A_p(j) < w_{j+r} + A_r(j)
    ls.add_strict(difference_row(ls.ambient_dim, j + p, j + r),
                  coef[static_cast<std::size_t>(r)] - coef[static_cast<std::size_t>(p)]);
    ++st;
  }
  return {eq, st};
}

void validate_pattern(const Pattern& pat, int order, int n) {
  if (pat.order != order) throw std::invalid_argument("pattern order does not match the system");
  if (static_cast<int>(pat.windows.size()) != window_count(n, order)) {
    throw std::invalid_argument("pattern has " + std::to_string(pat.windows.size()) + " windows, expected " +
                                std::to_string(window_count(n, order)));
  }
  const WindowSet full = (WindowSet{1} << (order + 1)) - 1;
  for (WindowSet s : pat.windows) {
    if ((s & ~full) != 0 || std::popcount(s) < 2) {
      throw std::invalid_argument("pattern window must tie at least two positions in {0..n}");
    }
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

struct Node {
  Pattern prefix;
  LinearSystem partial;
  std::vector<Rational> witness;
};

/**
 * Depth-first enumeration of attainment patterns, window by window.
 *
 * With pruning, a child inherits its parent's witness when the new
 * coordinate w_{j+n} alone can realize the child's tie set; otherwise the
 * partial system is handed to strictly_feasible.
 */
class Enumerator {
 public:
  Enumerator(const HolonomicSystem& sys, int n, bool prune)
      : order_(sys.order()),
        n_(n),
        windows_(window_count(n, sys.order())),
        prune_(prune),
        sets_(subset_order(sys.order())),
        coef_(coefficient_table(sys, windows_)) {}

  int windows() const { return windows_; }

  Node root() const {
    Node node{Pattern{order_, {}}, LinearSystem(n_), std::vector<Rational>(static_cast<std::size_t>(n_))};
    return node;
  }

  /// Children of a node that survive pruning, in enumeration order.
  std::vector<Node> children(const Node& node) const {
    std::vector<Node> out;
    const int j = static_cast<int>(node.prefix.windows.size());
    for (WindowSet s : sets_) {
      Node child = node;
      append_window(child.partial, coef_[static_cast<std::size_t>(j)], order_, j, s);
      child.prefix.windows.push_back(s);
      if (prune_ && !feasible_child(child, j, s)) continue;
      out.push_back(std::move(child));
    }
    return out;
  }

  template <class Leaf>
  void explore(Node& node, Leaf&& leaf) const {
    const int j = static_cast<int>(node.prefix.windows.size());
    if (j == windows_) {
      visit_leaf(node, leaf);
      return;
    }
    const std::vector<Rational> saved = prune_ ? node.witness : std::vector<Rational>{};
    for (WindowSet s : sets_) {
      const auto [eq, st] = append_window(node.partial, coef_[static_cast<std::size_t>(j)], order_, j, s);
      node.prefix.windows.push_back(s);
      if (!prune_ || feasible_child(node, j, s)) explore(node, leaf);
      node.prefix.windows.pop_back();
      node.partial.equalities.resize(node.partial.equalities.size() - eq);
      node.partial.strict_inequalities.resize(node.partial.strict_inequalities.size() - st);
      if (prune_) node.witness = saved;
    }
  }

 private:
  template <class Leaf>
  void visit_leaf(const Node& node, Leaf& leaf) const {
    CellResult cell;
    if (prune_) {
      cell.witness = node.witness;
    } else {
      auto f = strictly_feasible(node.partial);
      if (!f.feasible) return;
      cell.witness = std::move(*f.witness);
    }
    cell.feasible = true;
    std::vector<Row> rows;
    rows.reserve(node.partial.equalities.size());
    for (const auto& e : node.partial.equalities) rows.push_back(e.row);
    cell.dimension = n_ - rank(rows);
    leaf(node.prefix, std::move(cell));
  }

  /// Updates node.witness in place; false if the partial system is not strictly feasible.
  bool feasible_child(Node& node, int j, WindowSet s) const {
    if (try_inherit(node.witness, j, s)) return true;
    auto f = strictly_feasible(node.partial);
    if (!f.feasible) return false;
    node.witness = std::move(*f.witness);
    return true;
  }

  bool try_inherit(std::vector<Rational>& w, int j, WindowSet s) const {
    const auto& c = coef_[static_cast<std::size_t>(j)];
    const WindowSet head = s & ~(WindowSet{1} << order_);
    const int lo = std::countr_zero(head);
    const Rational m = w[static_cast<std::size_t>(j + lo)] + c[static_cast<std::size_t>(lo)];
    for (int k = 0; k < order_; ++k) {
      const Rational v = w[static_cast<std::size_t>(j + k)] + c[static_cast<std::size_t>(k)];
      if ((head >> k) & 1U) {
        if (v != m) return false;
      } else if (!(v > m)) {
        return false;
      }
    }
    const bool tail_tied = (s >> order_) & 1U;
    w[static_cast<std::size_t>(j + order_)] = m - c[static_cast<std::size_t>(order_)] + (tail_tied ? 0 : 1);
    return true;
  }

  int order_;
  int n_;
  int windows_;
  bool prune_;
  const std::vector<WindowSet>& sets_;
  std::vector<std::vector<Rational>> coef_;
};

/**
 * Splits the tree into independent subtrees and explores them on `jobs`
 * threads. Returns one accumulator per subtree in enumeration order, so a
 * sequential fold over the result is independent of the thread count.
 */
template <class Acc, class Leaf>
std::vector<Acc> run(const Enumerator& en, const EnumerationOptions& opts, Leaf leaf) {
  const int jobs = std::max(1, opts.jobs);
  std::vector<Node> frontier{en.root()};
  if (jobs > 1) {
    for (int depth = 0; depth < en.windows() && frontier.size() < static_cast<std::size_t>(8 * jobs); ++depth) {
      std::vector<Node> next;
      for (const auto& node : frontier) {
        for (auto& child : en.children(node)) next.push_back(std::move(child));
      }
      frontier = std::move(next);
    }
  }
  std::vector<Acc> results(frontier.size());
  std::atomic<std::size_t> cursor{0};
  const auto work = [&] {
    for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
      en.explore(frontier[i], [&](const Pattern& p, CellResult&& cell) { leaf(results[i], p, std::move(cell)); });
    }
  };
  const int threads = std::min<int>(jobs, static_cast<int>(frontier.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return results;
}

}  // namespace

LinearSystem pattern_to_system(const HolonomicSystem& sys, const Pattern& pat, int n) {
  if (n < 0) throw std::invalid_argument("pattern_to_system: negative length");
  validate_pattern(pat, sys.order(), n);
  const auto coef = coefficient_table(sys, window_count(n, sys.order()));
  LinearSystem ls(n);
  for (std::size_t j = 0; j < pat.windows.size(); ++j) {
    append_window(ls, coef[j], sys.order(), static_cast<int>(j), pat.windows[j]);
  }
  return ls;
}

AttainmentGraph attainment_graph(const Pattern& pat, int n) {
  validate_pattern(pat, pat.order, n);
  AttainmentGraph g{n, {}};
  for (std::size_t j = 0; j < pat.windows.size(); ++j) {
    const auto tied = positions(pat.windows[j]);
    for (std::size_t a = 0; a < tied.size(); ++a) {
      for (std::size_t b = a + 1; b < tied.size(); ++b) {
        g.edges.emplace_back(static_cast<int>(j) + tied[a], static_cast<int>(j) + tied[b]);
      }
    }
  }
  return g;
}

std::vector<int> component_labels(const AttainmentGraph& g) {
  DisjointSets ds(g.vertex_count);
  for (const auto& [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count) {
      throw std::invalid_argument("attainment graph edge out of range");
    }
    ds.unite(a, b);
  }
  std::vector<int> labels(static_cast<std::size_t>(g.vertex_count));
  std::map<int, int> seen;
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto [it, fresh] = seen.try_emplace(ds.find(v), static_cast<int>(seen.size()));
    labels[static_cast<std::size_t>(v)] = it->second;
  }
  return labels;
}

int components(const AttainmentGraph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<Interval> intervals(const std::vector<int>& labels) {
  std::vector<Interval> out;
  const int n = static_cast<int>(labels.size());
  for (int start = 0; start < n;) {
    int end = start;
    while (end + 1 < n && labels[static_cast<std::size_t>(end + 1)] == labels[static_cast<std::size_t>(start)]) ++end;
    if (end > start) out.push_back({start, end});
    start = end + 1;
  }
  return out;
}

std::vector<FeasibleCell> feasible_cells(const HolonomicSystem& sys, int n, const EnumerationOptions& opts) {
  if (n < 0) throw std::invalid_argument("feasible_cells: negative length");
  const Enumerator en(sys, n, opts.prune);
  using Acc = std::vector<FeasibleCell>;
  auto parts = run<Acc>(en, opts, [](Acc& acc, const Pattern& p, CellResult&& cell) {
    acc.push_back({p, std::move(cell)});
  });
  Acc out;
  for (auto& part : parts) {
    for (auto& c : part) out.push_back(std::move(c));
  }
  return out;
}

DimResult dim_WN(const HolonomicSystem& sys, int n, const EnumerationOptions& opts) {
  if (n < 0) throw std::invalid_argument("dim_WN: negative length");
  const Enumerator en(sys, n, opts.prune);
  using Acc = std::optional<DimResult>;
  auto parts = run<Acc>(en, opts, [](Acc& best, const Pattern& p, CellResult&& cell) {
    if (!best || cell.dimension > best->dim) best = DimResult{cell.dimension, p, std::move(cell.witness)};
  });
  Acc best;
  for (auto& part : parts) {
    if (part && (!best || part->dim > best->dim)) best = std::move(part);
  }
  // Some pattern is always feasible (extend any sequence greedily), so best is set.
  if (!best) throw std::logic_error("dim_WN: no feasible pattern found");
  return *best;
}

ScanReport entropy_scan(const HolonomicSystem& sys, int n_min, int n_max, const EnumerationOptions& opts) {
  if (n_min < 2 || n_max < n_min) throw std::invalid_argument("entropy_scan: need 2 <= n_min <= n_max");
  ScanReport report{sys, {}, std::nullopt};
  if (sys.order() == 2) report.classified_entropy = classify(sys).entropy;
  for (int n = n_min; n <= n_max; ++n) {
    const int d = dim_WN(sys, n, opts).dim;
    report.rows.push_back({n, d, ratio(d, n)});
  }
  return report;
}

namespace {

void check_cell(const EntropyClass& cls, int n, const FeasibleCell& fc, std::vector<Violation>& out) {
  const auto graph = attainment_graph(fc.pattern, n);
  const auto labels = component_labels(graph);
  const int comps = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  const auto runs = intervals(labels);
  const long threshold = 4 * cls.j0;
  const auto flag = [&](std::string rule, std::string detail) {
    out.push_back({std::move(rule), std::move(detail), fc.pattern, graph});
  };
  const auto label = [&](int v) { return labels[static_cast<std::size_t>(v)]; };

  if (fc.cell.dimension > comps) {
    flag("component-bound",
         "cell dimension " + std::to_string(fc.cell.dimension) + " exceeds " + std::to_string(comps) + " components");
  }

  if (cls.case_id == EntropyCase::Case1 || cls.case_id == EntropyCase::Case2) {
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
      const Interval& left = runs[i];
      const Interval& right = runs[i + 1];
      if (left.last < threshold) continue;
      if (right.first == left.last + 1) {
        flag("adjacent-intervals", "intervals [" + std::to_string(left.first) + "," + std::to_string(left.last) +
                                       "] and [" + std::to_string(right.first) + "," +
                                       std::to_string(right.last) + "] adjoin");
        continue;
      }
      for (int v = left.last; v + 2 <= right.first; ++v) {
        if (label(v) != label(v + 2)) {
          flag("alternation", "vertices " + std::to_string(v) + " and " + std::to_string(v + 2) +
                                  " between intervals lie in different components");
          break;
        }
      }
    }
  }

  if (cls.case_id == EntropyCase::Case2) {
    for (const auto& iv : runs) {
      if (iv.length() == 2 && iv.first > threshold && iv.first + 2 <= n - 1) {
        flag("short-interval", "interval [" + std::to_string(iv.first) + "," + std::to_string(iv.last) +
                                   "] of length 2 beyond 4*j0 = " + std::to_string(threshold));
      }
    }
  }

  if (cls.case_id == EntropyCase::Case3 && eventual_sign(cls.d) > 0 && !cls.e.is_zero()) {
    std::vector<Interval> late;
    for (const auto& iv : runs) {
      if (iv.first > threshold) late.push_back(iv);
    }
    if (late.size() > 1) {
      flag("single-tail-interval", std::to_string(late.size()) + " intervals start beyond 4*j0 = " +
                                       std::to_string(threshold));
    } else if (late.size() == 1 && late.front().last != n - 1) {
      flag("single-tail-interval", "interval [" + std::to_string(late.front().first) + "," +
                                       std::to_string(late.front().last) + "] does not reach vertex " +
                                       std::to_string(n - 1));
    }
  }
}

}  // namespace

std::vector<Violation> lemma_violations(const EntropyClass& cls, int n, const FeasibleCell& cell) {
  std::vector<Violation> out;
  check_cell(cls, n, cell, out);
  return out;
}

LemmaReport lemma_predicates(const HolonomicSystem& sys, int n, const EnumerationOptions& opts) {
  LemmaReport report{classify(sys), n, 0, {}};
  const auto cells = feasible_cells(sys, n, opts);
  report.cells_checked = cells.size();
  for (const auto& fc : cells) check_cell(report.classification, n, fc, report.violations);
  return report;
}

}  // namespace tropseq
