#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tropseq/dimension.hpp"

#include <doctest.h>

using namespace tropseq;
using tropseq::testing::Rng;

namespace {

Polynomial k(long c) { return Polynomial::constant(c); }

constexpr WindowSet S01 = 0b011;
constexpr WindowSet S12 = 0b110;
constexpr WindowSet S02 = 0b101;
constexpr WindowSet S012 = 0b111;

Row row(std::initializer_list<long> xs) {
  Row r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("subset order") {
  CHECK(subset_order(2) == std::vector<WindowSet>{S01, S12, S02, S012});
  CHECK(subset_order(1) == std::vector<WindowSet>{0b11});
  CHECK(subset_order(3).size() == 11);
  CHECK(positions(S02) == std::vector<int>{0, 2});
}

TEST_CASE("pattern_to_system examples") {
  const HolonomicSystem zero(k(0), k(0), k(0));
  const auto a = pattern_to_system(zero, Pattern{2, {S01}}, 3);
  REQUIRE(a.equalities.size() == 1);
  CHECK(a.equalities[0].row == row({1, -1, 0}));
  CHECK(a.equalities[0].rhs == 0);
  REQUIRE(a.strict_inequalities.size() == 1);
  CHECK(a.strict_inequalities[0].row == row({1, 0, -1}));
  CHECK(a.strict_inequalities[0].rhs == 0);

  const auto b = pattern_to_system(HolonomicSystem(k(0), k(1), k(0)), Pattern{2, {S02}}, 3);
  REQUIRE(b.equalities.size() == 1);
  CHECK(b.equalities[0].row == row({1, 0, -1}));
  REQUIRE(b.strict_inequalities.size() == 1);
  // w0 < w1 + 1
  CHECK(b.strict_inequalities[0].row == row({1, -1, 0}));
  CHECK(b.strict_inequalities[0].rhs == 1);

  const auto c = pattern_to_system(zero, Pattern{2, {S012}}, 3);
  CHECK(c.equalities.size() == 2);
  CHECK(c.strict_inequalities.empty());
  CHECK(rank({c.equalities[0].row, c.equalities[1].row}) == 2);
}

TEST_CASE("pattern_to_system rejects malformed patterns") {
  const HolonomicSystem zero(k(0), k(0), k(0));
  CHECK_THROWS_AS(pattern_to_system(zero, Pattern{2, {S01}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(pattern_to_system(zero, Pattern{2, {0b001}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(pattern_to_system(zero, Pattern{2, {0b1001}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(pattern_to_system(zero, Pattern{3, {S01}}, 3), std::invalid_argument);
}

TEST_CASE("components") {
  CHECK(components(AttainmentGraph{3, {{0, 1}}}) == 2);
  CHECK(components(AttainmentGraph{5, {}}) == 5);
  CHECK(components(AttainmentGraph{4, {{0, 1}, {1, 2}, {2, 3}}}) == 1);
  CHECK(components(AttainmentGraph{0, {}}) == 0);
  CHECK_THROWS_AS(components(AttainmentGraph{2, {{0, 2}}}), std::invalid_argument);

  const auto g = attainment_graph(Pattern{2, {S012, S02}}, 4);
  CHECK(g.edges.size() == 4);
  CHECK(component_labels(g) == std::vector<int>{0, 0, 0, 0});
  CHECK(component_labels(attainment_graph(Pattern{2, {S01, S12}}, 4)) == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("intervals") {
  CHECK(intervals({0, 0, 1, 2, 2, 2, 1}) == std::vector<Interval>{{0, 1}, {3, 5}});
  CHECK(intervals({0, 1, 0, 1}).empty());
  CHECK(intervals({}).empty());
}

TEST_CASE("dim_WN examples") {
  const HolonomicSystem zero(k(0), k(0), k(0));
  CHECK(dim_WN(zero, 3).dim == 2);
  CHECK(testing::brute_force_dim(zero, 3) == 2);
  CHECK(dim_WN(zero, 2).dim == 2);
  CHECK(dim_WN(HolonomicSystem(k(3), Polynomial::x(), k(-1)), 2).dim == 2);
  CHECK(dim_WN(zero, 0).dim == 0);
  const int d6 = dim_WN(zero, 6).dim;
  CHECK(d6 >= 2);
  CHECK(d6 <= 3);
  CHECK(d6 == testing::brute_force_dim(zero, 6));
}

TEST_CASE("dim_WN agrees with the Fourier-Motzkin brute force") {
  for (const auto& [name, sys] : testing::reference_systems()) {
    for (int n = 0; n <= 7; ++n) {
      INFO(name << " N=" << n);
      CHECK(dim_WN(sys, n).dim == testing::brute_force_dim(sys, n));
    }
  }
}

TEST_CASE("dim_WN for higher order") {
  const HolonomicSystem third(std::vector<Polynomial>{k(0), k(2), k(1), k(0)});
  for (int n = 0; n <= 7; ++n) {
    INFO("N=" << n);
    CHECK(dim_WN(third, n).dim == testing::brute_force_dim(third, n));
  }
}

TEST_CASE("pruning does not change the result") {
  const auto systems = testing::reference_systems();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& [name, sys] = systems[i];
    for (int n = 2; n <= 7; ++n) {
      INFO(name << " N=" << n);
      CHECK(dim_WN(sys, n, {true, 1}).dim == dim_WN(sys, n, {false, 1}).dim);
      const auto pruned = feasible_cells(sys, n, {true, 1});
      const auto full = feasible_cells(sys, n, {false, 1});
      REQUIRE(pruned.size() == full.size());
      for (std::size_t c = 0; c < pruned.size(); ++c) {
        CHECK(pruned[c].pattern == full[c].pattern);
        CHECK(pruned[c].cell.dimension == full[c].cell.dimension);
      }
    }
  }
}

TEST_CASE("parallel enumeration matches sequential") {
  for (const auto& [name, sys] : testing::reference_systems()) {
    INFO(name);
    const auto a = dim_WN(sys, 10, {true, 1});
    const auto b = dim_WN(sys, 10, {true, 3});
    CHECK(a.dim == b.dim);
    CHECK(a.pattern == b.pattern);
    CHECK(a.witness == b.witness);
    const auto ca = feasible_cells(sys, 8, {true, 1});
    const auto cb = feasible_cells(sys, 8, {true, 4});
    REQUIRE(ca.size() == cb.size());
    for (std::size_t c = 0; c < ca.size(); ++c) CHECK(ca[c].pattern == cb[c].pattern);
  }
}

TEST_CASE("cells carry valid witnesses and exact dimensions") {
  for (const auto& [name, sys] : testing::reference_systems()) {
    for (const auto& fc : feasible_cells(sys, 7)) {
      const auto ls = pattern_to_system(sys, fc.pattern, 7);
      CHECK(testing::point_in_cell(ls, fc.cell.witness));
      CHECK(check_sequence(sys, fc.cell.witness).ok);
      CHECK(testing::perturbation_dimension(ls, fc.cell.witness) == fc.cell.dimension);
      const auto direct = cell_dimension(ls);
      CHECK(direct.feasible);
      CHECK(direct.dimension == fc.cell.dimension);
    }
  }
}

TEST_CASE("dimension properties over N") {
  for (const auto& [name, sys] : testing::reference_systems()) {
    int prev = -1;
    for (int n = 1; n <= 12; ++n) {
      INFO(name << " N=" << n);
      const auto r = dim_WN(sys, n);
      CHECK(r.dim >= 1);
      CHECK(r.dim <= n);
      CHECK(r.dim >= prev);
      prev = r.dim;
      CHECK(check_sequence(sys, r.witness).ok);
      CHECK(ratio(r.dim, n) <= ratio(1, 2) + ratio(2, n));
    }
  }
}

TEST_CASE("component bound for every feasible cell") {
  for (const auto& [name, sys] : testing::reference_systems()) {
    for (int n = 2; n <= 9; ++n) {
      for (const auto& fc : feasible_cells(sys, n)) {
        INFO(name << " N=" << n);
        CHECK(fc.cell.dimension <= components(attainment_graph(fc.pattern, n)));
      }
    }
  }
}

TEST_CASE("entropy_scan") {
  const auto report = entropy_scan(HolonomicSystem(k(0), k(1), k(0)), 3, 9);
  REQUIRE(report.rows.size() == 7);
  CHECK(report.classified_entropy == ratio(1, 4));
  for (const auto& r : report.rows) {
    CHECK(r.ratio == ratio(r.dim, r.n));
    CHECK(r.dim <= r.n);
  }
  CHECK_THROWS_AS(entropy_scan(HolonomicSystem(k(0), k(1), k(0)), 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(entropy_scan(HolonomicSystem(k(0), k(1), k(0)), 5, 4), std::invalid_argument);
  const auto first = entropy_scan(HolonomicSystem(std::vector<Polynomial>{k(0), k(0)}), 2, 4);
  CHECK_FALSE(first.classified_entropy.has_value());
}

TEST_CASE("lemma predicates on the reference systems") {
  CHECK(lemma_predicates(HolonomicSystem(k(0), k(0), k(0)), 7).violations.empty());

  const HolonomicSystem c2(k(0), k(1), k(0));
  const auto r2 = lemma_predicates(c2, 8);
  CHECK(r2.violations.empty());
  CHECK(r2.cells_checked > 0);
  // Length-2 intervals only occur where one of their two defining windows is cut off.
  for (const auto& fc : feasible_cells(c2, 8)) {
    for (const auto& iv : intervals(component_labels(attainment_graph(fc.pattern, 8)))) {
      if (iv.length() == 2) CHECK((iv.first == 0 || iv.last == 7));
    }
  }

  const HolonomicSystem c3(k(0), Polynomial::x(), k(0));
  const auto r3 = lemma_predicates(c3, 8);
  CHECK(r3.violations.empty());
  const long threshold = 4 * r3.classification.j0;
  for (const auto& fc : feasible_cells(c3, 8)) {
    int late = 0;
    for (const auto& iv : intervals(component_labels(attainment_graph(fc.pattern, 8)))) {
      if (iv.first > threshold) {
        ++late;
        CHECK(iv.last == 7);
      }
    }
    CHECK(late <= 1);
  }
  CHECK_THROWS_AS(lemma_predicates(HolonomicSystem(std::vector<Polynomial>{k(0), k(0)}), 4), std::invalid_argument);
}

TEST_CASE("lemma checks flag crafted violations") {
  const auto case1 = classify(k(0), k(0), k(0));
  const auto rules = [](const std::vector<Violation>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.rule);
    return out;
  };
  // Intervals {0,1} and {2,3} adjoin.
  const FeasibleCell adjoining{Pattern{2, {S01, S12}}, {true, 2, {}}};
  CHECK(rules(lemma_violations(case1, 4, adjoining)) == std::vector<std::string>{"adjacent-intervals"});

  // More dimensions than components.
  const FeasibleCell inflated{Pattern{2, {S012}}, {true, 2, {}}};
  CHECK(rules(lemma_violations(case1, 3, inflated)) == std::vector<std::string>{"component-bound"});

  // {0,1} | 2 | 3 | {4,5}: the gap alternates with the left interval's component.
  const FeasibleCell alternating{Pattern{2, {S01, S02, S02, S12}}, {true, 2, {}}};
  REQUIRE(component_labels(attainment_graph(alternating.pattern, 6)) == std::vector<int>{0, 0, 1, 0, 1, 1});
  CHECK(lemma_violations(case1, 6, alternating).empty());

  const auto case2 = classify(k(0), k(1), k(0));
  // {1,2} is an interval of length 2 with both neighbouring windows present.
  const FeasibleCell short_run{Pattern{2, {S12, S01, S02}}, {true, 2, {}}};
  const auto short_labels = component_labels(attainment_graph(short_run.pattern, 5));
  CHECK(intervals(short_labels) == std::vector<Interval>{{1, 2}});
  CHECK(rules(lemma_violations(case2, 5, short_run)) == std::vector<std::string>{"short-interval"});

  const auto case3 = classify(k(0), Polynomial::x(), k(0));
  // Interval {5,6} starts beyond 4*j0 = 4 but stops before vertex 8.
  const FeasibleCell stub{Pattern{2, {S02, S02, S02, S01, S12, S01, S02}}, {true, 2, {}}};
  REQUIRE(intervals(component_labels(attainment_graph(stub.pattern, 9))) == std::vector<Interval>{{0, 4}, {5, 6}});
  CHECK(rules(lemma_violations(case3, 9, stub)) == std::vector<std::string>{"single-tail-interval"});
}
