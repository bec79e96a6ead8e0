#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tropseq/polyhedra.hpp"

#include <doctest.h>

using namespace tropseq;
using tropseq::testing::Rng;

namespace {

Row row(std::initializer_list<long> xs) {
  Row r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank({row({1, 0, 0}), row({0, 1, 0})}) == 2);
  CHECK(rank({row({1, 1}), row({2, 2})}) == 1);
  CHECK(rank({}) == 0);
  CHECK(rank({row({0, 0})}) == 0);
  CHECK_THROWS_AS(rank({row({1, 0}), row({1})}), std::invalid_argument);
}

TEST_CASE("strictly_feasible examples") {
  LinearSystem a(3);
  a.add_equality(row({1, -1, 0}), 0);
  a.add_strict(row({1, 0, -1}), 0);
  const auto fa = strictly_feasible(a);
  REQUIRE(fa.feasible);
  CHECK(a.satisfied_by(*fa.witness));

  LinearSystem b(1);
  b.add_strict(row({1}), 0);
  b.add_strict(row({-1}), -1);
  CHECK_FALSE(strictly_feasible(b).feasible);

  LinearSystem c(2);
  c.add_equality(row({1, 0}), 0);
  c.add_equality(row({1, 0}), 1);
  CHECK_FALSE(strictly_feasible(c).feasible);
}

TEST_CASE("zero rows are decided up front") {
  LinearSystem a(2);
  a.add_strict(row({0, 0}), 0);
  CHECK_FALSE(strictly_feasible(a).feasible);
  LinearSystem b(2);
  b.add_equality(row({0, 0}), 3);
  CHECK_FALSE(strictly_feasible(b).feasible);
  LinearSystem c(2);
  c.add_strict(row({0, 0}), 1);
  c.add_equality(row({0, 0}), 0);
  CHECK(strictly_feasible(c).feasible);
}

TEST_CASE("ragged systems are rejected") {
  LinearSystem a(2);
  a.add_strict(row({1}), 0);
  CHECK_THROWS_AS(strictly_feasible(a), std::invalid_argument);
}

TEST_CASE("cell_dimension examples") {
  LinearSystem a(3);
  a.add_equality(row({1, -1, 0}), 0);
  a.add_strict(row({1, 0, -1}), 0);
  const auto ca = cell_dimension(a);
  REQUIRE(ca.feasible);
  CHECK(ca.dimension == 2);
  // Two independent feasible directions around the witness.
  CHECK(testing::perturbation_dimension(a, ca.witness) == 2);

  CHECK(cell_dimension(LinearSystem(2)).dimension == 2);

  LinearSystem line(3);
  line.add_equality(row({1, -1, 0}), 0);
  line.add_equality(row({0, 1, -1}), 0);
  line.add_strict(row({0, 0, 0}), 1);
  const auto cl = cell_dimension(line);
  CHECK(cl.feasible);
  CHECK(cl.dimension == 1);

  LinearSystem empty(1);
  empty.add_strict(row({1}), 0);
  empty.add_strict(row({-1}), 0);
  CHECK_FALSE(cell_dimension(empty).feasible);
}

TEST_CASE("a thin but open slab is feasible") {
  // 0 < x0 - x1 < 1/1000, x2 = x0 + x1
  LinearSystem ls(3);
  ls.add_strict(row({-1, 1, 0}), 0);
  ls.add_strict(row({1, -1, 0}), ratio(1, 1000));
  ls.add_equality(row({1, 1, -1}), 0);
  const auto c = cell_dimension(ls);
  REQUIRE(c.feasible);
  CHECK(c.dimension == 2);
  CHECK(ls.satisfied_by(c.witness));
}

TEST_CASE("property: agrees with Fourier-Motzkin and the perturbation oracle") {
  Rng rng(31);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto ls = testing::random_linear_system(rng);
    const auto c = cell_dimension(ls);
    REQUIRE(c.feasible == testing::fm_strictly_feasible(ls));
    if (!c.feasible) {
      ++infeasible;
      continue;
    }
    ++feasible;
    CHECK(testing::point_in_cell(ls, c.witness));
    CHECK(testing::perturbation_dimension(ls, c.witness) == c.dimension);
    CHECK(c.dimension >= 0);
    CHECK(c.dimension <= ls.ambient_dim);
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 50);
}

TEST_CASE("property: monotonicity under added constraints") {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    auto ls = testing::random_linear_system(rng);
    const auto base = cell_dimension(ls);
    if (!base.feasible) continue;
    const auto n = static_cast<std::size_t>(ls.ambient_dim);

    auto more_eq = ls;
    Row r(n);
    for (auto& x : r) x = testing::uniform(rng, -2, 2);
    more_eq.add_equality(r, testing::uniform(rng, -3, 3));
    const auto e = cell_dimension(more_eq);
    if (e.feasible) CHECK(e.dimension <= base.dimension);

    auto more_strict = ls;
    more_strict.add_strict(r, testing::uniform(rng, -3, 3));
    const auto s = cell_dimension(more_strict);
    if (s.feasible) CHECK(s.dimension == base.dimension);
  }
}

TEST_CASE("property: deterministic verdicts and witnesses") {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ls = testing::random_linear_system(rng);
    const auto a = cell_dimension(ls);
    const auto b = cell_dimension(ls);
    CHECK(a.feasible == b.feasible);
    CHECK(a.dimension == b.dimension);
    CHECK(a.witness == b.witness);
  }
}
