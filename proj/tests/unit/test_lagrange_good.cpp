#include <catch2/catch_amalgamated.hpp>

#include "fgi/errors.hpp"
#include "fgi/inversion/lagrange_good.hpp"
#include "support/random_systems.hpp"

using namespace fgi;
using fgi::testing::Rng;

namespace {

// e^u truncated at `trunc`
Series exp_u(unsigned trunc) {
  return exp_series(Series::variable(1, trunc, 0));
}

}  // namespace

TEST_CASE("tree function", "[lagrange-good]") {
  const SeriesSystem g({exp_u(5)});
  const SeriesSystem f = lg_solve(g, 5);
  // d^{d-1}/d!
  const Rational expected[] = {0, 1, 1, Rational(3, 2), Rational(8, 3), Rational(125, 24)};
  for (unsigned d = 0; d <= 5; ++d) CHECK(f[0].coeff(MultiIndex{d}) == expected[d]);
  CHECK(lg_solve_oracle(g, 5) == f);
  CHECK(lg_solve_by_trees(g, 5).series == f);
  CHECK_THROWS_AS(lg_solve(SeriesSystem({exp_u(2)}), 5), std::invalid_argument);
}

TEST_CASE("Catalan from (1+u)^2", "[lagrange-good]") {
  const Series u = Series::variable(1, 5, 0);
  const Series one = Series::constant(1, 5, 1);
  const SeriesSystem g({(one + u) * (one + u)});
  const SeriesSystem f = lg_solve(g, 6);
  const Rational expected[] = {0, 1, 2, 5, 14, 42, 132};
  for (unsigned d = 0; d <= 6; ++d) CHECK(f[0].coeff(MultiIndex{d}) == expected[d]);
}

TEST_CASE("degenerate systems", "[lagrange-good]") {
  const Series u0 = Series::variable(2, 3, 0), u1 = Series::variable(2, 3, 1);
  const SeriesSystem zero_at_origin({u0 * u1, u0 + u1 * u1});
  const SeriesSystem f = lg_solve(zero_at_origin, 4);
  for (std::size_t i = 0; i < 2; ++i) CHECK(f[i].is_zero());

  const SeriesSystem constant({Series::constant(2, 3, 2), Series::constant(2, 3, -1)});
  const LGPartitionRoutes z = lg_partition_Z(constant, 3);
  CHECK(z.det == Series::constant(2, 3, 1));
  CHECK(z.agree());
  const SeriesSystem fc = lg_solve(constant, 3);
  CHECK(fc[0] == Series::variable(2, 3, 0) * Rational(2));
  CHECK(fc[1] == Series::variable(2, 3, 1) * Rational(-1));
}

TEST_CASE("solution routes and partition routes agree", "[lagrange-good]") {
  Rng rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    const SeriesSystem g = testing::random_polynomial_system(rng, n, 4, 3, 0.5);
    const SeriesSystem f = lg_solve(g, 5);
    CHECK(lg_solve_oracle(g, 5) == f);
    CHECK(lg_solve_by_trees(g, 5).series == f);
    const LGPartitionRoutes z = lg_partition_Z(g, 3);
    CHECK(z.det == z.trace);
    CHECK(z.trace == z.diagram);
    CHECK(z.diagram == z.gaussian);
  }
}

TEST_CASE("Lagrange-Good identity", "[lagrange-good]") {
  const SeriesSystem tree({exp_u(3)});
  for (unsigned m = 0; m <= 3; ++m) CHECK(lg_identity_check(tree, MultiIndex{1}, MultiIndex{m}).holds);
  const LGIdentityReport r = lg_identity_check(tree, MultiIndex{0}, MultiIndex{2});
  CHECK(r.holds);
  CHECK(r.lhs == r.rhs);
  // 2! [X^2] 1/(1 - K) for the tree function; d^2 e^{2u} at 0 = 4
  CHECK(r.rhs == 4);

  Rng rng(62);
  for (int trial = 0; trial < 3; ++trial) {
    const SeriesSystem g = testing::random_polynomial_system(rng, 2, 3, 3, 0.5);
    for (const MultiIndex& omega : {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{1, 1}})
      for (unsigned d = 0; d <= 3; ++d)
        for (const auto& m : multi_indices_of_degree(2, d)) CHECK(lg_identity_check(g, omega, m).holds);
  }
}

TEST_CASE("matrix variables", "[lagrange-good][matrix]") {
  CHECK(matrix_variable(1, 0, 2) == 2);
  CHECK(matrix_variable(0, 1, 2) == 1);

  Rng rng(63);
  for (int trial = 0; trial < 3; ++trial) {
    const SeriesSystem g = testing::random_polynomial_system(rng, 2, 2, 1, 0.7);
    for (const MultiIndex& omega : {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{1, 1}}) {
      const LGMatrixReport r = lg_matrix_identity_check(g, omega, 2);
      CHECK(r.holds);
      CHECK(r.lhs == r.rhs);
    }
  }
  // scalar X reduces to the diagonal case
  const SeriesSystem g1({Series::constant(1, 3, 1) + Series::variable(1, 3, 0)});
  CHECK(lg_matrix_solve(g1, 3) == lg_solve(g1, 3));
  CHECK_THROWS_AS(lg_matrix_identity_check(testing::random_polynomial_system(rng, 4, 6, 1, 0.5), MultiIndex{0, 0, 0, 0}, 6),
                  resource_error);
}
