#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "fgi/errors.hpp"
#include "fgi/permanent.hpp"
#include "fgi/wick.hpp"
#include "support/random_systems.hpp"

using namespace fgi;
using fgi::testing::Rng;

TEST_CASE("pairing sums on Kronecker covariances", "[wick]") {
  const Matrix id = Matrix::identity(2);
  CHECK(pairing_sum(id, {0}, {0}) == 1);
  CHECK(pairing_sum(id, {0, 1}, {1, 0}) == 1);
  CHECK(pairing_sum(id, {0}, {0, 1}) == 0);
  CHECK(pairing_sum(id, {}, {}) == 1);
}

TEST_CASE("naive and Ryser pairing sums agree", "[wick][permanent]") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a_inv = testing::random_matrix(rng, 2, 2);
    IndexMap t1, t2;
    for (int k = 0; k < 3; ++k) {
      t1.push_back(static_cast<std::size_t>(rng.uniform(0, 1)));
      t2.push_back(static_cast<std::size_t>(rng.uniform(0, 1)));
    }
    const Rational naive = pairing_sum(a_inv, t1, t2, PermanentMethod::naive);
    CHECK(pairing_sum(a_inv, t1, t2, PermanentMethod::ryser) == naive);
    CHECK(pairing_sum(a_inv, t1, t2) == naive);
  }
}

TEST_CASE("Wick moments are permanents", "[wick]") {
  const CovarianceSpec id = CovarianceSpec::identity(1);
  CHECK(wick_moment(id, {0}, {0, 0}) == 0);
  CHECK(wick_moment(id, {0, 0}, {0, 0}) == 2);

  const CovarianceSpec cov(Matrix(std::vector<std::vector<Rational>>{{2, 1}, {1, 1}}));
  // A^{-1} = [[1,-1],[-1,2]]; per of rows (0,1) cols (0,1)
  CHECK(wick_moment(cov, {0, 1}, {0, 1}) == 1 * 2 + (-1) * (-1));
  CHECK(wick_moment(cov, {0, 1}, {0, 1}) == pairing_sum(cov.A_inv, {0, 1}, {0, 1}, PermanentMethod::naive));
  CHECK_THROWS_AS(CovarianceSpec(Matrix(std::vector<std::vector<Rational>>{{1, 1}, {1, 1}})), singular_matrix_error);
}

TEST_CASE("Gaussian integrals of monomials", "[wick]") {
  const CovarianceSpec a(Matrix(std::vector<std::vector<Rational>>{{3}}));
  CHECK(gaussian_integral_monomial(a, MultiIndex{0}, MultiIndex{0}) == Rational(1, 3));
  CHECK(gaussian_integral_monomial(a, MultiIndex{1}, MultiIndex{1}) == Rational(1, 9));
  const CovarianceSpec id2 = CovarianceSpec::identity(2);
  CHECK(gaussian_integral_monomial(id2, MultiIndex{2, 0}, MultiIndex{2, 0}) == 2);

  // identity covariance: alpha! on the diagonal, zero elsewhere
  for (unsigned d = 0; d <= 4; ++d)
    for (const auto& p : multi_indices_of_degree(3, d))
      for (const auto& q : multi_indices_of_degree(3, d)) {
        const Rational v = gaussian_integral_monomial(CovarianceSpec::identity(3), p, q);
        CHECK(v == (p == q ? Rational(p.factorial()) : Rational(0)));
      }

  // any representative of alpha gives the same value
  Rng rng(22);
  const CovarianceSpec cov(testing::random_invertible(rng, 3));
  const MultiIndex a1{1, 2, 0}, a2{0, 1, 2};
  const Rational ref = gaussian_integral_monomial(cov, a1, a2);
  IndexMap t1 = representative_index_map(a1), t2 = representative_index_map(a2);
  std::reverse(t1.begin(), t1.end());
  std::rotate(t2.begin(), t2.begin() + 1, t2.end());
  CHECK(pairing_sum(cov.A_inv, t1, t2) / cov.det_A == ref);
}

TEST_CASE("contingency-table pairing sums match permanents", "[wick]") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const Matrix a_inv = testing::random_matrix(rng, n, n);
    const unsigned d = static_cast<unsigned>(rng.uniform(0, 5));
    const auto all = multi_indices_of_degree(n, d);
    const MultiIndex& a1 = all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
    const MultiIndex& a2 = all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
    CHECK(pairing_sum_by_tables(a_inv, a1, a2) ==
          pairing_sum(a_inv, representative_index_map(a1), representative_index_map(a2), PermanentMethod::naive));
  }
}

TEST_CASE("three-block integrals factor", "[wick]") {
  const CovarianceSpec id = CovarianceSpec::identity(2);
  const MultiIndex z{0, 0}, e{1, 0};
  CHECK(gaussian_integral_triple(id, id, id, {z, z, z, z, z, z}) == 1);
  CHECK(gaussian_integral_triple(id, id, id, {e, z, z, z, z, z}) == 0);
  CHECK(gaussian_integral_triple(id, id, id, {e, e, z, z, z, z}) == 1);
  const CovarianceSpec two(Matrix(std::vector<std::vector<Rational>>{{2, 0}, {0, 1}}));
  CHECK(gaussian_integral_triple(two, id, two, {z, z, z, z, z, z}) == Rational(1, 4));
}

TEST_CASE("Gaussian integration of series enforces summability", "[wick]") {
  const CovarianceSpec one = CovarianceSpec::identity(1);
  GaussianIntegrand unit(1, 1, 2);
  unit.add(MultiIndex{0}, MultiIndex{0}, Series::constant(1, 2, 1));
  CHECK(gaussian_integral_series(one, unit) == Series::constant(1, 2, 1));

  GaussianIntegrand pair(1, 1, 2);
  pair.add(MultiIndex{1}, MultiIndex{1}, Series::variable(1, 2, 0));
  CHECK(gaussian_integral_series(one, pair) == Series::variable(1, 2, 0));

  GaussianIntegrand partial(1, 1, 2);
  partial.complete_through = 3;
  partial.add(MultiIndex{3}, MultiIndex{3}, Series::variable(1, 2, 0));
  CHECK_THROWS_AS(gaussian_integral_series(one, partial), summability_error);
  CHECK_THROWS_AS(gaussian_integral_series(one, partial, 4), summability_error);
  CHECK_THROWS_AS(gaussian_integral_series(one, partial, 2), summability_error);
  CHECK(gaussian_integral_series(one, partial, 3) == Series::variable(1, 2, 0) * Rational(6));
}

TEST_CASE("relabeling invariance of pairing sums", "[wick]") {
  Rng rng(24);
  const Matrix a_inv = testing::random_matrix(rng, 3, 3);
  for (std::size_t k = 1; k <= 4; ++k) {
    IndexMap t1(k), t2(k);
    for (std::size_t i = 0; i < k; ++i) {
      t1[i] = static_cast<std::size_t>(rng.uniform(0, 2));
      t2[i] = static_cast<std::size_t>(rng.uniform(0, 2));
    }
    const Rational ref = pairing_sum(a_inv, t1, t2, PermanentMethod::naive);
    std::vector<std::size_t> r1(k), r2(k);
    std::iota(r1.begin(), r1.end(), 0);
    do {
      std::iota(r2.begin(), r2.end(), 0);
      do {
        IndexMap s1(k), s2(k);
        for (std::size_t i = 0; i < k; ++i) {
          s1[i] = t1[r1[i]];
          s2[i] = t2[r2[i]];
        }
        CHECK(pairing_sum(a_inv, s1, s2) == ref);
      } while (std::next_permutation(r2.begin(), r2.end()));
    } while (std::next_permutation(r1.begin(), r1.end()));
  }
}

TEST_CASE("permanent kernels", "[permanent]") {
  CHECK(permanent_naive(Matrix(0, 0)) == 1);
  CHECK(permanent_ryser(Matrix(0, 0)) == 1);
  CHECK(permanent(Matrix(std::vector<std::vector<Rational>>{{1, 1}, {1, 1}})) == 2);
  Matrix ones(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) ones(i, j) = 1;
  CHECK(permanent_ryser(ones) == 720);
  Rng rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 6));
    const Matrix m = testing::random_matrix(rng, k, k, 5, 4);
    CHECK(permanent_ryser(m) == permanent_naive(m));
  }
}
