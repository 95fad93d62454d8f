#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "fgi/errors.hpp"
#include "fgi/matrix.hpp"
#include "fgi/multi_index.hpp"
#include "fgi/rational.hpp"
#include "fgi/series.hpp"
#include "fgi/series_json.hpp"
#include "fgi/series_matrix.hpp"
#include "fgi/series_system.hpp"
#include "support/random_systems.hpp"

using namespace fgi;
using fgi::testing::Rng;

namespace {

Series poly(std::size_t n, unsigned d, std::initializer_list<std::pair<MultiIndex, Rational>> terms) {
  Series s(n, d);
  for (const auto& [a, c] : terms) s.add_term(a, c);
  return s;
}

Series x(std::size_t n, unsigned d, std::size_t i) { return Series::variable(n, d, i); }

}  // namespace

TEST_CASE("rational parsing is strict and canonical", "[core][rational]") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+5")) == "5");
  CHECK(to_string(Rational(0)) == "0");
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1/-2", "--1", "1 /2", "0x10"}) {
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(checked_factorial(30), resource_error);
}

TEST_CASE("multiplicity index counts occurrences", "[core][multi_index]") {
  const std::vector<std::size_t> a{0, 1, 0};
  CHECK(multiplicity_index(a, 2) == MultiIndex{2, 1});
  CHECK(multiplicity_index(std::vector<std::size_t>{}, 3) == MultiIndex{0, 0, 0});
  CHECK(multiplicity_index(std::vector<std::size_t>{1, 1, 1}, 2) == MultiIndex{0, 3});
  CHECK_THROWS_AS(multiplicity_index(std::vector<std::size_t>{2}, 2), std::invalid_argument);
  CHECK(representative_index_map(MultiIndex{2, 0, 1}) == std::vector<std::size_t>{0, 0, 2});
  CHECK(multi_indices_of_degree(3, 2).size() == 6);
  CHECK(MultiIndex{0, 2} < MultiIndex{1, 1});
  CHECK(MultiIndex{3, 0} > MultiIndex{0, 2});
  CHECK(MultiIndex{2, 1}.factorial() == 2);
}

TEST_CASE("tensor elements follow the factorial normalization", "[core][tensor]") {
  const Series f = x(2, 3, 0) * x(2, 3, 1);
  const std::vector<std::size_t> js{0, 1};
  CHECK(tensor_element(f, js) == 1);
  const Series g = x(1, 3, 0) * x(1, 3, 0);
  CHECK(tensor_element(g, std::vector<std::size_t>{0, 0}) == 2);
  CHECK_THROWS_AS(tensor_element(g, std::vector<std::size_t>{0, 0, 0, 0}), std::invalid_argument);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Series r = testing::random_polynomial(rng, 3, 4, 0, 4, 0.5);
    std::vector<std::size_t> idx{static_cast<std::size_t>(rng.uniform(0, 2)), static_cast<std::size_t>(rng.uniform(0, 2)),
                                 static_cast<std::size_t>(rng.uniform(0, 2)), static_cast<std::size_t>(rng.uniform(0, 2))};
    const Rational ref = tensor_element(r, idx);
    std::sort(idx.begin(), idx.end());
    do {
      CHECK(tensor_element(r, idx) == ref);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("coefficients round-trip through the tensor view", "[core][tensor]") {
  Rng rng(12);
  const Series r = testing::random_polynomial(rng, 2, 5, 0, 5, 0.6);
  Series rebuilt(2, 5);
  for (unsigned d = 0; d <= 5; ++d)
    for (const auto& alpha : multi_indices_of_degree(2, d)) {
      const Rational u = tensor_element(r, representative_index_map(alpha));
      if (u != 0) rebuilt.add_term(alpha, u / Rational(alpha.factorial()));
    }
  CHECK(rebuilt == r);
}

TEST_CASE("series ring operations respect truncation", "[core][series]") {
  CHECK((x(1, 1, 0) * x(1, 1, 0)).is_zero());
  CHECK(Series::constant(1, 2, 1) + x(1, 2, 0) + Series::constant(1, 2, -1) == x(1, 2, 0));
  const Series one = Series::constant(1, 2, 1);
  CHECK((one + x(1, 2, 0)) * (one - x(1, 2, 0)) == one - x(1, 2, 0) * x(1, 2, 0));
  CHECK_THROWS_AS(x(1, 2, 0) + x(1, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(x(1, 2, 0) * x(2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Series(1, 2).add_term(MultiIndex{3}, 1), std::invalid_argument);

  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const unsigned d = static_cast<unsigned>(rng.uniform(0, 5));
    const Series a = testing::random_polynomial(rng, n, d, 0, d, 0.5);
    const Series b = testing::random_polynomial(rng, n, d, 0, d, 0.5);
    const Series c = testing::random_polynomial(rng, n, d, 0, d, 0.5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    const Series ab = a * b;
    for (const auto& [alpha, coeff] : ab.terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("derivative lowers the truncation by one", "[core][series]") {
  const Series f = x(2, 3, 0) * x(2, 3, 0) * x(2, 3, 1);
  const Series df = derivative(f, 0);
  CHECK(df.trunc_degree() == 2);
  CHECK(df == x(2, 2, 0) * x(2, 2, 1) * Rational(2));
  CHECK(derivative(x(2, 3, 0), 1).is_zero());
  CHECK_THROWS_AS(derivative(Series::constant(1, 0, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(derivative(f, 2), std::invalid_argument);

  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const Series r = testing::random_polynomial(rng, 2, 5, 0, 5, 0.5);
    Series expect(2, 4);
    for (const auto& [alpha, c] : r.terms()) {
      if (alpha[1] == 0) continue;
      MultiIndex beta = alpha;
      --beta[1];
      if (beta.degree() <= 4) expect.add_term(beta, c * alpha[1]);
    }
    CHECK(derivative(r, 1) == expect);
  }
}

TEST_CASE("reciprocal, exp and log", "[core][series]") {
  CHECK(reciprocal(Series::constant(1, 3, 1)) == Series::constant(1, 3, 1));
  const Series geo = reciprocal(Series::constant(1, 3, 1) - x(1, 3, 0));
  CHECK(geo == poly(1, 3, {{MultiIndex{0}, 1}, {MultiIndex{1}, 1}, {MultiIndex{2}, 1}, {MultiIndex{3}, 1}}));
  CHECK_THROWS_AS(reciprocal(x(1, 3, 0)), domain_error);

  Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    Series u = testing::random_polynomial(rng, 2, 5, 1, 5, 0.5);
    u += Series::constant(2, 5, rng.nonzero_rational());
    CHECK(u * reciprocal(u) == Series::constant(2, 5, 1));
    const Series v = testing::random_polynomial(rng, 2, 5, 1, 3, 0.5);
    CHECK(log_series(exp_series(v)) == v);
    CHECK(exp_series(v + v) == exp_series(v) * exp_series(v));
  }
}

TEST_CASE("direct composition", "[core][compose]") {
  const Series f = x(1, 2, 0) + x(1, 2, 0) * x(1, 2, 0);
  const SeriesSystem fs({f});
  const SeriesSystem gs({x(1, 2, 0) * Rational(2)});
  const SeriesSystem expect({x(1, 2, 0) * Rational(2) + x(1, 2, 0) * x(1, 2, 0) * Rational(4)});
  CHECK(compose_direct(fs, gs) == expect);

  Rng rng(16);
  for (int trial = 0; trial < 8; ++trial) {
    const SeriesSystem a = testing::random_polynomial_system(rng, 2, 4, 3, 0.4);
    const SeriesSystem b = testing::random_polynomial_system(rng, 2, 4, 3, 0.4, true);
    const SeriesSystem c = testing::random_polynomial_system(rng, 2, 4, 3, 0.4, true);
    const SeriesSystem id = SeriesSystem::identity(2, 4);
    CHECK(compose_direct(id, b) == b);
    CHECK(compose_direct(a, id) == a);
    CHECK(compose_direct(compose_direct(a, b), c) == compose_direct(a, compose_direct(b, c)));
    const std::vector<SeriesSystem> chain{a, b, c};
    CHECK(compose_chain(chain) == compose_direct(compose_direct(a, b), c));
    const std::vector<SeriesSystem> pair{a, b};
    CHECK(compose_chain(pair) == compose_direct(a, b));
  }
  const std::vector<SeriesSystem> ids(3, SeriesSystem::identity(2, 3));
  CHECK(compose_chain(ids) == SeriesSystem::identity(2, 3));
  const SeriesSystem with_constant({Series::constant(1, 2, 1) + x(1, 2, 0)});
  CHECK_THROWS_AS(compose_direct(fs, with_constant), std::invalid_argument);
}

TEST_CASE("jacobian and determinants of series matrices", "[core][matrix]") {
  const std::size_t n = 2;
  const unsigned d = 2;
  CHECK(det_series(SeriesMatrix::identity(3, n, d)) == Series::constant(n, d, 1));
  SeriesMatrix m = SeriesMatrix::zero(2, n, d);
  m(0, 0) = Series::constant(n, d, 1) - x(n, d, 0);
  m(1, 1) = Series::constant(n, d, 1) - x(n, d, 1);
  CHECK(det_series(m) == Series::constant(n, d, 1) - x(n, d, 0) - x(n, d, 1) + x(n, d, 0) * x(n, d, 1));

  // cofactor expansion along the first row as the independent oracle
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    SeriesMatrix r = SeriesMatrix::zero(3, 2, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r(i, j) = testing::random_polynomial(rng, 2, 3, 0, 2, 0.5);
    Series cof(2, 3);
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t a = c == 0 ? 1 : 0, b = c == 2 ? 1 : 2;
      const Series minor = r(1, a) * r(2, b) - r(1, b) * r(2, a);
      cof += (c % 2 == 0 ? r(0, c) * minor : -(r(0, c) * minor));
    }
    CHECK(det_series(r) == cof);
  }

  const SeriesSystem f({x(2, 3, 0) * x(2, 3, 0) * x(2, 3, 1), x(2, 3, 0)});
  const SeriesMatrix j = jacobian(f);
  CHECK(j(0, 0) == derivative(f[0], 0));
  CHECK(j(0, 1) == derivative(f[0], 1));
  CHECK(j(1, 0) == Series::constant(2, 2, 1));
  CHECK(j(1, 1).is_zero());
}

TEST_CASE("rational matrices", "[core][matrix]") {
  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = testing::random_invertible(rng, 3);
    CHECK(a * inverse(a) == Matrix::identity(3));
    CHECK(determinant(a * a) == determinant(a) * determinant(a));
  }
  const Matrix singular(std::vector<std::vector<Rational>>{{1, 2}, {2, 4}});
  CHECK(determinant(singular) == 0);
  CHECK_THROWS_AS(inverse(singular), singular_matrix_error);
}

TEST_CASE("series JSON round trip and diagnostics", "[core][json]") {
  Rng rng(19);
  const SeriesSystem s = testing::random_polynomial_system(rng, 2, 4, 4, 0.5);
  CHECK(system_from_json(to_json(s)) == s);
  const auto bad = nlohmann::json::parse(R"({"components":[{"n":1,"degree":2,"terms":[{"exp":[1],"coeff":"1/0"}]}]})");
  try {
    system_from_json(bad);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("components[0].terms[0].coeff") != std::string::npos);
  }
  const auto too_high = nlohmann::json::parse(R"({"n":1,"degree":1,"terms":[{"exp":[2],"coeff":"1"}]})");
  CHECK_THROWS_AS(series_from_json(too_high), parse_error);
  const auto missing = nlohmann::json::parse(R"({"n":1,"terms":[]})");
  CHECK_THROWS_AS(series_from_json(missing), parse_error);
  CHECK(to_json(Series::constant(1, 0, Rational(-3, 6)))["terms"][0]["coeff"] == "-1/2");
}
