#include "fgi/wick.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fgi/errors.hpp"
#include "fgi/permanent.hpp"

namespace fgi {

CovarianceSpec::CovarianceSpec(Matrix a) : n(a.rows()), A(std::move(a)) {
  if (!A.is_square() || n == 0) throw std::invalid_argument("covariance matrix must be square and nonempty");
  det_A = determinant(A);
  if (det_A == 0) throw singular_matrix_error("matrix A is singular (determinant 0)");
  A_inv = inverse(A);
}

Rational pairing_sum(const Matrix& A_inv, const IndexMap& tau1, const IndexMap& tau2, PermanentMethod method) {
  if (tau1.size() != tau2.size()) return 0;
  const std::size_t k = tau1.size();
  for (std::size_t v : tau1)
    if (v >= A_inv.rows()) throw std::invalid_argument("index map value out of range");
  for (std::size_t v : tau2)
    if (v >= A_inv.rows()) throw std::invalid_argument("index map value out of range");

  if (method == PermanentMethod::naive) {
    if (k > 10) throw resource_error("naive pairing sum limited to 10 pairs");
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    Rational sum = 0;
    do {
      Rational prod = 1;
      for (std::size_t j = 0; j < k && prod != 0; ++j) prod *= A_inv(tau2[sigma[j]], tau1[j]);
      sum += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum;
  }

  Matrix m(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m(a, b) = A_inv(tau2[b], tau1[a]);
  return method == PermanentMethod::ryser ? permanent_ryser(m) : permanent(m);
}

Rational wick_moment(const CovarianceSpec& cov, const IndexMap& is, const IndexMap& js) {
  return pairing_sum(cov.A_inv, js, is);
}

Rational pairing_sum_by_tables(const Matrix& A_inv, const MultiIndex& alpha1, const MultiIndex& alpha2) {
  const std::size_t n = A_inv.rows();
  if (alpha1.size() != n || alpha2.size() != n) throw std::invalid_argument("multi-index length must equal n");
  if (alpha1.degree() != alpha2.degree()) return 0;
  std::vector<unsigned> row_left(alpha2.exponents());
  std::vector<unsigned> col_left(alpha1.exponents());
  Rational total = 0;
  // fill column j row by row; `acc` carries prod A_inv^t / t!
  auto rec = [&](auto&& self, std::size_t j, std::size_t i, const Rational& acc) -> void {
    if (j == n) {
      total += acc;
      return;
    }
    if (i + 1 == n) {
      const unsigned t = col_left[j];
      if (t > row_left[i]) return;
      Rational next = acc;
      if (t > 0) {
        Rational power;
        mpz_pow_ui(power.get_num_mpz_t(), A_inv(i, j).get_num_mpz_t(), t);
        mpz_pow_ui(power.get_den_mpz_t(), A_inv(i, j).get_den_mpz_t(), t);
        next *= power;
        next /= Rational(factorial(t));
      }
      if (next == 0) return;
      row_left[i] -= t;
      col_left[j] = 0;
      self(self, j + 1, 0, next);
      col_left[j] = t;
      row_left[i] += t;
      return;
    }
    const unsigned cap = std::min(row_left[i], col_left[j]);
    Rational next = acc;
    for (unsigned t = 0; t <= cap; ++t) {
      if (t > 0) {
        next *= A_inv(i, j);
        next /= t;
        if (next == 0) break;
      }
      row_left[i] -= t;
      col_left[j] -= t;
      self(self, j, i + 1, next);
      col_left[j] += t;
      row_left[i] += t;
    }
  };
  rec(rec, 0, 0, Rational(1));
  return total * Rational(alpha1.factorial() * alpha2.factorial());
}

Rational gaussian_integral_monomial(const CovarianceSpec& cov, const MultiIndex& alpha1, const MultiIndex& alpha2) {
  if (alpha1.size() != cov.n || alpha2.size() != cov.n) throw std::invalid_argument("multi-index length must equal n");
  if (alpha1.degree() != alpha2.degree()) return 0;
  return pairing_sum(cov.A_inv, representative_index_map(alpha1), representative_index_map(alpha2)) / cov.det_A;
}

Rational gaussian_integral_triple(const CovarianceSpec& a, const CovarianceSpec& b, const CovarianceSpec& c,
                                  const std::array<MultiIndex, 6>& alphas) {
  const Rational s = gaussian_integral_monomial(a, alphas[0], alphas[1]);
  if (s == 0) return 0;
  const Rational t = gaussian_integral_monomial(b, alphas[2], alphas[3]);
  if (t == 0) return 0;
  return s * t * gaussian_integral_monomial(c, alphas[4], alphas[5]);
}

void GaussianIntegrand::add(const MultiIndex& ubar_exp, const MultiIndex& u_exp, const Series& coeff) {
  if (ubar_exp.size() != n || u_exp.size() != n) throw std::invalid_argument("integrand exponent length must equal n");
  if (coeff.n_vars() != n_out || coeff.trunc_degree() != out_degree) {
    throw std::invalid_argument("integrand coefficient has the wrong shape");
  }
  if (coeff.is_zero()) return;
  auto key = std::make_pair(ubar_exp, u_exp);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

GaussianIntegrand split_integrand(const Series& u, std::size_t n_fields, std::optional<unsigned> complete_through) {
  if (u.n_vars() <= 2 * n_fields) throw std::invalid_argument("integrand needs at least one output variable");
  const std::size_t m = u.n_vars() - 2 * n_fields;
  GaussianIntegrand out(n_fields, m, u.trunc_degree());
  out.complete_through = complete_through;
  for (const auto& [a, c] : u.terms()) {
    MultiIndex ub(n_fields), uu(n_fields), v(m);
    for (std::size_t i = 0; i < n_fields; ++i) {
      ub[i] = a[i];
      uu[i] = a[n_fields + i];
    }
    for (std::size_t i = 0; i < m; ++i) v[i] = a[2 * n_fields + i];
    Series coeff(m, u.trunc_degree());
    coeff.add_term(v, c);
    out.add(ub, uu, coeff);
  }
  return out;
}

Series gaussian_integral_series(const CovarianceSpec& cov, const GaussianIntegrand& integrand,
                                std::optional<unsigned> pairing_bound) {
  if (integrand.n != cov.n) throw std::invalid_argument("integrand and covariance disagree on n");
  if (integrand.complete_through) {
    if (!pairing_bound) {
      throw summability_error("integrand is only known through finite order and no pairing bound was supplied");
    }
    if (*pairing_bound > *integrand.complete_through) {
      throw summability_error("pairing bound " + std::to_string(*pairing_bound) +
                              " exceeds the order through which the integrand is known (" +
                              std::to_string(*integrand.complete_through) + ")");
    }
  }
  Series out(integrand.n_out, integrand.out_degree);
  for (const auto& [key, coeff] : integrand.terms) {
    const auto& [ab, au] = key;
    if (ab.degree() != au.degree()) continue;
    const Rational value = pairing_sum_by_tables(cov.A_inv, ab, au) / cov.det_A;
    if (value == 0) continue;
    if (pairing_bound && ab.degree() > *pairing_bound) {
      throw summability_error("monomial with " + std::to_string(ab.degree()) +
                              " pairings contributes below the output degree, beyond the pairing bound " +
                              std::to_string(*pairing_bound));
    }
    out += coeff * value;
  }
  return out;
}

}  // namespace fgi
