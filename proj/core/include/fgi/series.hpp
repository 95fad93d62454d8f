#ifndef FGI_SERIES_HPP
#define FGI_SERIES_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fgi/multi_index.hpp"
#include "fgi/rational.hpp"

namespace fgi {

/// Truncated multivariate power series sum_alpha c_alpha X^alpha over Q.
///
/// Only monomials of total degree <= trunc_degree() are represented and
/// zero coefficients are never stored. Coefficients are the plain monomial
/// coefficients; the symmetric tensor view lives in tensor_element().
class Series {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  Series() = default;
  Series(std::size_t n_vars, unsigned trunc_degree);

  static Series constant(std::size_t n_vars, unsigned trunc_degree, const Rational& c);
  static Series variable(std::size_t n_vars, unsigned trunc_degree, std::size_t i);

  std::size_t n_vars() const noexcept { return n_; }
  unsigned trunc_degree() const noexcept { return trunc_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of X^alpha; zero when absent. alpha must have length n_vars.
  Rational coeff(const MultiIndex& alpha) const;
  Rational constant_term() const;

  /// Adds c to the coefficient of X^alpha. Throws std::invalid_argument
  /// if alpha has the wrong length or exceeds the truncation degree.
  void add_term(const MultiIndex& alpha, const Rational& c);

  /// Same as add_term but silently drops monomials above the truncation.
  void add_term_truncating(const MultiIndex& alpha, const Rational& c);

  /// Lowest total degree carrying a nonzero coefficient (trunc+1 when zero).
  unsigned valuation() const noexcept;

  Series homogeneous_part(unsigned d) const;

  /// Re-truncates to d <= trunc_degree().
  Series truncated(unsigned d) const;

  /// The same coefficients viewed with a larger or equal truncation degree.
  /// Only sound when the caller knows the higher coefficients vanish.
  Series with_trunc(unsigned d) const;

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Rational& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }

  friend bool operator==(const Series&, const Series&) = default;

  std::string to_string() const;

 private:
  void require_compatible(const Series& rhs, const char* op) const;

  std::size_t n_ = 0;
  unsigned trunc_ = 0;
  Terms terms_;
};

/// Formal partial derivative in X_j. The result carries trunc_degree D-1:
/// degree-D coefficients of F determine exactly the degree <= D-1 part.
/// Throws std::invalid_argument when F has trunc_degree 0 or j is out of range.
Series derivative(const Series& f, std::size_t j);

/// X_i * F with the truncation degree raised by one (exact, no information lost).
Series mul_variable(const Series& f, std::size_t i);

/// F^k truncated; F^0 is the constant 1.
Series pow(const Series& f, unsigned k);

/// Multiplicative inverse computed degree by degree.
/// Throws fgi::domain_error when the constant term is zero.
Series reciprocal(const Series& f);

/// exp(F) for constant-free F; std::invalid_argument otherwise.
Series exp_series(const Series& f);

/// log(F) for F with constant term 1; std::invalid_argument otherwise.
Series log_series(const Series& f);

/// outer(inner_1, ..., inner_m) where outer has m variables and every inner
/// series is constant-free with a common variable count. The result is
/// truncated at min(outer trunc, inner trunc).
Series substitute(const Series& outer, std::span<const Series> inner);

/// Symmetric tensor element F^{[d]}_{js} = mu(js)! * c_{mu(js)} (0-based js).
Rational tensor_element(const Series& f, std::span<const std::size_t> js);

}  // namespace fgi

#endif  // FGI_SERIES_HPP
