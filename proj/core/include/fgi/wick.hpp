#ifndef FGI_WICK_HPP
#define FGI_WICK_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fgi/matrix.hpp"
#include "fgi/multi_index.hpp"
#include "fgi/series.hpp"

namespace fgi {

/// A map [k] -> [n] written as its list of values (0-based).
using IndexMap = std::vector<std::size_t>;

enum class PermanentMethod { automatic, naive, ryser };

/// Invertible matrix A together with A^{-1} and det A. The Gaussian weight
/// is exp(-ubar A u), so the covariance <u_i ubar_j> is (A^{-1})_{ij}.
struct CovarianceSpec {
  std::size_t n = 0;
  Matrix A;
  Matrix A_inv;
  Rational det_A;

  /// Throws fgi::singular_matrix_error when A is singular.
  explicit CovarianceSpec(Matrix a);
  static CovarianceSpec identity(std::size_t n) { return CovarianceSpec(Matrix::identity(n)); }
};

/// sum over bijections s of prod_k A_inv[tau2(s(k))][tau1(k)]; 0 when the
/// lengths differ. `naive` walks every bijection, the others go through
/// the permanent of M[a][b] = A_inv[tau2(b)][tau1(a)].
Rational pairing_sum(const Matrix& A_inv, const IndexMap& tau1, const IndexMap& tau2,
                     PermanentMethod method = PermanentMethod::automatic);

/// <u_{is[0]} ... u_{is[p-1]} ubar_{js[0]} ... ubar_{js[q-1]}> under the
/// normalized Gaussian measure: per(A_inv[is[a]][js[b]]) or 0 when p != q.
Rational wick_moment(const CovarianceSpec& cov, const IndexMap& is, const IndexMap& js);

/// pairing_sum over the weakly increasing representatives of alpha1 (tau1)
/// and alpha2 (tau2), summed over contingency tables instead of bijections:
/// alpha1! alpha2! sum_t prod_{ij} A_inv[i][j]^{t_ij} / t_ij!, where t has
/// row sums alpha2 and column sums alpha1. Cheap for large degree, small n.
Rational pairing_sum_by_tables(const Matrix& A_inv, const MultiIndex& alpha1, const MultiIndex& alpha2);
/// Integral of ubar^alpha1 u^alpha2 against exp(-ubar A u):
/// (det A)^{-1} * pairing_sum over the weakly increasing representatives.
Rational gaussian_integral_monomial(const CovarianceSpec& cov, const MultiIndex& alpha1, const MultiIndex& alpha2);

/// Integral of sbar^a1 s^a2 tbar^a3 t^a4 ubar^a5 u^a6 with three independent
/// Gaussian blocks weighted by A, B, C.
Rational gaussian_integral_triple(const CovarianceSpec& a, const CovarianceSpec& b, const CovarianceSpec& c,
                                  const std::array<MultiIndex, 6>& alphas);

/// A truncated expansion sum c_{a1,a2}(V) ubar^{a1} u^{a2} whose coefficients
/// are series in output variables V (n_out of them, truncated at out_degree).
///
/// complete_through: when set, the expansion is known to contain every
/// monomial with |a1| <= complete_through and nothing is claimed beyond.
/// When empty, the listed terms are the entire integrand (a polynomial).
struct GaussianIntegrand {
  std::size_t n = 0;
  std::size_t n_out = 0;
  unsigned out_degree = 0;
  std::optional<unsigned> complete_through;
  std::map<std::pair<MultiIndex, MultiIndex>, Series> terms;

  GaussianIntegrand(std::size_t n_fields, std::size_t n_output, unsigned output_degree)
      : n(n_fields), n_out(n_output), out_degree(output_degree) {}

  void add(const MultiIndex& ubar_exp, const MultiIndex& u_exp, const Series& coeff);
};

/// Splits a series over (ubar_1..ubar_n, u_1..u_n, V_1..V_m) into an integrand.
GaussianIntegrand split_integrand(const Series& u, std::size_t n_fields, std::optional<unsigned> complete_through);

/// Termwise formal Gaussian integral of an integrand into a V-series.
///
/// pairing_bound caps |a1| of the monomials that may contribute below the
/// output degree. It is mandatory whenever the integrand is only known
/// through a finite order; a bound beyond that order, or a listed term above
/// the bound with a nonzero contribution, raises fgi::summability_error.
Series gaussian_integral_series(const CovarianceSpec& cov, const GaussianIntegrand& integrand,
                                std::optional<unsigned> pairing_bound = std::nullopt);

}  // namespace fgi

#endif  // FGI_WICK_HPP
