#ifndef FGI_INVERSION_LAGRANGE_GOOD_HPP
#define FGI_INVERSION_LAGRANGE_GOOD_HPP

#include <cstddef>

#include "fgi/inversion/result.hpp"
#include "fgi/multi_index.hpp"
#include "fgi/series.hpp"
#include "fgi/series_system.hpp"

namespace fgi {

// G is a square system (constant terms allowed). Outputs are series in X.

/// The constant-free solution of F_i = X_i G_i(F), settled one degree per
/// step. Needs G.trunc_degree() >= degree - 1.
SeriesSystem lg_solve(const SeriesSystem& g, unsigned degree);

/// Plain iteration F <- X G(F) from F = 0, exactly `degree` times.
SeriesSystem lg_solve_oracle(const SeriesSystem& g, unsigned degree);

/// Sum over Lagrange-Good tree classes of amplitude / aut. degree <= 14.
InversionResult lg_solve_by_trees(const SeriesSystem& g, unsigned degree);

/// Z computed four ways. Needs G.trunc_degree() >= degree.
struct LGPartitionRoutes {
  Series det;       // 1 / det(I - K), K_ij = X_i (d_j G_i)(F)
  Series trace;     // exp(sum_p tr(K^p) / p)
  Series diagram;   // exp(sum over circuit classes of amplitude / aut)
  Series gaussian;  // sum_beta X^beta / beta! * integral of ubar^beta G(u)^beta
  bool agree() const { return det == trace && trace == diagram && diagram == gaussian; }
};
LGPartitionRoutes lg_partition_Z(const SeriesSystem& g, unsigned degree);

struct LGIdentityReport {
  bool holds = false;
  Rational lhs;  // M! [X^M] (F^omega / det(I - K))
  Rational rhs;  // d^M (u^omega G(u)^M) at u = 0
};

/// One coefficient of the Lagrange-Good identity for Omega(u) = u^omega.
/// Needs G.trunc_degree() >= max(|M|, 1).
LGIdentityReport lg_identity_check(const SeriesSystem& g, const MultiIndex& omega, const MultiIndex& m);

/// Flattened position of X_{ij} among the n*n matrix variables (0-based).
constexpr std::size_t matrix_variable(std::size_t i, std::size_t j, std::size_t n) { return i * n + j; }

/// Solution of F_i = sum_j X_ij G_j(F) over the n*n variables X_ij.
/// Needs G.trunc_degree() >= degree - 1.
SeriesSystem lg_matrix_solve(const SeriesSystem& g, unsigned degree);

struct LGMatrixReport {
  bool holds = false;
  Series lhs;  // F^omega / det(I - X dG(F))
  Series rhs;  // sum_k sum_{(i_r, j_r)} X_{i1 j1}..X_{ik jk} / k! d_{u_i1}..d_{u_ik} [u^omega G_j1..G_jk] at 0
  std::size_t sequences = 0;
};

/// Both sides of the matrix-X identity through X-degree max_degree.
/// Needs G.trunc_degree() >= max(max_degree, 1); n^(2 max_degree) <= 2^20.
LGMatrixReport lg_matrix_identity_check(const SeriesSystem& g, const MultiIndex& omega, unsigned max_degree);

}  // namespace fgi

#endif  // FGI_INVERSION_LAGRANGE_GOOD_HPP
