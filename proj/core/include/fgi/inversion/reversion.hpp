#ifndef FGI_INVERSION_REVERSION_HPP
#define FGI_INVERSION_REVERSION_HPP

#include "fgi/inversion/result.hpp"
#include "fgi/series.hpp"
#include "fgi/series_system.hpp"

namespace fgi {

// Every routine here takes a constant-free square system F with invertible
// linear part A and returns series in Y_1..Y_n. A singular A raises
// fgi::singular_matrix_error.

/// Compositional inverse through the fixed point
/// Phi = A^{-1} (Y + H(Phi)), H = A X - F, one degree settled per pass.
/// Needs degree <= F.trunc_degree().
InversionResult revert(const SeriesSystem& f, unsigned degree);

/// Sum over reversion tree classes with at most `degree` leaves of
/// amplitude / aut. degree <= 12.
InversionResult revert_by_trees(const SeriesSystem& f, unsigned degree);

/// Undetermined coefficients: the degree-d part of Phi solves
/// A x = [d == 1] Y - hom_d(F(Phi_{<d})) monomial by monomial.
SeriesSystem revert_oracle(const SeriesSystem& f, unsigned degree);

// The vacuum quantities need the tensors of F one order beyond the output
// degree: F.trunc_degree() >= degree + 1.

/// Sum over connected vacuum circuit classes of amplitude / aut. degree <= 8.
Series free_energy_W(const SeriesSystem& f, unsigned degree);

/// exp(free_energy_W).
Series partition_function_Z(const SeriesSystem& f, unsigned degree);

/// det A * det(d Phi / d Y), with Phi the inverse computed to degree + 1.
Series partition_function_Z_det(const SeriesSystem& f, unsigned degree);

/// det A times the termwise Gaussian integral of exp(ubar H(u) + ubar Y).
Series partition_function_Z_gaussian(const SeriesSystem& f, unsigned degree);

}  // namespace fgi

#endif  // FGI_INVERSION_REVERSION_HPP
