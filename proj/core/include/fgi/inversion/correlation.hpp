#ifndef FGI_INVERSION_CORRELATION_HPP
#define FGI_INVERSION_CORRELATION_HPP

#include <cstddef>
#include <vector>

#include "fgi/series.hpp"
#include "fgi/series_system.hpp"

namespace fgi {

enum class CorrelationKind { unnormalized, normalized, connected };

/// <u_{I[0]} ... ubar_{J[0]} ...> with 0-based indices.
struct CorrelationSpec {
  std::vector<std::size_t> I;
  std::vector<std::size_t> J;
  CorrelationKind kind = CorrelationKind::unnormalized;
};

/// Correlation functions of the reversion measure for a constant-free F with
/// invertible linear part, as series in Y truncated at `degree`.
///
/// unnormalized: det A * Gaussian integral of u_I ubar_J exp(ubar H(u) + ubar Y).
/// normalized:   unnormalized / Z.
/// connected:    d_{Y_J} Phi_i for I = {i}, d_{Y_J} W for I empty, 0 for |I| >= 2.
///
/// Needs F.trunc_degree() >= degree + |J| + 1.
Series correlation(const SeriesSystem& f, const CorrelationSpec& spec, unsigned degree);

struct MomentCumulantReport {
  bool holds = false;
  Series moment;         // unnormalized correlation, Gaussian route
  Series cluster_sum;    // Z * sum over set partitions of prod connected
  std::size_t partitions = 0;
};

/// Compares the unnormalized correlation with Z times the sum over all set
/// partitions of I + J of products of connected correlations.
MomentCumulantReport moment_cumulant_check(const SeriesSystem& f, const std::vector<std::size_t>& I,
                                           const std::vector<std::size_t>& J, unsigned degree);

}  // namespace fgi

#endif  // FGI_INVERSION_CORRELATION_HPP
