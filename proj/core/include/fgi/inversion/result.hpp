#ifndef FGI_INVERSION_RESULT_HPP
#define FGI_INVERSION_RESULT_HPP

#include <cstddef>
#include <vector>

#include "fgi/rational.hpp"
#include "fgi/series_system.hpp"

namespace fgi {

/// Per-degree bookkeeping attached to a computed system.
/// `terms` counts nonzero output coefficients of that degree; `classes` and
/// `inverse_aut_sum` are filled by the diagram routes only.
struct DegreeDiagnostics {
  unsigned degree = 0;
  std::size_t terms = 0;
  std::size_t classes = 0;
  Rational inverse_aut_sum = 0;
};

struct InversionResult {
  SeriesSystem series;
  std::vector<DegreeDiagnostics> diagnostics;
};

/// Fills `terms` for every degree 1..trunc of `s`.
std::vector<DegreeDiagnostics> term_diagnostics(const SeriesSystem& s);

}  // namespace fgi

#endif  // FGI_INVERSION_RESULT_HPP
