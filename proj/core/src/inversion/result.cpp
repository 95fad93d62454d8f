#include "fgi/inversion/result.hpp"

namespace fgi {

std::vector<DegreeDiagnostics> term_diagnostics(const SeriesSystem& s) {
  std::vector<DegreeDiagnostics> out;
  for (unsigned d = 1; d <= s.trunc_degree(); ++d) {
    DegreeDiagnostics diag;
    diag.degree = d;
    for (const auto& comp : s.components())
      for (const auto& [alpha, c] : comp.terms()) diag.terms += alpha.degree() == d;
    out.push_back(diag);
  }
  return out;
}

}  // namespace fgi
