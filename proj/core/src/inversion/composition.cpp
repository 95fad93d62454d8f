#include "fgi/inversion/composition.hpp"

#include <stdexcept>

#include "fgi/diagrams/composition.hpp"

namespace fgi {

InversionResult compose_diagrammatic(const SeriesSystem& f, const SeriesSystem& g) {
  if (f.n_vars() != g.size()) throw std::invalid_argument("outer system must have one variable per inner component");
  if (f.trunc_degree() != g.trunc_degree()) throw std::invalid_argument("systems must share the truncation degree");
  if (!g.is_constant_free()) throw std::invalid_argument("inner system must be constant-free");
  const std::size_t n = g.n_vars();
  const unsigned degree = g.trunc_degree();

  std::vector<Series> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(Series::constant(n, degree, f[i].constant_term()));

  std::vector<DegreeDiagnostics> diags;
  for (unsigned d = 1; d <= degree; ++d) {
    DegreeDiagnostics diag;
    diag.degree = d;
    for (const auto& c : enumerate_composition_classes(d)) {
      const Rational weight = Rational(1) / Rational(static_cast<unsigned long>(aut_order_composition(c)));
      ++diag.classes;
      diag.inverse_aut_sum += weight;
      for (std::size_t i = 0; i < f.size(); ++i) out[i] += amplitude_composition(c, f, g, i) * weight;
    }
    diags.push_back(diag);
  }
  SeriesSystem series(std::move(out));
  auto terms = term_diagnostics(series);
  for (std::size_t k = 0; k < diags.size(); ++k) diags[k].terms = terms[k].terms;
  return {std::move(series), std::move(diags)};
}

}  // namespace fgi
