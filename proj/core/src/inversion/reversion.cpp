#include "fgi/inversion/reversion.hpp"

#include <stdexcept>
#include <string>

#include "fgi/diagrams/amplitudes.hpp"
#include "fgi/diagrams/trees.hpp"
#include "fgi/inversion/correlation.hpp"
#include "fgi/series_matrix.hpp"
#include "fgi/wick.hpp"

namespace fgi {

namespace {

void require_reversible_shape(const SeriesSystem& f, unsigned degree, unsigned extra) {
  if (f.size() == 0 || f.size() != f.n_vars()) throw std::invalid_argument("reversion needs a square system");
  if (!f.is_constant_free()) throw std::invalid_argument("reversion needs a constant-free system");
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
  if (degree + extra > f.trunc_degree()) {
    throw std::invalid_argument("degree " + std::to_string(degree) + " needs input known through degree " +
                                std::to_string(degree + extra) + ", got " + std::to_string(f.trunc_degree()));
  }
}

std::vector<Series> linear_in_y(const Matrix& m, unsigned degree) {
  const std::size_t n = m.rows();
  std::vector<Series> out(n, Series(n, degree));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) out[i] += Series::variable(n, degree, j) * m(i, j);
  return out;
}

}  // namespace

InversionResult revert(const SeriesSystem& f, unsigned degree) {
  require_reversible_shape(f, degree, 0);
  const std::size_t n = f.size();
  const CovarianceSpec cov(f.linear_part());
  const SeriesSystem ft = f.truncated(degree);

  // H = A X - F, the nonlinear part with the vertex sign
  std::vector<Series> h;
  for (std::size_t i = 0; i < n; ++i) {
    Series hi = -ft[i];
    for (std::size_t j = 0; j < n; ++j)
      if (cov.A(i, j) != 0) hi += Series::variable(n, degree, j) * cov.A(i, j);
    h.push_back(std::move(hi));
  }

  const std::vector<Series> y = linear_in_y(Matrix::identity(n), degree);
  std::vector<Series> phi = linear_in_y(cov.A_inv, degree);
  for (unsigned pass = 2; pass <= degree; ++pass) {
    std::vector<Series> source;
    for (std::size_t j = 0; j < n; ++j) source.push_back(y[j] + substitute(h[j], phi));
    for (std::size_t i = 0; i < n; ++i) {
      Series next(n, degree);
      for (std::size_t j = 0; j < n; ++j)
        if (cov.A_inv(i, j) != 0) next += source[j] * cov.A_inv(i, j);
      phi[i] = std::move(next);
    }
  }
  SeriesSystem out(std::move(phi));
  auto diags = term_diagnostics(out);
  return {std::move(out), std::move(diags)};
}

InversionResult revert_by_trees(const SeriesSystem& f, unsigned degree) {
  require_reversible_shape(f, degree, 0);
  const std::size_t n = f.size();
  ReversionRules rules(f.truncated(degree), degree);
  std::vector<Series> out(n, Series(n, degree));
  std::vector<DegreeDiagnostics> diags(degree);
  for (unsigned d = 1; d <= degree; ++d) diags[d - 1].degree = d;
  for (const auto& t : enumerate_reversion_trees(degree)) {
    const Rational weight = Rational(1) / Rational(static_cast<unsigned long>(aut_order(t)));
    auto& diag = diags[leaf_count(t) - 1];
    ++diag.classes;
    diag.inverse_aut_sum += weight;
    for (std::size_t i = 0; i < n; ++i) out[i] += rules.tree(t, i) * weight;
  }
  SeriesSystem series(std::move(out));
  const auto terms = term_diagnostics(series);
  for (unsigned d = 0; d < degree; ++d) diags[d].terms = terms[d].terms;
  return {std::move(series), std::move(diags)};
}

SeriesSystem revert_oracle(const SeriesSystem& f, unsigned degree) {
  require_reversible_shape(f, degree, 0);
  const std::size_t n = f.size();
  const SeriesSystem ft = f.truncated(degree);
  const Matrix a = ft.linear_part();
  std::vector<Series> phi(n, Series(n, degree));
  for (unsigned d = 1; d <= degree; ++d) {
    const SeriesSystem residual = compose_direct(ft, SeriesSystem(phi));
    for (const auto& alpha : multi_indices_of_degree(n, d)) {
      std::vector<Rational> rhs(n);
      for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = -residual[i].coeff(alpha);
        if (d == 1 && alpha[i] == 1) rhs[i] += 1;
      }
      const std::vector<Rational> x = solve(a, rhs);
      for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0) phi[i].add_term(alpha, x[i]);
    }
  }
  return SeriesSystem(std::move(phi));
}

Series free_energy_W(const SeriesSystem& f, unsigned degree) {
  require_reversible_shape(f, degree, 1);
  const std::size_t n = f.size();
  ReversionRules rules(f.truncated(degree + 1), degree);
  Series w(n, degree);
  for (const auto& c : enumerate_reversion_circuits(degree)) {
    w += rules.circuit(c) * (Rational(1) / Rational(static_cast<unsigned long>(aut_order(c))));
  }
  return w;
}

Series partition_function_Z(const SeriesSystem& f, unsigned degree) { return exp_series(free_energy_W(f, degree)); }

Series partition_function_Z_det(const SeriesSystem& f, unsigned degree) {
  require_reversible_shape(f, degree, 1);
  const SeriesSystem phi = revert(f, degree + 1).series;
  return det_series(jacobian(phi)) * determinant(f.linear_part());
}

Series partition_function_Z_gaussian(const SeriesSystem& f, unsigned degree) {
  return correlation(f, CorrelationSpec{{}, {}, CorrelationKind::unnormalized}, degree);
}

}  // namespace fgi
