#include "fgi/inversion/lagrange_good.hpp"

#include <stdexcept>
#include <string>

#include "fgi/diagrams/amplitudes.hpp"
#include "fgi/diagrams/trees.hpp"
#include "fgi/errors.hpp"
#include "fgi/series_matrix.hpp"
#include "fgi/wick.hpp"

namespace fgi {

namespace {

void require_square(const SeriesSystem& g) {
  if (g.size() == 0 || g.size() != g.n_vars()) throw std::invalid_argument("Lagrange-Good needs a square system");
}

void require_trunc(const SeriesSystem& g, unsigned need) {
  if (g.trunc_degree() < need) {
    throw std::invalid_argument("G must be known through degree " + std::to_string(need) + ", got " +
                                std::to_string(g.trunc_degree()));
  }
}

std::vector<Series> truncate_all(const std::vector<Series>& v, unsigned d) {
  std::vector<Series> out;
  for (const auto& s : v) out.push_back(s.truncated(d));
  return out;
}

// X_i G_i(F) with F and G cut at degree - 1, so the product is exact through degree.
std::vector<Series> lg_step(const SeriesSystem& g, const std::vector<Series>& f, unsigned degree) {
  const auto inner = truncate_all(f, degree - 1);
  std::vector<Series> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    out.push_back(mul_variable(substitute(g[i].truncated(degree - 1), inner), i));
  return out;
}

// K_il = sum_j X-weight(i, j) (d_l G_j)(F), exact through `degree`.
// weight(i, j) returns the variable index multiplying G_j in the i-th equation, or npos.
template <class Weight>
SeriesMatrix jacobian_at_solution(const SeriesSystem& g, const SeriesSystem& f, unsigned degree, Weight weight) {
  const std::size_t n = g.size();
  const auto inner = truncate_all(f.components(), degree - 1);
  std::vector<std::vector<Series>> dg(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      dg[j].push_back(substitute(derivative(g[j], l).truncated(degree - 1), inner));
  SeriesMatrix k = SeriesMatrix::zero(n, f.n_vars(), degree);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t var = weight(i, j);
      if (var == static_cast<std::size_t>(-1)) continue;
      for (std::size_t l = 0; l < n; ++l) k(i, l) += mul_variable(dg[j][l], var);
    }
  return k;
}

Series reciprocal_det(const SeriesMatrix& k) {
  const auto id = SeriesMatrix::identity(k.size(), k.n_vars(), k.trunc_degree());
  return reciprocal(det_series(id - k));
}

Series monomial_of(const std::vector<Series>& f, const MultiIndex& omega) {
  if (omega.size() != f.size()) throw std::invalid_argument("Omega exponent length must equal n");
  Series out = Series::constant(f.front().n_vars(), f.front().trunc_degree(), 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (omega[i] > 0) out *= pow(f[i], omega[i]);
  return out;
}

Series u_power(std::size_t n, unsigned trunc, const MultiIndex& omega) {
  Series s(n, trunc);
  s.add_term_truncating(omega, 1);
  return s;
}

}  // namespace

SeriesSystem lg_solve(const SeriesSystem& g, unsigned degree) {
  require_square(g);
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
  require_trunc(g, degree - 1);
  const std::size_t n = g.size();
  std::vector<Series> f(n, Series(n, degree));
  for (unsigned d = 1; d <= degree; ++d) {
    const auto next = lg_step(g, f, degree);
    for (std::size_t i = 0; i < n; ++i) f[i] += next[i].homogeneous_part(d);
  }
  return SeriesSystem(std::move(f));
}

SeriesSystem lg_solve_oracle(const SeriesSystem& g, unsigned degree) {
  require_square(g);
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
  require_trunc(g, degree - 1);
  std::vector<Series> f(g.size(), Series(g.size(), degree));
  for (unsigned pass = 0; pass < degree; ++pass) f = lg_step(g, f, degree);
  return SeriesSystem(std::move(f));
}

InversionResult lg_solve_by_trees(const SeriesSystem& g, unsigned degree) {
  require_square(g);
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
  require_trunc(g, degree - 1);
  const std::size_t n = g.size();
  LagrangeGoodRules rules(g, degree);
  std::vector<Series> out(n, Series(n, degree));
  std::vector<DegreeDiagnostics> diags(degree);
  for (unsigned d = 1; d <= degree; ++d) diags[d - 1].degree = d;
  for (const auto& t : enumerate_lg_trees(degree)) {
    const Rational weight = Rational(1) / Rational(static_cast<unsigned long>(aut_order(t)));
    auto& diag = diags[node_count(t) - 1];
    ++diag.classes;
    diag.inverse_aut_sum += weight;
    for (std::size_t i = 0; i < n; ++i) out[i] += rules.tree(t, i) * weight;
  }
  SeriesSystem series(std::move(out));
  const auto terms = term_diagnostics(series);
  for (unsigned d = 0; d < degree; ++d) diags[d].terms = terms[d].terms;
  return {std::move(series), std::move(diags)};
}

LGPartitionRoutes lg_partition_Z(const SeriesSystem& g, unsigned degree) {
  require_square(g);
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
  require_trunc(g, degree);
  const std::size_t n = g.size();
  LGPartitionRoutes routes;

  const SeriesSystem f = lg_solve(g, degree);
  const SeriesMatrix k = jacobian_at_solution(g, f, degree, [](std::size_t i, std::size_t j) {
    return i == j ? i : static_cast<std::size_t>(-1);
  });
  routes.det = reciprocal_det(k);

  Series log_z(n, degree);
  SeriesMatrix power = k;
  for (unsigned p = 1; p <= degree; ++p) {
    log_z += trace(power) * Rational(1, p);
    if (p < degree) power = power * k;
  }
  routes.trace = exp_series(log_z);

  LagrangeGoodRules rules(g, degree);
  Series w(n, degree);
  for (const auto& c : enumerate_lg_circuits(degree))
    w += rules.circuit(c) * (Rational(1) / Rational(static_cast<unsigned long>(aut_order(c))));
  routes.diagram = exp_series(w);

  // exp(ubar X G(u)) = sum_beta X^beta ubar^beta G(u)^beta / beta!; only u-degree |beta| pairs.
  GaussianIntegrand integrand(n, n, degree);
  integrand.complete_through = degree + 1;
  const SeriesSystem gt = g.truncated(degree);
  std::map<MultiIndex, Series> powers;
  powers.emplace(MultiIndex(n), Series::constant(n, degree, 1));
  for (unsigned b = 0; b <= degree; ++b) {
    for (const auto& beta : multi_indices_of_degree(n, b)) {
      if (b > 0) {
        std::size_t j = n;
        while (beta[--j] == 0) {
        }
        MultiIndex prev = beta;
        --prev[j];
        powers.emplace(beta, powers.at(prev) * gt[j]);
      }
      Series x_beta(n, degree);
      x_beta.add_term(beta, Rational(1) / Rational(beta.factorial()));
      for (const auto& [gamma, c] : powers.at(beta).terms()) {
        if (gamma.degree() == b) integrand.add(beta, gamma, x_beta * c);
      }
    }
  }
  routes.gaussian = gaussian_integral_series(CovarianceSpec::identity(n), integrand, degree);
  return routes;
}

LGIdentityReport lg_identity_check(const SeriesSystem& g, const MultiIndex& omega, const MultiIndex& m) {
  require_square(g);
  const std::size_t n = g.size();
  if (m.size() != n || omega.size() != n) throw std::invalid_argument("multi-index length must equal n");
  const unsigned order = m.degree();
  const unsigned degree = std::max(order, 1u);
  require_trunc(g, degree);

  LGIdentityReport report;
  const SeriesSystem f = lg_solve(g, degree);
  const SeriesMatrix k = jacobian_at_solution(g, f, degree, [](std::size_t i, std::size_t j) {
    return i == j ? i : static_cast<std::size_t>(-1);
  });
  const Series lhs = monomial_of(f.components(), omega) * reciprocal_det(k);
  report.lhs = lhs.coeff(m) * Rational(m.factorial());

  Series body = u_power(n, g.trunc_degree(), omega);
  for (std::size_t i = 0; i < n; ++i)
    if (m[i] > 0) body *= pow(g[i], m[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned r = 0; r < m[i]; ++r) body = derivative(body, i);
  report.rhs = body.constant_term();
  report.holds = report.lhs == report.rhs;
  return report;
}

SeriesSystem lg_matrix_solve(const SeriesSystem& g, unsigned degree) {
  require_square(g);
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
  require_trunc(g, degree - 1);
  const std::size_t n = g.size();
  const std::size_t vars = n * n;
  std::vector<Series> f(n, Series(vars, degree));
  for (unsigned pass = 0; pass < degree; ++pass) {
    const auto inner = truncate_all(f, degree - 1);
    std::vector<Series> gf;
    for (std::size_t j = 0; j < n; ++j) gf.push_back(substitute(g[j].truncated(degree - 1), inner));
    for (std::size_t i = 0; i < n; ++i) {
      Series next(vars, degree);
      for (std::size_t j = 0; j < n; ++j) next += mul_variable(gf[j], matrix_variable(i, j, n));
      f[i] = std::move(next);
    }
  }
  return SeriesSystem(std::move(f));
}

LGMatrixReport lg_matrix_identity_check(const SeriesSystem& g, const MultiIndex& omega, unsigned max_degree) {
  require_square(g);
  const std::size_t n = g.size();
  if (omega.size() != n) throw std::invalid_argument("Omega exponent length must equal n");
  const unsigned degree = std::max(max_degree, 1u);
  require_trunc(g, degree);
  double sweep = 1;
  for (unsigned r = 0; r < 2 * max_degree; ++r) sweep *= static_cast<double>(n);
  if (sweep > double(1 << 20)) throw resource_error("matrix-X identity sweep exceeds 2^20 index sequences");
  const std::size_t vars = n * n;

  LGMatrixReport report;
  const SeriesSystem f = lg_matrix_solve(g, degree);
  const SeriesMatrix k =
      jacobian_at_solution(g, f, degree, [n](std::size_t i, std::size_t j) { return matrix_variable(i, j, n); });
  report.lhs = (monomial_of(f.components(), omega) * reciprocal_det(k)).truncated(max_degree);

  report.rhs = Series(vars, max_degree);
  const Series base = u_power(n, g.trunc_degree(), omega);
  for (unsigned kk = 0; kk <= max_degree; ++kk) {
    const Rational scale = Rational(1) / Rational(factorial(kk));
    std::vector<std::size_t> is(kk, 0), js(kk, 0);
    while (true) {
      ++report.sequences;
      Series body = base;
      for (std::size_t j : js) body *= g[j];
      for (std::size_t i : is) body = derivative(body, i);
      const Rational value = body.constant_term() * scale;
      if (value != 0) {
        MultiIndex mono(vars);
        for (unsigned r = 0; r < kk; ++r) ++mono[matrix_variable(is[r], js[r], n)];
        report.rhs.add_term(mono, value);
      }
      // odometer over the pair sequence (i_1, j_1, ..., i_k, j_k)
      std::size_t pos = 0;
      for (; pos < 2 * kk; ++pos) {
        std::size_t& digit = pos % 2 == 0 ? is[pos / 2] : js[pos / 2];
        if (++digit < n) break;
        digit = 0;
      }
      if (pos == 2 * kk) break;
    }
  }
  report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace fgi
