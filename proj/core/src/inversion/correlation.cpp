#include "fgi/inversion/correlation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "fgi/errors.hpp"
#include "fgi/inversion/reversion.hpp"
#include "fgi/wick.hpp"

namespace fgi {

namespace {

// Polynomial in (u_1..u_n, Y_1..Y_n), keyed by the concatenated exponents.
using Bigraded = std::map<MultiIndex, Rational>;

struct Grading {
  std::size_t n;
  unsigned u_degree(const MultiIndex& a) const {
    unsigned s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
  }
  unsigned y_degree(const MultiIndex& a) const {
    unsigned s = 0;
    for (std::size_t i = n; i < 2 * n; ++i) s += a[i];
    return s;
  }
};

void check_indices(const std::vector<std::size_t>& idx, std::size_t n, const char* what) {
  for (std::size_t v : idx)
    if (v >= n) throw std::invalid_argument(std::string(what) + " index out of range");
}

void require_correlation_shape(const SeriesSystem& f, const CorrelationSpec& spec, unsigned degree) {
  if (f.size() == 0 || f.size() != f.n_vars()) throw std::invalid_argument("correlations need a square system");
  if (!f.is_constant_free()) throw std::invalid_argument("correlations need a constant-free system");
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
  check_indices(spec.I, f.size(), "u");
  check_indices(spec.J, f.size(), "ubar");
  const auto need = degree + static_cast<unsigned>(spec.J.size()) + 1;
  if (f.trunc_degree() < need) {
    throw std::invalid_argument("correlation through degree " + std::to_string(degree) +
                                " needs input known through degree " + std::to_string(need));
  }
}

// det A * integral of u_I ubar_J exp(ubar H(u) + ubar Y), H = A u - F(u).
//
// Expanding exp(ubar V), V = H(u) + Y, gives sum_beta ubar^beta V^beta / beta!.
// A term with y factors Y and |beta| - y factors H has u-degree at least
// 2 (|beta| - y), while pairing needs u-degree |beta| + |J| - |I|; with
// y <= degree this caps |beta| at 2 degree + |J| - |I|.
Series gaussian_correlation(const SeriesSystem& f, const std::vector<std::size_t>& I,
                            const std::vector<std::size_t>& J, unsigned degree) {
  const std::size_t n = f.size();
  const Grading gr{n};
  const CovarianceSpec cov(f.linear_part());
  const int shift = static_cast<int>(J.size()) - static_cast<int>(I.size());
  const unsigned beta_bound = static_cast<unsigned>(std::max(0, 2 * static_cast<int>(degree) + shift));
  const unsigned beta_max = beta_bound + 1;

  std::vector<Bigraded> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [alpha, c] : f[j].terms()) {
      if (alpha.degree() < 2) continue;
      MultiIndex key(2 * n);
      for (std::size_t i = 0; i < n; ++i) key[i] = alpha[i];
      v[j][key] -= c;
    }
    MultiIndex yj(2 * n);
    yj[n + j] = 1;
    v[j][yj] += 1;
  }

  // a term at stage b can still end with u-degree b' + shift for some b' >= b
  // only if its u-degree is at most b + shift + (degree - y)
  auto viable = [&](const MultiIndex& key, unsigned stage) {
    const int y = static_cast<int>(gr.y_degree(key));
    if (y > static_cast<int>(degree)) return false;
    return static_cast<int>(gr.u_degree(key)) <= static_cast<int>(stage) + shift + static_cast<int>(degree) - y;
  };

  GaussianIntegrand integrand(n, n, degree);
  integrand.complete_through = beta_max + static_cast<unsigned>(J.size());
  const MultiIndex mu_i = multiplicity_index(I, n);
  const MultiIndex mu_j = multiplicity_index(J, n);

  std::map<MultiIndex, Bigraded> memo;
  memo[MultiIndex(n)][MultiIndex(2 * n)] = 1;
  for (unsigned b = 0; b <= beta_max; ++b) {
    for (const auto& beta : multi_indices_of_degree(n, b)) {
      if (b > 0) {
        std::size_t j = n;
        while (beta[--j] == 0) {
        }
        MultiIndex prev = beta;
        --prev[j];
        const Bigraded& base = memo.at(prev);
        Bigraded next;
        for (const auto& [ka, ca] : base)
          for (const auto& [kb, cb] : v[j]) {
            MultiIndex key = ka + kb;
            if (!viable(key, b)) continue;
            next[key] += ca * cb;
          }
        for (auto it = next.begin(); it != next.end();) {
          if (it->second == 0) {
            it = next.erase(it);
          } else {
            it->second /= beta[j];
            ++it;
          }
        }
        memo.emplace(beta, std::move(next));
      }
      const int target = static_cast<int>(b) + shift;
      if (target < 0) continue;
      for (const auto& [key, c] : memo.at(beta)) {
        if (static_cast<int>(gr.u_degree(key)) != target) continue;
        MultiIndex ubar = beta + mu_j;
        MultiIndex u(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
          u[i] = key[i] + mu_i[i];
          y[i] = key[n + i];
        }
        Series coeff(n, degree);
        coeff.add_term(y, c);
        integrand.add(ubar, u, coeff);
      }
    }
  }
  return gaussian_integral_series(cov, integrand, beta_bound + static_cast<unsigned>(J.size())) * cov.det_A;
}

struct ConnectedPieces {
  unsigned degree;
  SeriesSystem phi;
  Series w;

  Series piece(const std::vector<std::size_t>& I, const std::vector<std::size_t>& J) const {
    const std::size_t n = phi.size();
    if (I.size() >= 2) return Series(n, degree);
    Series s = I.empty() ? w : phi[I[0]];
    for (std::size_t j : J) s = derivative(s, j);
    return s.truncated(degree);
  }
};

ConnectedPieces connected_pieces(const SeriesSystem& f, std::size_t n_ubar, unsigned degree) {
  const unsigned top = degree + static_cast<unsigned>(n_ubar);
  return {degree, revert(f, top).series, log_series(partition_function_Z_det(f, top))};
}

}  // namespace

Series correlation(const SeriesSystem& f, const CorrelationSpec& spec, unsigned degree) {
  require_correlation_shape(f, spec, degree);
  switch (spec.kind) {
    case CorrelationKind::unnormalized:
      return gaussian_correlation(f, spec.I, spec.J, degree);
    case CorrelationKind::normalized:
      return gaussian_correlation(f, spec.I, spec.J, degree) * reciprocal(partition_function_Z_det(f, degree));
    case CorrelationKind::connected:
      return connected_pieces(f, spec.J.size(), degree).piece(spec.I, spec.J);
  }
  throw std::invalid_argument("unknown correlation kind");
}

MomentCumulantReport moment_cumulant_check(const SeriesSystem& f, const std::vector<std::size_t>& I,
                                           const std::vector<std::size_t>& J, unsigned degree) {
  const CorrelationSpec spec{I, J, CorrelationKind::unnormalized};
  require_correlation_shape(f, spec, degree);
  const std::size_t total = I.size() + J.size();
  if (total > 8) throw resource_error("cluster expansion limited to 8 external legs");

  MomentCumulantReport report;
  report.moment = gaussian_correlation(f, I, J, degree);
  const ConnectedPieces pieces = connected_pieces(f, J.size(), degree);

  Series sum(f.size(), degree);
  // restricted growth strings enumerate the set partitions of I + J
  std::vector<std::size_t> block(total, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == total) {
      ++report.partitions;
      Series prod = Series::constant(f.size(), degree, 1);
      for (std::size_t b = 0; b < used && !prod.is_zero(); ++b) {
        std::vector<std::size_t> bi, bj;
        for (std::size_t e = 0; e < total; ++e) {
          if (block[e] != b) continue;
          (e < I.size() ? bi : bj).push_back(e < I.size() ? I[e] : J[e - I.size()]);
        }
        prod *= pieces.piece(bi, bj);
      }
      sum += prod;
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[pos] = b;
      self(self, pos + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  report.cluster_sum = partition_function_Z_det(f, degree) * sum;
  report.holds = report.moment == report.cluster_sum;
  return report;
}

}  // namespace fgi
