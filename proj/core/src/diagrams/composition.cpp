#include "fgi/diagrams/composition.hpp"

#include <stdexcept>

#include "fgi/errors.hpp"

namespace fgi {

unsigned CompositionClass::m() const {
  unsigned s = 0;
  for (const auto& [q, mult] : g_profile) s += mult;
  return s;
}

unsigned CompositionClass::degree() const {
  unsigned s = 0;
  for (const auto& [q, mult] : g_profile) s += q * mult;
  return s;
}

std::string CompositionClass::encoding() const {
  std::string s = "{";
  for (const auto& [q, mult] : g_profile) {
    if (s.size() > 1) s += ',';
    s += std::to_string(q) + ":" + std::to_string(mult);
  }
  return s + "}";
}

namespace {

void partitions(unsigned remaining, unsigned max_part, CompositionClass& cur, std::vector<CompositionClass>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned q = std::min(remaining, max_part); q >= 1; --q) {
    ++cur.g_profile[q];
    partitions(remaining - q, q, cur, out);
    if (--cur.g_profile[q] == 0) cur.g_profile.erase(q);
  }
}

}  // namespace

std::vector<CompositionClass> enumerate_composition_classes(unsigned d) {
  if (d == 0) throw std::invalid_argument("composition classes need d >= 1");
  if (d > 60) throw resource_error("composition class enumeration limited to d <= 60");
  std::vector<CompositionClass> out;
  CompositionClass cur;
  partitions(d, d, cur, out);
  return out;
}

std::uint64_t aut_order_composition(const CompositionClass& c) {
  std::uint64_t aut = checked_factorial(c.m());
  for (const auto& [q, mult] : c.g_profile) {
    aut = checked_mul(aut, checked_factorial(mult));
    const std::uint64_t qf = checked_factorial(q);
    for (unsigned r = 0; r < mult; ++r) aut = checked_mul(aut, qf);
  }
  return aut;
}

Series amplitude_composition(const CompositionClass& c, const SeriesSystem& f, const SeriesSystem& g, std::size_t i) {
  const std::size_t n = g.size();
  const unsigned m = c.m();
  const unsigned d = c.degree();
  if (i >= f.size()) throw std::invalid_argument("component index out of range");
  if (f.n_vars() != n) throw std::invalid_argument("F must have one variable per component of G");
  if (m > f.trunc_degree()) throw std::invalid_argument("F is truncated below the vertex order of the class");
  if (d > g.trunc_degree()) throw std::invalid_argument("G is truncated below the degree of the class");

  std::vector<unsigned> omega;
  for (const auto& [q, mult] : c.g_profile) omega.insert(omega.end(), mult, q);

  const unsigned D = g.trunc_degree();
  // weighted[r][a] = omega_r! * hom_{omega_r}(G_a)
  std::vector<std::vector<Series>> weighted(m);
  for (unsigned r = 0; r < m; ++r)
    for (std::size_t a = 0; a < n; ++a)
      weighted[r].push_back(g[a].homogeneous_part(omega[r]) * Rational(factorial(omega[r])));

  Series total(n, D);
  std::vector<std::size_t> alpha(m, 0);
  while (true) {
    const Rational t = f.tensor_element(i, alpha);
    if (t != 0) {
      Series prod = Series::constant(n, D, t);
      for (unsigned r = 0; r < m && !prod.is_zero(); ++r) prod *= weighted[r][alpha[r]];
      total += prod;
    }
    std::size_t pos = 0;
    while (pos < m && ++alpha[pos] == n) alpha[pos++] = 0;
    if (pos == m) break;
  }
  return total * Rational(factorial(m));
}

}  // namespace fgi
