#include "fgi/series_system.hpp"

#include <stdexcept>

#include "fgi/series_matrix.hpp"

namespace fgi {

SeriesSystem::SeriesSystem(std::vector<Series> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("a series system needs at least one component");
  for (const Series& s : comps_) {
    if (s.n_vars() != comps_.front().n_vars() || s.trunc_degree() != comps_.front().trunc_degree()) {
      throw std::invalid_argument("system components disagree on variable count or truncation degree");
    }
  }
}

SeriesSystem SeriesSystem::identity(std::size_t n, unsigned trunc_degree) {
  std::vector<Series> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Series::variable(n, trunc_degree, i));
  return SeriesSystem(std::move(comps));
}

bool SeriesSystem::is_constant_free() const {
  for (const Series& s : comps_) {
    if (s.constant_term() != 0) return false;
  }
  return true;
}

Matrix SeriesSystem::linear_part() const {
  const std::size_t n = n_vars();
  Matrix a(size(), n);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = comps_[i].coeff(MultiIndex::unit(n, j));
  return a;
}

SeriesSystem SeriesSystem::truncated(unsigned d) const {
  std::vector<Series> out;
  for (const Series& s : comps_) out.push_back(s.truncated(d));
  return SeriesSystem(std::move(out));
}

Rational SeriesSystem::tensor_element(std::size_t i, std::span<const std::size_t> js) const {
  if (i >= size()) throw std::invalid_argument("component index out of range");
  return fgi::tensor_element(comps_[i], js);
}

SeriesSystem compose_direct(const SeriesSystem& f, const SeriesSystem& g) {
  if (f.n_vars() != g.size() || f.trunc_degree() != g.trunc_degree()) {
    throw std::invalid_argument("compose: systems disagree on dimension or truncation degree");
  }
  if (!g.is_constant_free()) throw std::invalid_argument("compose: inner system has a constant term");
  std::vector<Series> out;
  for (const Series& fi : f.components()) out.push_back(substitute(fi, g.components()));
  return SeriesSystem(std::move(out));
}

SeriesSystem compose_chain(std::span<const SeriesSystem> systems) {
  if (systems.empty()) throw std::invalid_argument("compose_chain: empty chain");
  SeriesSystem acc = systems.front();
  for (std::size_t k = 1; k < systems.size(); ++k) acc = compose_direct(acc, systems[k]);
  return acc;
}

SeriesMatrix jacobian(const SeriesSystem& f) {
  const std::size_t n = f.n_vars();
  std::vector<std::vector<Series>> grid(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) grid[i].push_back(derivative(f[i], j));
  return SeriesMatrix(std::move(grid));
}

}  // namespace fgi
