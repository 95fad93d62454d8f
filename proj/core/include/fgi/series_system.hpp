#ifndef FGI_SERIES_SYSTEM_HPP
#define FGI_SERIES_SYSTEM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fgi/matrix.hpp"
#include "fgi/series.hpp"

namespace fgi {

class SeriesMatrix;

/// A list of series F_1..F_m sharing variable count and truncation degree.
/// For the maps studied here m equals n_vars, but systems over a different
/// number of variables (matrix-X solutions) are allowed.
class SeriesSystem {
 public:
  SeriesSystem() = default;
  explicit SeriesSystem(std::vector<Series> components);

  /// X_1..X_n.
  static SeriesSystem identity(std::size_t n, unsigned trunc_degree);

  std::size_t size() const noexcept { return comps_.size(); }
  std::size_t n_vars() const noexcept { return comps_.empty() ? 0 : comps_.front().n_vars(); }
  unsigned trunc_degree() const noexcept { return comps_.empty() ? 0 : comps_.front().trunc_degree(); }

  const Series& operator[](std::size_t i) const { return comps_.at(i); }
  const std::vector<Series>& components() const noexcept { return comps_; }

  bool is_constant_free() const;

  /// Matrix of degree-one coefficients: (i, j) = [X_j] F_i.
  Matrix linear_part() const;

  SeriesSystem truncated(unsigned d) const;

  Rational tensor_element(std::size_t i, std::span<const std::size_t> js) const;

  friend bool operator==(const SeriesSystem&, const SeriesSystem&) = default;

 private:
  std::vector<Series> comps_;
};

/// (F o G)_i = F_i(G_1, ..., G_n). G must be constant-free and both systems
/// must share n and the truncation degree.
SeriesSystem compose_direct(const SeriesSystem& f, const SeriesSystem& g);

/// F1 o F2 o ... o Fp. Every system but the first must be constant-free.
SeriesSystem compose_chain(std::span<const SeriesSystem> systems);

/// (i, j) entry = d F_i / d X_j, truncated at D-1.
SeriesMatrix jacobian(const SeriesSystem& f);

}  // namespace fgi

#endif  // FGI_SERIES_SYSTEM_HPP
