#ifndef FGI_SERIES_MATRIX_HPP
#define FGI_SERIES_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fgi/series.hpp"

namespace fgi {

/// Square matrix of series with a shared variable count and truncation degree.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  explicit SeriesMatrix(std::vector<std::vector<Series>> grid);

  static SeriesMatrix identity(std::size_t size, std::size_t n_vars, unsigned trunc_degree);
  static SeriesMatrix zero(std::size_t size, std::size_t n_vars, unsigned trunc_degree);

  std::size_t size() const noexcept { return grid_.size(); }
  std::size_t n_vars() const noexcept { return n_; }
  unsigned trunc_degree() const noexcept { return trunc_; }

  const Series& operator()(std::size_t i, std::size_t j) const { return grid_.at(i).at(j); }
  Series& operator()(std::size_t i, std::size_t j) { return grid_.at(i).at(j); }

  SeriesMatrix truncated(unsigned d) const;

  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

 private:
  void require_compatible(const SeriesMatrix& b) const;

  std::size_t n_ = 0;
  unsigned trunc_ = 0;
  std::vector<std::vector<Series>> grid_;
};

Series trace(const SeriesMatrix& m);

/// Leibniz expansion over all permutations; intended for small sizes.
Series det_series(const SeriesMatrix& m);

}  // namespace fgi

#endif  // FGI_SERIES_MATRIX_HPP
