#include "fgi/series_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fgi/errors.hpp"

namespace fgi {

SeriesMatrix::SeriesMatrix(std::vector<std::vector<Series>> grid) : grid_(std::move(grid)) {
  if (grid_.empty()) throw std::invalid_argument("empty series matrix");
  n_ = grid_[0].at(0).n_vars();
  trunc_ = grid_[0][0].trunc_degree();
  for (const auto& row : grid_) {
    if (row.size() != grid_.size()) throw std::invalid_argument("series matrix must be square");
    for (const Series& s : row) {
      if (s.n_vars() != n_ || s.trunc_degree() != trunc_) {
        throw std::invalid_argument("series matrix entries disagree on shape");
      }
    }
  }
}

SeriesMatrix SeriesMatrix::zero(std::size_t size, std::size_t n_vars, unsigned trunc_degree) {
  std::vector<std::vector<Series>> g(size, std::vector<Series>(size, Series(n_vars, trunc_degree)));
  return SeriesMatrix(std::move(g));
}

SeriesMatrix SeriesMatrix::identity(std::size_t size, std::size_t n_vars, unsigned trunc_degree) {
  SeriesMatrix m = zero(size, n_vars, trunc_degree);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = Series::constant(n_vars, trunc_degree, 1);
  return m;
}

SeriesMatrix SeriesMatrix::truncated(unsigned d) const {
  SeriesMatrix out = *this;
  out.trunc_ = d;
  for (auto& row : out.grid_)
    for (Series& s : row) s = s.truncated(d);
  return out;
}

void SeriesMatrix::require_compatible(const SeriesMatrix& b) const {
  if (size() != b.size() || n_ != b.n_ || trunc_ != b.trunc_) {
    throw std::invalid_argument("series matrices disagree on shape");
  }
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  a.require_compatible(b);
  SeriesMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) += b(i, j);
  return c;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  a.require_compatible(b);
  SeriesMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) -= b(i, j);
  return c;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  a.require_compatible(b);
  SeriesMatrix c = SeriesMatrix::zero(a.size(), a.n_, a.trunc_);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.size(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Series trace(const SeriesMatrix& m) {
  Series t(m.n_vars(), m.trunc_degree());
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

Series det_series(const SeriesMatrix& m) {
  const std::size_t k = m.size();
  if (k > 8) throw resource_error("det_series: Leibniz expansion limited to 8x8");
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Series det(m.n_vars(), m.trunc_degree());
  do {
    // sign from inversion count
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    Series prod = Series::constant(m.n_vars(), m.trunc_degree(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < k && !prod.is_zero(); ++i) prod *= m(i, perm[i]);
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace fgi
