#include "fgi/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fgi/errors.hpp"

namespace fgi {

namespace {

void require_square(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("permanent of a non-square matrix");
}

}  // namespace

Rational permanent_naive(const Matrix& m) {
  require_square(m);
  const std::size_t k = m.rows();
  if (k > 10) throw resource_error("naive permanent limited to 10x10");
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rational sum = 0;
  do {
    Rational prod = 1;
    for (std::size_t i = 0; i < k && prod != 0; ++i) prod *= m(i, perm[i]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Rational permanent_ryser(const Matrix& m) {
  require_square(m);
  const std::size_t k = m.rows();
  if (k == 0) return 1;
  if (k > 30) throw resource_error("Ryser permanent limited to 30x30");
  // per(M) = (-1)^k sum_{S} (-1)^{|S|} prod_i sum_{j in S} M_ij, with S walked in
  // Gray-code order so that each step adds or removes a single column.
  std::vector<Rational> row_sums(k);
  Rational total = 0;
  std::uint64_t gray = 0;
  const std::uint64_t steps = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto col = static_cast<std::size_t>(std::countr_zero(step));
    const std::uint64_t bit = std::uint64_t{1} << col;
    const bool adding = (gray & bit) == 0;
    gray ^= bit;
    for (std::size_t i = 0; i < k; ++i) {
      if (adding) {
        row_sums[i] += m(i, col);
      } else {
        row_sums[i] -= m(i, col);
      }
    }
    Rational prod = 1;
    for (std::size_t i = 0; i < k && prod != 0; ++i) prod *= row_sums[i];
    if (std::popcount(gray) % 2) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return k % 2 ? Rational(-total) : total;
}

Rational permanent(const Matrix& m) { return m.rows() < 5 ? permanent_naive(m) : permanent_ryser(m); }

}  // namespace fgi
