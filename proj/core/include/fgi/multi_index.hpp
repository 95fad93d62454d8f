#ifndef FGI_MULTI_INDEX_HPP
#define FGI_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fgi/rational.hpp"

namespace fgi {

/// Exponent vector alpha in N^n indexing the monomial X^alpha.
///
/// Ordered gradedly: first by total degree, then lexicographically by the
/// exponents. Every coefficient listing in the library follows this order.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}

  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept;
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  /// alpha! = prod_i alpha_i!
  Integer factorial() const;

  MultiIndex& operator+=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex lhs, const MultiIndex& rhs) { return lhs += rhs; }

  /// True when every component of this index is <= the one in `other`.
  bool divides(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& lhs, const MultiIndex& rhs);

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
};

/// mu(js): component i counts the occurrences of index i in `js` (0-based).
/// Throws std::invalid_argument when an entry is outside [0, n).
MultiIndex multiplicity_index(std::span<const std::size_t> js, std::size_t n);

/// The weakly increasing index list whose multiplicity index is `alpha`.
std::vector<std::size_t> representative_index_map(const MultiIndex& alpha);

/// All multi-indices of length n with total degree exactly d, in graded order.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, unsigned d);

}  // namespace fgi

#endif  // FGI_MULTI_INDEX_HPP
