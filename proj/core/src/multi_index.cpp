#include "fgi/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fgi {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  MultiIndex m(n);
  m.exps_.at(i) = 1;
  return m;
}

unsigned MultiIndex::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Integer MultiIndex::factorial() const {
  Integer f = 1;
  for (unsigned e : exps_) f *= fgi::factorial(e);
  return f;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (other.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const MultiIndex& lhs, const MultiIndex& rhs) {
  if (auto c = lhs.degree() <=> rhs.degree(); c != 0) return c;
  return lhs.exps_ <=> rhs.exps_;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

MultiIndex multiplicity_index(std::span<const std::size_t> js, std::size_t n) {
  MultiIndex mu(n);
  for (std::size_t j : js) {
    if (j >= n) throw std::invalid_argument("index " + std::to_string(j) + " out of range");
    ++mu[j];
  }
  return mu;
}

std::vector<std::size_t> representative_index_map(const MultiIndex& alpha) {
  std::vector<std::size_t> tau;
  tau.reserve(alpha.degree());
  for (std::size_t i = 0; i < alpha.size(); ++i) tau.insert(tau.end(), alpha[i], i);
  return tau;
}

namespace {

void fill_degree(std::size_t pos, unsigned remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    fill_degree(pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, unsigned d) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  MultiIndex cur(n);
  fill_degree(0, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fgi
