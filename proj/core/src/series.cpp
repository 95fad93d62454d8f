#include "fgi/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fgi/errors.hpp"

namespace fgi {

Series::Series(std::size_t n_vars, unsigned trunc_degree) : n_(n_vars), trunc_(trunc_degree) {
  if (n_vars == 0) throw std::invalid_argument("series needs at least one variable");
}

Series Series::constant(std::size_t n_vars, unsigned trunc_degree, const Rational& c) {
  Series s(n_vars, trunc_degree);
  s.add_term(MultiIndex(n_vars), c);
  return s;
}

Series Series::variable(std::size_t n_vars, unsigned trunc_degree, std::size_t i) {
  if (i >= n_vars) throw std::invalid_argument("variable index out of range");
  Series s(n_vars, trunc_degree);
  if (trunc_degree >= 1) s.add_term(MultiIndex::unit(n_vars, i), 1);
  return s;
}

Rational Series::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const { return coeff(MultiIndex(n_)); }

void Series::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.size() != n_) throw std::invalid_argument("exponent length does not match variable count");
  if (alpha.degree() > trunc_) {
    throw std::invalid_argument("monomial " + alpha.to_string() + " exceeds truncation degree " +
                                std::to_string(trunc_));
  }
  add_term_truncating(alpha, c);
}

void Series::add_term_truncating(const MultiIndex& alpha, const Rational& c) {
  if (alpha.size() != n_) throw std::invalid_argument("exponent length does not match variable count");
  if (c == 0 || alpha.degree() > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned Series::valuation() const noexcept {
  return terms_.empty() ? trunc_ + 1 : terms_.begin()->first.degree();
}

Series Series::homogeneous_part(unsigned d) const {
  Series out(n_, trunc_);
  for (const auto& [a, c] : terms_) {
    if (a.degree() == d) out.terms_.emplace_hint(out.terms_.end(), a, c);
  }
  return out;
}

Series Series::truncated(unsigned d) const {
  if (d > trunc_) throw std::invalid_argument("cannot raise truncation degree by truncating");
  Series out(n_, d);
  for (const auto& [a, c] : terms_) {
    if (a.degree() > d) break;
    out.terms_.emplace_hint(out.terms_.end(), a, c);
  }
  return out;
}

Series Series::with_trunc(unsigned d) const {
  if (d < trunc_) return truncated(d);
  Series out = *this;
  out.trunc_ = d;
  return out;
}

void Series::require_compatible(const Series& rhs, const char* op) const {
  if (n_ != rhs.n_ || trunc_ != rhs.trunc_) {
    std::ostringstream msg;
    msg << op << ": mismatched series (n=" << n_ << ", D=" << trunc_ << ") vs (n=" << rhs.n_
        << ", D=" << rhs.trunc_ << ")";
    throw std::invalid_argument(msg.str());
  }
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& [a, c] : out.terms_) c = -c;
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  require_compatible(rhs, "add");
  for (const auto& [a, c] : rhs.terms_) add_term_truncating(a, c);
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_compatible(rhs, "subtract");
  for (const auto& [a, c] : rhs.terms_) add_term_truncating(a, -c);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [a, v] : terms_) v *= c;
  }
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.require_compatible(b, "multiply");
  Series out(a.n_, a.trunc_);
  for (const auto& [ea, ca] : a.terms_) {
    const unsigned da = ea.degree();
    if (da > a.trunc_) break;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + eb.degree() > a.trunc_) break;
      out.add_term_truncating(ea + eb, ca * cb);
    }
  }
  return out;
}

Series& Series::operator*=(const Series& rhs) { return *this = *this * rhs; }

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += fgi::to_string(c);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      s += "*X" + std::to_string(i + 1);
      if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
  }
  return s;
}

Series derivative(const Series& f, std::size_t j) {
  if (j >= f.n_vars()) throw std::invalid_argument("derivative variable out of range");
  if (f.trunc_degree() == 0) throw std::invalid_argument("derivative of a degree-0 truncation carries no information");
  Series out(f.n_vars(), f.trunc_degree() - 1);
  for (const auto& [a, c] : f.terms()) {
    if (a[j] == 0) continue;
    MultiIndex b = a;
    --b[j];
    out.add_term(b, c * a[j]);
  }
  return out;
}

Series mul_variable(const Series& f, std::size_t i) {
  if (i >= f.n_vars()) throw std::invalid_argument("variable index out of range");
  Series out(f.n_vars(), f.trunc_degree() + 1);
  for (const auto& [a, c] : f.terms()) {
    MultiIndex b = a;
    ++b[i];
    out.add_term(b, c);
  }
  return out;
}

Series pow(const Series& f, unsigned k) {
  Series result = Series::constant(f.n_vars(), f.trunc_degree(), 1);
  Series base = f;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Series reciprocal(const Series& f) {
  const Rational c0 = f.constant_term();
  if (c0 == 0) throw domain_error("reciprocal of a series with zero constant term");
  const std::size_t n = f.n_vars();
  const unsigned D = f.trunc_degree();
  Series g = Series::constant(n, D, 1 / c0);
  // g_d = -(1/c0) * [X^d] (f - c0) * g_{<d}
  for (unsigned d = 1; d <= D; ++d) {
    Series layer(n, D);
    for (const auto& [ea, ca] : f.terms()) {
      const unsigned da = ea.degree();
      if (da == 0) continue;
      if (da > d) break;
      for (const auto& [eb, cb] : g.terms()) {
        const unsigned db = eb.degree();
        if (da + db < d) continue;
        if (da + db > d) break;
        layer.add_term(ea + eb, ca * cb);
      }
    }
    g += layer * Rational(-1 / c0);
  }
  return g;
}

Series exp_series(const Series& f) {
  if (f.constant_term() != 0) throw std::invalid_argument("exp_series needs a constant-free argument");
  Series result = Series::constant(f.n_vars(), f.trunc_degree(), 1);
  Series power = result;
  for (unsigned k = 1; k <= f.trunc_degree(); ++k) {
    power *= f;
    power *= Rational(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

Series log_series(const Series& f) {
  if (f.constant_term() != 1) throw std::invalid_argument("log_series needs constant term 1");
  Series g = f - Series::constant(f.n_vars(), f.trunc_degree(), 1);
  Series result(f.n_vars(), f.trunc_degree());
  Series power = Series::constant(f.n_vars(), f.trunc_degree(), 1);
  for (unsigned k = 1; k <= f.trunc_degree(); ++k) {
    power *= g;
    if (power.is_zero()) break;
    result += power * Rational(k % 2 ? 1 : -1, k);
  }
  return result;
}

Series substitute(const Series& outer, std::span<const Series> inner) {
  if (inner.size() != outer.n_vars()) {
    throw std::invalid_argument("substitute: need one inner series per outer variable");
  }
  if (inner.empty()) throw std::invalid_argument("substitute: empty inner list");
  const std::size_t m = inner.front().n_vars();
  const unsigned in_trunc = inner.front().trunc_degree();
  for (const Series& s : inner) {
    if (s.n_vars() != m || s.trunc_degree() != in_trunc) {
      throw std::invalid_argument("substitute: inner series disagree on shape");
    }
    if (s.constant_term() != 0) throw std::invalid_argument("substitute: inner series must be constant-free");
  }
  const unsigned T = std::min(outer.trunc_degree(), in_trunc);
  std::vector<Series> in_t;
  in_t.reserve(inner.size());
  for (const Series& s : inner) in_t.push_back(s.truncated(T));

  // powers[j][e] = inner_j^e, grown on demand
  std::vector<std::vector<Series>> powers(inner.size());
  auto power_of = [&](std::size_t j, unsigned e) -> const Series& {
    auto& p = powers[j];
    if (p.empty()) p.push_back(Series::constant(m, T, 1));
    while (p.size() <= e) p.push_back(p.back() * in_t[j]);
    return p[e];
  };

  Series out(m, T);
  for (const auto& [a, c] : outer.terms()) {
    if (a.degree() > T) break;
    Series term = Series::constant(m, T, c);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j]) term *= power_of(j, a[j]);
    }
    out += term;
  }
  return out;
}

Rational tensor_element(const Series& f, std::span<const std::size_t> js) {
  const MultiIndex mu = multiplicity_index(js, f.n_vars());
  if (mu.degree() > f.trunc_degree()) {
    throw std::invalid_argument("tensor order " + std::to_string(mu.degree()) + " exceeds truncation degree");
  }
  return Rational(mu.factorial()) * f.coeff(mu);
}

}  // namespace fgi
