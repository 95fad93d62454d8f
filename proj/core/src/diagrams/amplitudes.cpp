#include "fgi/diagrams/amplitudes.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgi {

namespace {

using Grid = std::vector<std::vector<Series>>;

Grid grid_product(const Grid& a, const Grid& b, std::size_t n_vars, unsigned degree) {
  const std::size_t k = a.size();
  Grid c(k, std::vector<Series>(k, Series(n_vars, degree)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t m = 0; m < k; ++m) {
      if (a[i][m].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (!b[m][j].is_zero()) c[i][j] += a[i][m] * b[m][j];
      }
    }
  return c;
}

Grid constant_grid(const Matrix& m, std::size_t n_vars, unsigned degree) {
  Grid g(m.rows(), std::vector<Series>(m.cols(), Series(n_vars, degree)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = Series::constant(n_vars, degree, m(i, j));
  return g;
}

}  // namespace

TensorSlice tensor_slice(const Series& f, unsigned p) {
  if (p > f.trunc_degree()) {
    throw std::invalid_argument("tensor order " + std::to_string(p) + " exceeds truncation degree " +
                                std::to_string(f.trunc_degree()));
  }
  TensorSlice out;
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.degree() < p) continue;
    if (alpha.degree() > p) break;
    const Rational value = Rational(alpha.factorial()) * c;
    std::vector<std::size_t> tuple = representative_index_map(alpha);
    do {
      out.entries.emplace_back(tuple, value);
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
  return out;
}

ReversionRules::ReversionRules(const SeriesSystem& f, unsigned degree)
    : f_(f), cov_(f.linear_part()), degree_(degree) {
  if (f.size() != f.n_vars()) throw std::invalid_argument("reversion needs a square system");
  if (!f.is_constant_free()) throw std::invalid_argument("reversion needs a constant-free system");
}

const TensorSlice& ReversionRules::slice(std::size_t i, unsigned p) {
  auto key = std::make_pair(i, p);
  auto it = slices_.find(key);
  if (it == slices_.end()) it = slices_.emplace(key, tensor_slice(f_[i], p)).first;
  return it->second;
}

const Series& ReversionRules::vertex(const TreeClass& t, std::size_t j) {
  const std::size_t n = f_.size();
  const std::string key = encode(t);
  auto it = vertex_memo_.find(key);
  if (it == vertex_memo_.end()) {
    std::vector<Series> values(n, Series(n, degree_));
    if (leaf_count(t) <= degree_) {
      if (t.is_leaf()) {
        for (std::size_t a = 0; a < n; ++a) values[a] = Series::variable(n, degree_, a);
      } else {
        const auto p = static_cast<unsigned>(t.children.size());
        for (std::size_t a = 0; a < n; ++a) {
          for (const auto& [tuple, val] : slice(a, p).entries) {
            Series prod = Series::constant(n, degree_, -val);
            for (unsigned r = 0; r < p && !prod.is_zero(); ++r) prod *= tree(t.children[r], tuple[r]);
            values[a] += prod;
          }
        }
      }
    }
    it = vertex_memo_.emplace(key, std::move(values)).first;
  }
  return it->second.at(j);
}

const Series& ReversionRules::tree(const TreeClass& t, std::size_t root) {
  const std::size_t n = f_.size();
  const std::string key = encode(t);
  auto it = tree_memo_.find(key);
  if (it == tree_memo_.end()) {
    std::vector<Series> values(n, Series(n, degree_));
    for (std::size_t j = 0; j < n; ++j) vertex(t, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (cov_.A_inv(i, j) != 0) values[i] += vertex(t, j) * cov_.A_inv(i, j);
      }
    it = tree_memo_.emplace(key, std::move(values)).first;
  }
  return it->second.at(root);
}

std::vector<std::vector<Series>> ReversionRules::vertex_matrix(const std::vector<TreeClass>& branches) {
  const std::size_t n = f_.size();
  const auto k = static_cast<unsigned>(branches.size());
  Grid m(n, std::vector<Series>(n, Series(n, degree_)));
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [tuple, val] : slice(a, k + 1).entries) {
      Series prod = Series::constant(n, degree_, -val);
      for (unsigned r = 0; r < k && !prod.is_zero(); ++r) prod *= tree(branches[r], tuple[r + 1]);
      m[a][tuple[0]] += prod;
    }
  }
  return m;
}

Series ReversionRules::circuit(const ReversionCircuit& c) {
  const std::size_t n = f_.size();
  if (leaf_count(c) > degree_) return Series(n, degree_);
  const Grid a_inv = constant_grid(cov_.A_inv, n, degree_);
  Grid acc = grid_product(vertex_matrix(c.decorations[0]), a_inv, n, degree_);
  for (std::size_t q = 1; q < c.length(); ++q) {
    acc = grid_product(acc, vertex_matrix(c.decorations[q]), n, degree_);
    acc = grid_product(acc, a_inv, n, degree_);
  }
  Series tr(n, degree_);
  for (std::size_t i = 0; i < n; ++i) tr += acc[i][i];
  return tr;
}

LagrangeGoodRules::LagrangeGoodRules(const SeriesSystem& g, unsigned degree) : g_(g), degree_(degree) {
  if (g.size() != g.n_vars()) throw std::invalid_argument("Lagrange-Good needs a square system");
}

const TensorSlice& LagrangeGoodRules::slice(std::size_t i, unsigned p) {
  auto key = std::make_pair(i, p);
  auto it = slices_.find(key);
  if (it == slices_.end()) it = slices_.emplace(key, tensor_slice(g_[i], p)).first;
  return it->second;
}

const Series& LagrangeGoodRules::tree(const LGTreeClass& t, std::size_t root) {
  const std::size_t n = g_.size();
  const std::string key = encode(t);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    std::vector<Series> values(n, Series(n, degree_));
    if (node_count(t) <= degree_) {
      const auto p = static_cast<unsigned>(t.children.size());
      for (std::size_t a = 0; a < n; ++a) {
        Series sum(n, degree_);
        for (const auto& [tuple, val] : slice(a, p).entries) {
          Series prod = Series::constant(n, degree_, val);
          for (unsigned r = 0; r < p && !prod.is_zero(); ++r) prod *= tree(t.children[r], tuple[r]);
          sum += prod;
        }
        values[a] = Series::variable(n, degree_, a) * sum;
      }
    }
    it = memo_.emplace(key, std::move(values)).first;
  }
  return it->second.at(root);
}

Series LagrangeGoodRules::circuit(const LGCircuitClass& c) {
  const std::size_t n = g_.size();
  if (fgi::degree(c) > degree_) return Series(n, degree_);
  Grid acc;
  for (std::size_t q = 0; q < c.length(); ++q) {
    const auto& branches = c.decorations[q];
    const auto k = static_cast<unsigned>(branches.size());
    Grid m(n, std::vector<Series>(n, Series(n, degree_)));
    for (std::size_t j = 0; j < n; ++j) {
      const Series xj = Series::variable(n, degree_, j);
      for (const auto& [tuple, val] : slice(j, k + 1).entries) {
        Series prod = xj * val;
        for (unsigned r = 0; r < k && !prod.is_zero(); ++r) prod *= tree(branches[r], tuple[r + 1]);
        m[j][tuple[0]] += prod;
      }
    }
    acc = q == 0 ? std::move(m) : grid_product(acc, m, n, degree_);
  }
  Series tr(n, degree_);
  for (std::size_t i = 0; i < n; ++i) tr += acc[i][i];
  return tr;
}

Series amplitude_tree(const TreeClass& t, const SeriesSystem& f, std::size_t root, unsigned degree) {
  ReversionRules rules(f, degree);
  return rules.tree(canonicalize(t), root);
}

Series amplitude_reversion_circuit(const ReversionCircuit& c, const SeriesSystem& f, unsigned degree) {
  ReversionRules rules(f, degree);
  return rules.circuit(canonicalize(c));
}

Series amplitude_lg_tree(const LGTreeClass& t, const SeriesSystem& g, std::size_t root, unsigned degree) {
  LagrangeGoodRules rules(g, degree);
  return rules.tree(canonicalize(t), root);
}

Series amplitude_lg_circuit(const LGCircuitClass& c, const SeriesSystem& g, unsigned degree) {
  LagrangeGoodRules rules(g, degree);
  return rules.circuit(canonicalize(c));
}

}  // namespace fgi
