#ifndef FGI_DIAGRAMS_AMPLITUDES_HPP
#define FGI_DIAGRAMS_AMPLITUDES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fgi/diagrams/trees.hpp"
#include "fgi/series.hpp"
#include "fgi/series_system.hpp"
#include "fgi/wick.hpp"

namespace fgi {

/// Nonzero entries of one symmetric tensor order of a series, as the list of
/// every index tuple (0-based) with its value F^{[p]}_{tuple}.
struct TensorSlice {
  std::vector<std::pair<std::vector<std::size_t>, Rational>> entries;
};

/// All index tuples of length p with nonzero tensor value for component f.
TensorSlice tensor_slice(const Series& f, unsigned p);

/// Feynman-rule evaluator for the reversion grammar of a constant-free F with
/// invertible linear part A: edges carry A^{-1} (u end first), a p-ary
/// nonlinear vertex carries -F^{[p]}, a leaf with index j carries Y_j.
/// Results are series in Y_1..Y_n truncated at `degree`. Subtree values are
/// memoized by encoding.
class ReversionRules {
 public:
  ReversionRules(const SeriesSystem& f, unsigned degree);

  const CovarianceSpec& covariance() const noexcept { return cov_; }
  unsigned degree() const noexcept { return degree_; }

  /// sum_j A^{-1}_{root j} * vertex(t, j)
  const Series& tree(const TreeClass& t, std::size_t root);

  /// Value of the subtree with its top vertex carrying index j (no root edge).
  const Series& vertex(const TreeClass& t, std::size_t j);

  /// tr(N_1 A^{-1} N_2 A^{-1} ... N_p A^{-1}),
  /// N_q[a][b] = sum_c -F^{[k+1]}_{a,b,c} prod_r tree(branch_r, c_r).
  Series circuit(const ReversionCircuit& c);

 private:
  const TensorSlice& slice(std::size_t i, unsigned p);
  std::vector<std::vector<Series>> vertex_matrix(const std::vector<TreeClass>& branches);

  SeriesSystem f_;
  CovarianceSpec cov_;
  unsigned degree_;
  std::map<std::pair<std::size_t, unsigned>, TensorSlice> slices_;
  std::map<std::string, std::vector<Series>> tree_memo_;
  std::map<std::string, std::vector<Series>> vertex_memo_;
};

/// Feynman-rule evaluator for the Lagrange-Good grammar of a system G:
/// identity edges, and an XG-vertex with index i and p children carries
/// X_i G^{[p]}_{i,...}. Results are series in X_1..X_n truncated at `degree`.
class LagrangeGoodRules {
 public:
  LagrangeGoodRules(const SeriesSystem& g, unsigned degree);

  unsigned degree() const noexcept { return degree_; }

  const Series& tree(const LGTreeClass& t, std::size_t root);

  /// tr(N_1 ... N_p), N_q[j][j'] = X_j sum_c G^{[k+1]}_{j,j',c} prod_r tree(branch_r, c_r).
  Series circuit(const LGCircuitClass& c);

 private:
  const TensorSlice& slice(std::size_t i, unsigned p);

  SeriesSystem g_;
  unsigned degree_;
  std::map<std::pair<std::size_t, unsigned>, TensorSlice> slices_;
  std::map<std::string, std::vector<Series>> memo_;
};

Series amplitude_tree(const TreeClass& t, const SeriesSystem& f, std::size_t root, unsigned degree);
Series amplitude_reversion_circuit(const ReversionCircuit& c, const SeriesSystem& f, unsigned degree);
Series amplitude_lg_tree(const LGTreeClass& t, const SeriesSystem& g, std::size_t root, unsigned degree);
Series amplitude_lg_circuit(const LGCircuitClass& c, const SeriesSystem& g, unsigned degree);

}  // namespace fgi

#endif  // FGI_DIAGRAMS_AMPLITUDES_HPP
