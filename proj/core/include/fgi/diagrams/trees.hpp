#ifndef FGI_DIAGRAMS_TREES_HPP
#define FGI_DIAGRAMS_TREES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fgi {

/// Reversion grammar: leaves are source vertices, internal nodes are
/// nonlinear vertices with at least two children.
struct ReversionTag {};
/// Lagrange-Good grammar: every node is an XG-vertex, any arity.
struct LagrangeGoodTag {};

/// Rooted unlabeled tree; children form a multiset, kept sorted by encoding
/// once canonicalized.
template <class Tag>
struct Tree {
  std::vector<Tree> children;

  bool is_leaf() const noexcept { return children.empty(); }
  friend bool operator==(const Tree&, const Tree&) = default;
};

using TreeClass = Tree<ReversionTag>;
using LGTreeClass = Tree<LagrangeGoodTag>;

/// Unlabeled circuit: decorations[q] is the multiset of trees hooked on the
/// q-th circuit vertex. The successor of vertex q contracts into q's circuit
/// leg; rotations are identified, reflections are not.
template <class Tag>
struct Circuit {
  std::vector<std::vector<Tree<Tag>>> decorations;

  std::size_t length() const noexcept { return decorations.size(); }
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

using ReversionCircuit = Circuit<ReversionTag>;
using LGCircuitClass = Circuit<LagrangeGoodTag>;

// Encodings: reversion "L" and "H(c1,c2,...)"; Lagrange-Good "G" and "G(...)";
// circuits "C[{t,...}|{...}]". Children and decoration entries are sorted by
// encoding, circuits rotated to the lexicographically least vertex sequence.

template <class Tag>
std::string encode(const Tree<Tag>& t);
template <class Tag>
std::string encode(const Circuit<Tag>& c);

template <class Tag>
Tree<Tag> canonicalize(Tree<Tag> t);
template <class Tag>
Circuit<Tag> canonicalize(Circuit<Tag> c);

/// Parses an encoding produced by encode(); throws std::invalid_argument.
TreeClass parse_tree_class(std::string_view text);
LGTreeClass parse_lg_tree_class(std::string_view text);

/// Product over nodes of prod_c aut(c)^{m_c} m_c! over distinct child classes.
template <class Tag>
std::uint64_t aut_order(const Tree<Tag>& t);

/// Rotations fixing the canonical sequence, times the per-vertex product of
/// m_c! aut(c)^{m_c} over distinct decoration classes.
template <class Tag>
std::uint64_t aut_order(const Circuit<Tag>& c);

template <class Tag>
unsigned leaf_count(const Tree<Tag>& t);
template <class Tag>
unsigned node_count(const Tree<Tag>& t);

/// Source-leaf count of a reversion circuit (its Y-degree).
unsigned leaf_count(const ReversionCircuit& c);
/// Total X-degree of a Lagrange-Good circuit: circuit vertices plus tree nodes.
unsigned degree(const LGCircuitClass& c);

/// All canonical reversion trees with 1..max_leaves leaves, ordered by leaf
/// count then encoding.
std::vector<TreeClass> enumerate_reversion_trees(unsigned max_leaves);

/// All canonical Lagrange-Good trees with 1..max_nodes nodes.
std::vector<LGTreeClass> enumerate_lg_trees(unsigned max_nodes);

/// All canonical Lagrange-Good circuits of total X-degree 1..max_degree.
std::vector<LGCircuitClass> enumerate_lg_circuits(unsigned max_degree);

/// All canonical vacuum circuits of the reversion grammar with
/// 1..max_leaves source leaves. Every circuit vertex carries at least one tree.
std::vector<ReversionCircuit> enumerate_reversion_circuits(unsigned max_leaves);

/// Half-line count of a diagram: two per contraction line.
unsigned half_lines(const TreeClass& t);
unsigned half_lines(const ReversionCircuit& c);
unsigned half_lines(const LGTreeClass& t);
unsigned half_lines(const LGCircuitClass& c);

}  // namespace fgi

#endif  // FGI_DIAGRAMS_TREES_HPP
