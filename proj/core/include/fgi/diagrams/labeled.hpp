#ifndef FGI_DIAGRAMS_LABELED_HPP
#define FGI_DIAGRAMS_LABELED_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgi/diagrams/composition.hpp"
#include "fgi/diagrams/trees.hpp"
#include "fgi/series.hpp"
#include "fgi/series_system.hpp"
#include "fgi/wick.hpp"

namespace fgi {

enum class Flavor { composition, reversion, lagrange_good };

/// Which field a half-line (element of the ground set) belongs to.
enum class Field : std::uint8_t { sbar, s, tbar, t, ubar, u };

/// Vertex species: F and G (composition), H and Y (reversion), XG (Lagrange-Good).
enum class BlockKind : std::uint8_t { F, G, H, Y, XG };

/// pre_feynman: vertices and external legs only. feynman: plus a contraction
/// scheme pairing every barred half-line with an unbarred one.
enum class LabeledLevel { pre_feynman, feynman };

/// Explicit labeled structure on the ground set {0, ..., k-1}.
///
/// Every element carries a field. Internal elements are grouped into blocks
/// (vertices); each block holds exactly one barred element (its "point").
/// External elements belong to no block and are reached through rho_root
/// (s for composition, u otherwise) and rho_leaf (ubar). `contraction`
/// is empty at the pre-Feynman level, otherwise contraction[x] is the
/// unbarred partner of each barred x and npos elsewhere.
struct LabeledStructure {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Flavor flavor = Flavor::reversion;
  std::size_t k = 0;
  std::vector<Field> field;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<BlockKind> block_kind;
  std::vector<std::size_t> rho_root;
  std::vector<std::size_t> rho_leaf;
  std::vector<std::size_t> contraction;

  bool has_contraction() const noexcept { return !contraction.empty(); }

  /// Sorts each block and orders blocks by their least element.
  void normalize();
  /// block index of each element, -1 for external elements
  std::vector<int> block_of() const;

  friend bool operator==(const LabeledStructure&, const LabeledStructure&) = default;
};

/// Checks every defining constraint of the flavor; returns the first
/// violated one, or nothing when the structure is valid.
std::optional<std::string> validate(const LabeledStructure& s);

/// Transport of structure along the bijection x -> sigma[x].
LabeledStructure transport(const LabeledStructure& s, const std::vector<std::size_t>& sigma);

/// Connectivity of the derived graph whose vertices are the blocks and the
/// external half-lines, joined by contraction lines. Requires a contraction.
bool is_connected(const LabeledStructure& s);

/// Exhaustive constrained search over all structures on {0..k-1} of type
/// (I, J) with |I| = n_root and |J| = n_leaf. Only structures whose barred
/// and unbarred counts match field by field (so that a contraction scheme
/// exists) are produced. Throws fgi::resource_error for k > 10.
void labeled_for_each(std::size_t k, Flavor flavor, std::size_t n_root, std::size_t n_leaf, LabeledLevel level,
                      const std::function<void(const LabeledStructure&)>& visit);

std::vector<LabeledStructure> labeled_enumerate(std::size_t k, Flavor flavor, std::size_t n_root, std::size_t n_leaf,
                                                LabeledLevel level, bool connected_only);

/// Number of permutations of the ground set preserving the structure,
/// counted by brute force. When `movable` is given only permutations
/// supported on those elements are tried.
std::uint64_t labeled_aut_order(const LabeledStructure& s,
                                std::optional<std::vector<std::size_t>> movable = std::nullopt);

/// Canonical unlabeled class of a connected Feynman structure, when it is of
/// the shape handled by the direct enumerators; nothing otherwise.
std::optional<TreeClass> reversion_tree_of(const LabeledStructure& s);
std::optional<ReversionCircuit> reversion_circuit_of(const LabeledStructure& s);
std::optional<LGTreeClass> lg_tree_of(const LabeledStructure& s);
std::optional<LGCircuitClass> lg_circuit_of(const LabeledStructure& s);
/// Profile of a contributing composition structure (either level).
std::optional<CompositionClass> composition_class_of(const LabeledStructure& s);

/// Class encoding for any of the above (tree, circuit or composition profile),
/// or nothing when the structure has no direct-enumerator counterpart.
std::optional<std::string> class_encoding_of(const LabeledStructure& s);

/// Pre-Feynman realization of a composition class on {0..2+2m+2d-1}.
LabeledStructure composition_realization(const CompositionClass& c);

/// The explicit 16-element pre-Feynman example for d = 5 (0-based labels):
/// one F-vertex with two t-legs, G-vertices with three and two u-legs.
LabeledStructure composition_sixteen_element_example();

/// Amplitude of a labeled Feynman structure by brute force over every index
/// attribution of the ground set; roots carry tau_root, leaves tau_leaf.
/// Reversion flavor: edges A^{-1} from the linear part of f, H-vertices -F^{[p]},
/// Y-vertices Y_j. Lagrange-Good: identity edges, XG-vertices X_i G^{[p]}.
Series labeled_amplitude(const LabeledStructure& s, const SeriesSystem& f, const std::vector<std::size_t>& tau_root,
                         const std::vector<std::size_t>& tau_leaf, unsigned degree);

/// Counts entering the vertex-count bound for reversion structures.
struct VertexBoundCounts {
  std::size_t half_lines = 0;     // k
  std::size_t vertices = 0;       // blocks plus external half-lines
  std::size_t source_leaves = 0;  // Y-vertices
  std::size_t ubar_sources = 0;   // |J|
  bool vertex_bound_holds() const { return vertices <= 2 * (source_leaves + ubar_sources); }
  bool half_line_bound_holds() const { return half_lines <= 2 * (source_leaves + ubar_sources); }
};
VertexBoundCounts vertex_bound_counts(const LabeledStructure& s);

}  // namespace fgi

#endif  // FGI_DIAGRAMS_LABELED_HPP
