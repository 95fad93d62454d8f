#ifndef FGI_DIAGRAMS_COMPOSITION_HPP
#define FGI_DIAGRAMS_COMPOSITION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fgi/series.hpp"
#include "fgi/series_system.hpp"

namespace fgi {

/// Isomorphism class of a contributing composition diagram: one F-vertex
/// with m legs, each joined to a G-vertex; the G-vertices carry q external
/// legs with multiplicity g_profile[q]. Equivalently an integer partition of
/// the degree d = sum q * g_profile[q] with m = sum g_profile[q] parts.
struct CompositionClass {
  std::map<unsigned, unsigned> g_profile;

  unsigned m() const;
  unsigned degree() const;
  /// "{q:m,...}" with q ascending.
  std::string encoding() const;

  friend auto operator<=>(const CompositionClass&, const CompositionClass&) = default;
};

/// Every partition of d, each exactly once.
std::vector<CompositionClass> enumerate_composition_classes(unsigned d);

/// m! * prod_q (g_profile[q]! * (q!)^{g_profile[q]}).
std::uint64_t aut_order_composition(const CompositionClass& c);

/// Degree-d homogeneous series m! * sum_alpha F^{[m]}_{i,alpha} prod_r omega_r! hom_{omega_r}(G_{alpha_r}),
/// where omega lists the parts of the class. Dividing by aut_order_composition
/// gives the class's contribution to the degree-d part of (F o G)_i.
/// Throws std::invalid_argument when F is truncated below m or G below d.
Series amplitude_composition(const CompositionClass& c, const SeriesSystem& f, const SeriesSystem& g, std::size_t i);

}  // namespace fgi

#endif  // FGI_DIAGRAMS_COMPOSITION_HPP
