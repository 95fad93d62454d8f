#ifndef FGI_INVERSION_COMPOSITION_HPP
#define FGI_INVERSION_COMPOSITION_HPP

#include "fgi/inversion/result.hpp"
#include "fgi/series_system.hpp"

namespace fgi {

/// F o G assembled degree by degree as the sum over composition classes of
/// amplitude / aut, plus the constant terms of F. Same preconditions as
/// compose_direct; G must be constant-free.
InversionResult compose_diagrammatic(const SeriesSystem& f, const SeriesSystem& g);

}  // namespace fgi

#endif  // FGI_INVERSION_COMPOSITION_HPP
