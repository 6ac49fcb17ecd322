#pragma once

// Deliberately broken operator sets. A proposition run against one of these
// must report at least one failure, otherwise the checker is vacuous.

#include "gotas/approximations.hpp"

namespace gotas::mutants {

// Gamma upper with its outer union replaced by an intersection:
// A ∩ [C(I(A)) ∪ I(C(A))] instead of A ∪ [C(I(A)) ∪ I(C(A))].
struct CorruptedGammaUpper {
  Subset lower(const Gotas& g, const Subset& a, Family j, Direction d) const {
    return gotas::lower(g, a, j, d);
  }
  Subset upper(const Gotas& g, const Subset& a, Family j, Direction d) const {
    if (j != Family::Gamma) return gotas::upper(g, a, j, d);
    return a & (r_upper(g, r_lower(g, a, d), d) | r_lower(g, r_upper(g, a, d), d));
  }
};

static_assert(ApproximationOperators<CorruptedGammaUpper>);

}  // namespace gotas::mutants
