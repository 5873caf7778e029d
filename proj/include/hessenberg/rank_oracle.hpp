#pragma once

#include <cstdint>

#include "hessenberg/forms.hpp"

namespace hessenberg {

// Independent dimension computation by exact linear algebra.  Walks rows
// i = n-1 .. 1 keeping a sample point u' of the partial solution tower:
// conjugates Y = u'^{-1}(S+N)u', assembles the affine system cutting out
// row i of the Hessenberg conditions in the free entries {u_ik : k > i,
// w(i) > w(k)}, records (#unknowns - rank), picks a pseudorandom rational
// solution and extends u'.  Returns the summed free dimensions.
//
// The construction guarantees every system is solvable on a nonempty cell;
// an inconsistent system or a final sample point violating the Hessenberg
// conditions raises InternalError.
int cell_dimension_rank_oracle(const Perm& w, const MultiTableau& tableau,
                               const HessenbergFunction& h, std::uint64_t seed);
int cell_dimension_rank_oracle(const Perm& w, const JordanData& jordan,
                               const HessenbergFunction& h, std::uint64_t seed);

}  // namespace hessenberg
