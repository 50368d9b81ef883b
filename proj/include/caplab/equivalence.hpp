#pragma once

#include "caplab/fn.hpp"

namespace caplab {

// f ~ g iff mu({|f - g| > c}) = 0 for every c > 0; on a finite space this is
// mu({f != g}) = 0. The implementation double-checks the verdict by sweeping
// c over every constancy interval of |f - g|.
bool are_equivalent(const Capacity& mu, const MeasurableFn& f, const MeasurableFn& g);

struct QuotientRep {
  MeasurableFn canonical;  // f zeroed on the null core
  mask_t null_core = 0;    // union of all mu-null sets
};

// Canonical representative of [f]: f zeroed on the union of all null sets.
// Requires mu null-additive (checked) so that the union of null sets is null
// and representatives behave under the prenorms; throws PreconditionError
// otherwise.
QuotientRep quotient_canonical(const Capacity& mu, const MeasurableFn& f);

}  // namespace caplab
