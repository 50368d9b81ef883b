#pragma once

#include "caplab/fn.hpp"
#include "caplab/prenorms.hpp"
#include "caplab/rng.hpp"

namespace caplab {

// Random nonnegative function with deliberate zeros and ties so level-set
// edge cases get exercised.
MeasurableFn random_fn(const FiniteSpace& sp, rng::SplitMix64& r, double lo = 0.0,
                       double hi = 3.0, double zero_prob = 0.15, double tie_prob = 0.2);

// Random signed function (values in [-hi, hi]).
MeasurableFn random_signed_fn(const FiniteSpace& sp, rng::SplitMix64& r, double hi = 3.0);

// p, q drawn from [0.5, 3].
PrenormParams random_params(rng::SplitMix64& r);

}  // namespace caplab
