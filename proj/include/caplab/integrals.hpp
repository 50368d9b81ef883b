#pragma once

#include <span>
#include <vector>

#include "caplab/fn.hpp"
#include "caplab/properties.hpp"

namespace caplab {

// mu({f > t}) (strict) or mu({f >= t}); nonincreasing in t, may be inf.
double distribution(const Capacity& mu, const MeasurableFn& f, double t, bool strict = true);

// Sugeno integral sup_t t ^ mu({f > t}) for f >= 0, computed exactly at the
// finitely many distinct values of f: max_v v ^ mu({f >= v}). Always finite
// (bounded by max f).
double sugeno_integral(const Capacity& mu, const MeasurableFn& f);

// Same supremum evaluated literally on the grid {0, h, 2h, ..., max f + h}.
// Independent testing oracle; within h below the closed form.
double sugeno_bruteforce(const Capacity& mu, const MeasurableFn& f, double grid_h,
                         Exec exec = Exec::parallel);

// Choquet integral int_0^inf mu({f > t}) dt for f >= 0 via the descending
// rearrangement sum; may be inf, with inf * 0 = 0 for zero gaps.
double choquet_integral(const Capacity& mu, const MeasurableFn& f);

// Core used by the integral and the prenorm evaluators: Sugeno integral of
// the nonnegative point values `vals` against a raw subset table.
double sugeno_core(std::span<const double> table, std::span<const double> vals);

}  // namespace caplab
