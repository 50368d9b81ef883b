#pragma once

#include <cstdint>
#include <vector>

#include "caplab/space.hpp"

namespace caplab {

enum class Provenance { explicit_table, additive, counting_dyadic, random };

// A nonadditive measure (capacity) on the power set of a finite space:
// mu(empty) = 0, monotone under inclusion, values in [0, inf]. Immutable
// after construction; all operations on it are pure.
struct Capacity {
  FiniteSpace space;
  std::vector<double> values;  // indexed by subset mask, size 2^n
  Provenance provenance = Provenance::explicit_table;

  // rule payloads, kept for serialization
  int dyadic_n = 0;
  std::vector<double> weights;
  std::uint64_t seed = 0;
  double null_bias = 0.0;

  int n() const { return space.n; }
  double operator()(mask_t a) const { return values[a]; }

  bool same_table(const Capacity& o) const {
    return space == o.space && values == o.values;
  }
};

// Checks the capacity axioms on a raw table (size 2^n, values[empty] = 0,
// monotone along one-point extensions, every value a valid extended real).
// Throws ValidationError with the offending subset(s) otherwise.
Capacity validate_capacity(FiniteSpace space, std::vector<double> table);

// mu^r pointwise, r > 0; inf^r = inf. Monotone because t -> t^r is increasing
// (a repair pass guards against sub-ulp rounding inversions).
Capacity power_transform(const Capacity& mu, double r);

// Sigma-additive capacity from nonnegative point weights.
Capacity from_additive(std::vector<double> weights);

// Truncation of the counting/dyadic measure on the naturals to {1,...,N}:
// mu(A) = |A| * sum_{i in A} 2^{-i} with labels i = point index + 1.
// Exact in binary floating point for N <= 24.
Capacity counting_dyadic(int N);

// Deterministic monotone fuzzing generator. Visits subsets by increasing
// cardinality; each value is the max over immediate subsets plus a random
// increment (zero with probability 1/2, else at least 0.05 so decider
// failure gaps stay far above verification tolerances). Each singleton is
// forced null with probability null_set_bias.
Capacity random_capacity(int n, std::uint64_t seed, double null_set_bias);

// Subadditive generator: concave distortion (sum of weights)^gamma, gamma in
// (0, 1].
Capacity random_subadditive_capacity(int n, std::uint64_t seed);

// Masks of all mu-null subsets (mu(A) = 0), ascending; includes the empty set.
std::vector<mask_t> null_sets(const Capacity& mu);

// Union of all null sets. Null itself iff mu is weakly null-additive.
mask_t null_core(const Capacity& mu);

}  // namespace caplab
