#pragma once

#include <optional>

#include "caplab/prenorms.hpp"

namespace caplab {

// Certificate that the prenorm sphere S(0, r0) is not open: an inner point
// f0 together with an outsider g at prenorm-distance zero from f0. Exists
// exactly when mu fails autocontinuity from above.
struct SphereWitness {
  double r0 = 0;
  MeasurableFn inner;     // (inner)_{p,q} < r0
  MeasurableFn outsider;  // (outsider)_{p,q} >= r0, (outsider - inner)_{p,q} = 0
  PrenormParams params;
  mask_t a0 = 0;  // decider witness sets used in the construction
  mask_t nset = 0;
  double inner_value = 0;
  double outsider_value = 0;
  double diff_value = 0;
};

// Certificate that the closed ball D(0, r0) is not closed: a limit point f0
// outside the ball at prenorm-distance zero from an inside point g. Exists
// exactly when mu fails autocontinuity from below.
struct BallWitness {
  double r0 = 0;
  MeasurableFn limit_point;   // (limit_point)_{p,q} > r0
  MeasurableFn inside_point;  // (inside_point)_{p,q} <= r0, distance zero to limit_point
  PrenormParams params;
  mask_t a0 = 0;
  mask_t nset = 0;
  double limit_value = 0;
  double inside_value = 0;
  double diff_value = 0;
};

std::optional<SphereWitness> non_open_sphere_witness(const Capacity& mu,
                                                     const PrenormParams& params,
                                                     Exec exec = Exec::parallel);
std::optional<BallWitness> non_closed_ball_witness(const Capacity& mu,
                                                   const PrenormParams& params,
                                                   Exec exec = Exec::parallel);

// Recompute the three defining relations of a witness with fresh prenorm
// evaluations; true when all hold within tol.
bool verify_witness(const Capacity& mu, const SphereWitness& w, double tol = 1e-12);
bool verify_witness(const Capacity& mu, const BallWitness& w, double tol = 1e-12);

}  // namespace caplab
