#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "caplab/integrals.hpp"

namespace caplab {

// The (p, q) pair of the Sugeno-Lorentz prenorm with its derived constants
// L0 = (p/q)^{1/q} and M0 = (q/p)^{1/q}; L0 * M0 = 1.
struct PrenormParams {
  double p = 1.0;
  double q = 1.0;
  double l0 = 1.0;
  double m0 = 1.0;

  PrenormParams() = default;
  PrenormParams(double p_, double q_);
};

// phi: [0, inf] -> [0, pi/2], arctan extended by phi(inf) = pi/2.
inline double phi(double t) {
  return std::isinf(t) ? std::numbers::pi / 2.0 : std::atan(t);
}

// Precomputes the mu^{q/p} and mu^{1/p} tables once so that many functions
// can be evaluated against the same (mu, params) cheaply. value() computes
// both routes and cross-checks them:
//   eq3:  Su(mu^{q/p}, p|f|^q/q)^{1/q}        (the defining formula)
//   alt:  Su(mu^{1/p}, L0 |f|)                (exponentiation identity)
struct PrenormEvaluator {
  const Capacity* mu = nullptr;
  PrenormParams params;
  std::vector<double> mu_qp;  // mu^{q/p}
  std::vector<double> mu_1p;  // mu^{1/p}

  PrenormEvaluator(const Capacity& mu_, PrenormParams params_);

  double eq3(const MeasurableFn& f) const;
  double alt(const MeasurableFn& f) const;
  // eq3 value after cross-checking the two routes (CrossCheckMismatch on
  // disagreement beyond 1e-9 relative / 1e-12 absolute).
  double value(const MeasurableFn& f) const;
  // prenorm of f - g without materializing the difference
  double dist(const MeasurableFn& f, const MeasurableFn& g) const;

 private:
  double eq3_raw(std::span<const double> absvals) const;
  double alt_raw(std::span<const double> absvals) const;
  double checked(std::span<const double> absvals) const;
};

// (f)_{p,q}: the Sugeno-Lorentz prenorm, Su(mu^{q/p}, p|f|^q/q)^{1/q}.
double sugeno_lorentz_prenorm(const Capacity& mu, const MeasurableFn& f,
                              const PrenormParams& params);

// The earlier definition (p/q)^{1/q} Su(mu^{q/p}, |f|^q)^{1/q}; not equivalent
// because the Sugeno integral is not positively homogeneous. Exposed for
// comparison studies only.
double sugeno_lorentz_prenorm_legacy(const Capacity& mu, const MeasurableFn& f,
                                     const PrenormParams& params);

// (f)_1 = (f)_{1,1} = Su(mu, |f|).
double sugeno_prenorm(const Capacity& mu, const MeasurableFn& f);

// Dunford-Schwartz prenorm inf_{c>0} phi(c + mu({|f| > c})), exact on finite
// spaces: min over the distinct values v_i of |f| (v_0 = 0 encodes c -> 0+)
// of phi(v_i + mu({|f| > v_i})). Value in [0, pi/2].
double dunford_schwartz_prenorm(const Capacity& mu, const MeasurableFn& f);

// Grid minimization over c in {h, 2h, ...}; testing oracle. Upper-bounds the
// exact value and exceeds it by at most phi(h).
double dunford_schwartz_bruteforce(const Capacity& mu, const MeasurableFn& f, double grid_h,
                                   Exec exec = Exec::parallel);

// Lorentz quasi-seminorm via the Choquet integral: Ch(mu^{q/p}, p|f|^q/q)^{1/q}.
// May be inf.
double lorentz_choquet_quasinorm(const Capacity& mu, const MeasurableFn& f,
                                 const PrenormParams& params);

struct BoundPair {
  double lhs = 0;
  double rhs = 0;
};

// Both sides of the norm-comparison inequalities
//   (f)_{p,q}    <= [max{1,L0} (f)_1]^{1/p} + max{1,L0} (f)_1
//   (f)_1^{1/p}  <= [max{1,M0} (f)_{p,q}]^{1/p} + max{1,M0} (f)_{p,q}
struct EstBounds {
  BoundPair ineq4;
  BoundPair ineq5;
};
EstBounds est_bounds(const Capacity& mu, const MeasurableFn& f, const PrenormParams& params);

// Both sides of the Dunford-Schwartz comparison
//   ||f|| >= min{ phi((f)_{p,q}^p), phi(M0 (f)_{p,q}) }
//   ||f|| <= phi((f)_{p,q}^p + M0 (f)_{p,q})
struct ComparisonBounds {
  double ds = 0;  // ||f||
  BoundPair lower;  // lhs = the min above, rhs = ds
  BoundPair upper;  // lhs = ds, rhs = the phi(...) above
};
ComparisonBounds comparison_bounds(const Capacity& mu, const MeasurableFn& f,
                                   const PrenormParams& params);

// Chebyshev-type lower bound. derived_lhs = min{eps^p (p/q)^{p/q}, mu({|f|>eps})}
// follows from the Sugeno sup bound at t = L0 eps and is asserted by tests;
// literal_lhs carries eps to the first power as printed in the source
// material and is only recorded.
struct ChebyshevBound {
  double literal_lhs = 0;
  double derived_lhs = 0;
  double rhs = 0;  // (f)_{p,q}^p
};
ChebyshevBound chebyshev_bound(const Capacity& mu, const MeasurableFn& f,
                               const PrenormParams& params, double eps);

}  // namespace caplab
