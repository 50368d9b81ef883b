#pragma once

#include <string>
#include <vector>

#include "caplab/prenorms.hpp"

namespace caplab {

struct FnSequence {
  FiniteSpace space;
  std::vector<MeasurableFn> terms;
  std::string rule;  // optional human-readable description of term k

  std::size_t size() const { return terms.size(); }
};

// Convergence over a finite prefix is inherently observational: the verdict
// is "converges (observed over prefix)" when the monitored quantity stays
// within tail_tol over the tail segment (the last quarter of the prefix, at
// least one term). Acceptance tests only feed sequences whose tails are
// analytically known.
std::size_t tail_start_index(std::size_t len);

struct TailStat {
  double eps = 0;
  double tail_sup = 0;
  bool within_tol = false;
};

struct ConvergenceReport {
  bool converges_observed = false;
  std::vector<TailStat> per_eps;        // one row per requested eps
  std::vector<double> worst_per_term;   // sup over eps of mu({|f_k - f| > eps})
  std::size_t tail_start = 0;
  double tail_tol = 0;
};

// Convergence in mu-measure of the sequence to f, observed over the prefix:
// for each eps reports the tail sup of mu({|f_k - f| > eps}).
ConvergenceReport converges_in_measure(const Capacity& mu, const FnSequence& seq,
                                       const MeasurableFn& f, const std::vector<double>& eps_list,
                                       double tail_tol);

struct ModeVerdicts {
  bool mu_measure = false;
  bool dunford_schwartz = false;
  std::vector<bool> prenorm;  // one per params entry
  bool all_agree = false;
};

struct EquivalenceCheckReport {
  ModeVerdicts verdicts;
  std::vector<double> ds_per_term;                    // ||f_k - f||
  std::vector<std::vector<double>> prenorm_per_term;  // [params][k]
  ConvergenceReport measure;
};

// Computes the three observational convergence verdicts -- Sugeno-Lorentz
// prenorm for each (p,q) in params_list, Dunford-Schwartz prenorm, and
// convergence in mu-measure -- and asserts they agree (they are equivalent
// modes); throws VerdictDisagreement otherwise.
EquivalenceCheckReport convergence_equivalence_check(const Capacity& mu, const FnSequence& seq,
                                                     const MeasurableFn& f,
                                                     const std::vector<PrenormParams>& params_list,
                                                     const std::vector<double>& eps_list,
                                                     double tail_tol);

struct LinearityReport {
  bool premise_f = false;  // f_k -> f observed
  bool premise_g = false;
  bool sum_converges = false;  // f_k + g_k -> f + g
  std::vector<bool> scalar_converges;  // per alpha: alpha f_k -> alpha f
  bool implications_hold = false;
};

// Sequential continuity of addition and scalar multiplication under the
// prenorm, checked on explicit sequences. Requires mu relaxed subadditive.
LinearityReport sequential_linearity_check(const Capacity& mu, const FnSequence& seq_f,
                                           const MeasurableFn& f, const FnSequence& seq_g,
                                           const MeasurableFn& g,
                                           const std::vector<double>& alphas,
                                           const PrenormParams& params, double tail_tol);

struct PseudometricReport {
  bool subadditive = false;
  double k = 1.0;             // relaxed constant used when not subadditive
  double factor = 1.0;        // 1 for exact triangle, 2K for relaxed
  double max_violation = 0;   // max over triples of d(f,g) - factor*(d(f,h)+d(h,g))
  bool identity_ok = false;   // d(f,f) = 0
  bool symmetry_ok = false;
  bool triangle_ok = false;
};

// d(f,g) = (f-g)_1. For subadditive mu asserts the exact triangle inequality
// on the supplied triples; for merely K-relaxed subadditive mu asserts the
// 2K-relaxed triangle inequality. Throws PreconditionError when no finite K
// exists.
PseudometricReport pseudometric_check(const Capacity& mu,
                                      const std::vector<std::array<MeasurableFn, 3>>& triples,
                                      double slack = 1e-12);

}  // namespace caplab
