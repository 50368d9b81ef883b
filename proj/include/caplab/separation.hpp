#pragma once

#include <cstdint>
#include <optional>

#include "caplab/prenorms.hpp"

namespace caplab {

// Constructive Hausdorff-separation certificate: a radius r_sep > 0 with
// S(f, r_sep) and S(g, r_sep) disjoint. Built from a threshold c and the
// two-coloring value m = min over partitions E + F of G = {|f-g| > c} of
// max{mu(E), mu(F)}; then r_sep = min{L0 c/2, m^{1/p}}. Any h in both
// spheres would force one of mu({|h-f| > c/2}), mu({|h-g| > c/2}) up to m,
// and the Sugeno sup bound pushes the corresponding prenorm to >= r_sep.
struct SeparationCertificate {
  MeasurableFn f;
  MeasurableFn g;
  PrenormParams params;
  double c = 0;      // threshold
  double m = 0;      // partition value of G
  double r_sep = 0;  // min{L0 c/2, m^{1/p}}
  mask_t gset = 0;   // G = {|f-g| > c}
  mask_t best_e = 0; // partition side attaining m
};

// Requires (f - g)_{p,q} > 0. Returns nullopt when every threshold admits a
// two-coloring of G into null halves (m = 0 throughout), which is exactly
// the weak-null-additivity failure mode.
std::optional<SeparationCertificate> separation_radius(const Capacity& mu, const MeasurableFn& f,
                                                       const MeasurableFn& g,
                                                       const PrenormParams& params);

// Independent re-check of a certificate's stored numbers (partition value,
// radius arithmetic, positivity).
bool verify_certificate(const Capacity& mu, const SeparationCertificate& cert);

struct ProbeReport {
  int probes = 0;
  int hits = 0;          // probes inside both spheres
  long first_hit = -1;   // smallest probe index that hit, -1 if none
  double radius = 0;     // radius actually probed
};

// Samples `probes` random functions h (seeded per index, scheduling
// independent) and counts double-memberships at the given radius. Used with
// radius = cert.r_sep as a falsification harness and with an enlarged radius
// as a negative control.
ProbeReport probe_at_radius(const Capacity& mu, const SeparationCertificate& cert, int probes,
                            std::uint64_t seed, double radius, Exec exec = Exec::parallel);

// Probes at cert.r_sep and throws SoundnessViolation on any hit.
ProbeReport probe_disjointness(const Capacity& mu, const SeparationCertificate& cert, int probes,
                               std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace caplab
