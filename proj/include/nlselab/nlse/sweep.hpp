#pragma once

#include <stdexcept>

namespace nlselab {

/// Frequency sweep through resonance: phase S(t2) = t2^2/2 in slow time, so
/// S'(0) = 0 puts the resonance at t2 = 0.  The fast phase seen by the field
/// is theta(t2) = S(t2)/eps^2.
struct SweepPhase {
  double epsilon;

  explicit SweepPhase(double eps) : epsilon(eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
      throw std::invalid_argument("SweepPhase: epsilon must lie in (0, 1)");
    }
  }

  double S(double t2) const { return 0.5 * t2 * t2; }
  double S_prime(double t2) const { return t2; }
  double theta(double t2) const { return 0.5 * t2 * t2 / (epsilon * epsilon); }
};

}  // namespace nlselab
