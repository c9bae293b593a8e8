#pragma once

// Energy-constraint verifier for stationary transport between orthogonal
// qubit states: normalization, orthogonality, equal mean energy and equal
// variance can only hold together when both states sit on the equator of the
// energy eigenbasis (epsilon = 0).

#include <array>
#include <utility>
#include <vector>

#include "qgeo/linalg.hpp"

namespace qgeo {

/// Amplitudes of |A> and |B> in the energy eigenbasis {|E1>, |E2>}.
struct AmplitudeSet {
  Complex alpha1, alpha2, beta1, beta2;
};

struct ConstraintReport {
  double normalization_residual;  // max of | |a1|^2 + |a2|^2 - 1 |, | |b1|^2 + |b2|^2 - 1 |
  double orthogonality_residual;  // |a1* b1 + a2* b2|
  double mean_energy_residual;    // |(|a2|^2 - |a1|^2) - (|b2|^2 - |b1|^2)|
  double variance_residual;       // |(|a2|^2 - |a1|^2)^2 - (|b2|^2 - |b1|^2)^2|
  bool feasible;
};

inline constexpr double kConstraintTolerance = 1e-10;

/// Residuals of every constraint. The energy scale cancels out of each
/// residual; it is only validated. Throws NumericalCheck if the variance
/// residual exceeds what the mean-energy residual allows.
ConstraintReport check_system(const AmplitudeSet& amps, double energy = 1.0);

/// Phases are (phi_a1, phi_a2, phi_b1, phi_b2).
using PhaseSet = std::array<double, 4>;

/// |A> = sqrt((1-e)/2) e^{i phi_a1}|E1> + sqrt((1+e)/2) e^{i phi_a2}|E2>, same
/// for |B>; basis |E1> = (1, 0), |E2> = (0, 1). Requires |e| < 1.
std::pair<StateVector, StateVector> build_pair(double epsilon, const PhaseSet& phases);
AmplitudeSet pair_amplitudes(double epsilon, const PhaseSet& phases);

/// |((1 + e) / (1 - e))^2 - 1|
double epsilon_residual(double epsilon);

struct PhaseMinimum {
  double overlap;  // min |<A|B>| over phases
  double phase_b1;
  double phase_b2;
};

struct PhaseSearchOptions {
  int coarse = 360;       // coarse grid points per phase
  int refine_steps = 30;  // Nelder-Mead iterations after the coarse pass
};

/// Minimizes |<A|B>| over the relative phases at fixed epsilon. Only phase
/// differences matter, so A's phases are held at zero.
PhaseMinimum minimize_overlap(double epsilon, const PhaseSearchOptions& opts = {});

struct EpsilonSample {
  double epsilon;
  double min_overlap;
  bool feasible;
};

struct FeasibilityReport {
  std::vector<EpsilonSample> samples;
  std::vector<double> feasible_epsilons;
  bool unique_at_zero;
  double amplitude_half_residual;  // max_i | |<E_i|A>|^2 - 1/2 | at epsilon = 0
  double threshold;
};

inline constexpr double kFeasibilityThreshold = 1e-8;

/// Scans `grid_size` equally spaced epsilons over [-range, range] (grid_size
/// >= 101) and reports where orthogonality can be reached.
FeasibilityReport verify_unique_feasibility(int grid_size, double range = 0.9,
                                            const PhaseSearchOptions& opts = {});

}  // namespace qgeo
