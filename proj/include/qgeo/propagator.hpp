#pragma once

#include <vector>

#include "qgeo/hamiltonians.hpp"

namespace qgeo {

/// Sampled evolution: states and energy dispersions on an ascending time grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::vector<double> dispersions;

  std::size_t size() const noexcept { return times.size(); }
  const StateVector& front() const { return states.front(); }
  const StateVector& back() const { return states.back(); }
};

struct PropagationConfig {
  double dt = 0.0;  // <= 0 selects (t1 - t0) / 1e5
  double norm_tolerance = 1e-9;
};

StateVector evolve_stationary(const StationaryHamiltonian& h, const StateVector& psi0, double t,
                              double hbar = 1.0);

/// Exact stationary evolution sampled on `steps + 1` equally spaced times in
/// [0, t_final].
Trajectory sample_stationary(const StationaryHamiltonian& h, const StateVector& psi0, double t_final,
                             std::size_t steps, double hbar = 1.0);

/// Exponential-midpoint stepping over h's domain:
///   psi_{k+1} = exp(-i H(t_k + dt/2) dt) psi_k.
/// The domain is split into ceil((t1 - t0) / dt) equal steps, so the
/// effective step is never larger than cfg.dt and the last sample sits
/// exactly on t1. Throws StepTooLarge if the norm drifts past
/// cfg.norm_tolerance.
Trajectory evolve_timedep(const TimeDependentHamiltonian& h, const StateVector& psi0,
                          const PropagationConfig& cfg = {}, double hbar = 1.0);

/// sin^2(Ext/hbar) + x^2 cos^2(Ext/hbar)
double prob_fg(double x, double energy, double t, double hbar = 1.0);

/// |x cos(2x sqrt(1-x^2) Et/hbar) + sqrt(1-x^2) sin(2x sqrt(1-x^2) Et/hbar)|^2
double prob_fenner(double x, double energy, double t, double hbar = 1.0);

struct CharacteristicTimes {
  double t_fg;
  double t_fenner;
  double t_opt_for_overlap;
};

/// First-peak times for both search Hamiltonians and the minimal transport
/// time hbar arccos(x) / dE. `dispersion` defaults to the energy scale.
/// Throws DegenerateOverlap unless 1e-12 < x < 1 - 1e-12.
CharacteristicTimes characteristic_times(double x, double energy, double hbar = 1.0,
                                         double dispersion = -1.0);

/// t_FG over t_Fenner with Fenner's energy halved so both dispersions match:
/// (pi/2) sqrt(1 - x^2) / arccos(x).
double equal_dispersion_ratio(double x);

}  // namespace qgeo
