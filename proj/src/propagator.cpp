#include "qgeo/propagator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qgeo {

namespace {

constexpr double kOverlapGuard = 1e-12;

void require_overlap_open(double x) {
  if (!(x > kOverlapGuard && x < 1.0 - kOverlapGuard))
    fail(ErrorKind::DegenerateOverlap, "overlap must lie strictly inside (0, 1), got " + std::to_string(x));
}

}  // namespace

StateVector evolve_stationary(const StationaryHamiltonian& h, const StateVector& psi0, double t, double hbar) {
  if (!psi0.is_normalized(tol::kNormPrecondition)) fail(ErrorKind::NotNormalized, "initial state");
  return apply_unitary(unitary_exp(h.matrix, t, hbar), psi0);
}

Trajectory sample_stationary(const StationaryHamiltonian& h, const StateVector& psi0, double t_final,
                             std::size_t steps, double hbar) {
  if (steps < 1) fail(ErrorKind::InvalidArgument, "need at least one step");
  if (!psi0.is_normalized(tol::kNormPrecondition)) fail(ErrorKind::NotNormalized, "initial state");
  const EigenDecomposition eig = hermitian_eigen(h.matrix);
  const CVector coeffs = eig.vectors.adjoint() * psi0.amplitudes();
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.dispersions.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = t_final * static_cast<double>(k) / static_cast<double>(steps);
    CVector phased = coeffs;
    for (Eigen::Index i = 0; i < phased.size(); ++i) phased(i) *= std::polar(1.0, -eig.values(i) * t / hbar);
    StateVector psi(CVector(eig.vectors * phased));
    traj.times.push_back(t);
    traj.dispersions.push_back(dispersion(h.matrix, psi));
    traj.states.push_back(std::move(psi));
  }
  return traj;
}

Trajectory evolve_timedep(const TimeDependentHamiltonian& h, const StateVector& psi0,
                          const PropagationConfig& cfg, double hbar) {
  if (!psi0.is_normalized(tol::kNormPrecondition)) fail(ErrorKind::NotNormalized, "initial state");
  const double span = h.t1 - h.t0;
  if (!(span > 0.0) || !std::isfinite(span)) fail(ErrorKind::InvalidArgument, "empty time domain");
  const double requested = cfg.dt > 0.0 ? cfg.dt : span / 1e5;
  const auto steps = static_cast<std::size_t>(std::ceil(span / requested - 1e-9));
  const double dt = span / static_cast<double>(steps);

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.dispersions.reserve(steps + 1);

  StateVector psi = psi0;
  for (std::size_t k = 0;; ++k) {
    const double t = k == steps ? h.t1 : h.t0 + dt * static_cast<double>(k);
    const double drift = std::abs(psi.norm() - 1.0);
    if (drift > cfg.norm_tolerance)
      fail(ErrorKind::StepTooLarge, "norm drift " + std::to_string(drift) + " at t = " + std::to_string(t));
    traj.times.push_back(t);
    traj.dispersions.push_back(dispersion(h(t), psi));
    traj.states.push_back(psi);
    if (k == steps) break;
    psi = apply_unitary(unitary_exp(h(t + 0.5 * dt), dt, hbar), psi);
  }
  return traj;
}

double prob_fg(double x, double energy, double t, double hbar) {
  if (!(x >= 0.0 && x <= 1.0)) fail(ErrorKind::InvalidArgument, "overlap must lie in [0, 1]");
  const double phase = energy * x * t / hbar;
  const double s = std::sin(phase);
  const double c = std::cos(phase);
  return s * s + x * x * c * c;
}

double prob_fenner(double x, double energy, double t, double hbar) {
  if (!(x > 0.0 && x <= 1.0)) fail(ErrorKind::InvalidArgument, "overlap must lie in (0, 1]");
  const double y = std::sqrt(1.0 - x * x);
  const double phase = 2.0 * x * y * energy * t / hbar;
  const double amp = x * std::cos(phase) + y * std::sin(phase);
  return amp * amp;
}

CharacteristicTimes characteristic_times(double x, double energy, double hbar, double dispersion) {
  require_overlap_open(x);
  if (!(energy > 0.0) || !(hbar > 0.0)) fail(ErrorKind::InvalidArgument, "energy and hbar must be positive");
  const double de = dispersion > 0.0 ? dispersion : energy;
  const double y = std::sqrt(1.0 - x * x);
  return {
      (hbar / energy) * std::numbers::pi / (2.0 * x),
      (hbar / energy) * std::acos(x) / (2.0 * x * y),
      hbar * std::acos(x) / de,
  };
}

double equal_dispersion_ratio(double x) {
  require_overlap_open(x);
  return 0.5 * std::numbers::pi * std::sqrt(1.0 - x * x) / std::acos(x);
}

}  // namespace qgeo
