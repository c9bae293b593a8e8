#pragma once

// Bloch-sphere conversions and Fubini-Study path geometry.

#include <vector>

#include "qgeo/propagator.hpp"

namespace qgeo {

using BlochVector = Eigen::Vector3d;

/// a = (2 Re(c0* c1), 2 Im(c0* c1), |c0|^2 - |c1|^2)
BlochVector state_to_bloch(const StateVector& psi);
/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>; the input must be a unit vector.
StateVector bloch_to_state(const BlochVector& a);

/// 2 arccos |<a|b>|, valid in any dimension.
double geodesic_length(const StateVector& a, const StateVector& b);

struct PathLengthOptions {
  double hbar = 1.0;
  /// Allowed disagreement between the dispersion integral and the discrete
  /// Fubini-Study sum. Negative disables the cross-check.
  double cross_check_tolerance = 1e-5;
};

/// (2/hbar) * integral of dE(t) dt (trapezoidal). Cross-checked against the
/// summed distance elements ds^2 = 4(<dpsi|dpsi> - |<psi|dpsi>|^2) between
/// consecutive samples; a mismatch throws NumericalCheck.
double fs_path_length(const Trajectory& traj, const PathLengthOptions& opts = {});

/// Sum of sqrt(4(<dpsi|dpsi> - |<psi|dpsi>|^2)) over consecutive states.
double fs_discrete_length(const std::vector<StateVector>& states);

/// Normalized geodesic between a and b parametrized by xi in [0, pi]:
///   [cos(xi/2)|a> + (<b|a>/|<b|a>|) sin(xi/2)|b>] / sqrt(1 + sin(xi)|<b|a>|).
/// Throws DegenerateOverlap when a and b are orthogonal (phase undefined).
StateVector geodesic_state(const StateVector& a, const StateVector& b, double xi);
/// Same curve with an explicit relative phase e^{i phase} in place of
/// <b|a>/|<b|a>|; usable for orthogonal endpoints.
StateVector geodesic_state(const StateVector& a, const StateVector& b, double xi, double phase);

/// t(xi) = tan(xi/2) / (1 + tan(xi/2)), mapping [0, pi] onto [0, 1].
double geodesic_time(double xi);

struct PathLengthReport {
  double s_dynamical;
  double s_geodesic;
  double geodesic_efficiency;
  std::vector<double> speed_efficiency;  // dE(t) / ||H(t)|| per sample
};

/// Speed efficiency uses the spectral norm of the traceless part of H(t).
PathLengthReport efficiencies(const Trajectory& traj, const Hamiltonian& h,
                              const PathLengthOptions& opts = {});

/// Bloch vector of cos(w0 t)|0> + e^{i v0 t} sin(w0 t)|1> and its analytic
/// time derivative.
BlochVector uzdin_bloch(double omega0, double nu0, double t);
BlochVector uzdin_bloch_derivative(double omega0, double nu0, double t);

/// max over the grid of |da/dt - 2 h(t) x a(t)|.
double larmor_residual(double omega0, double nu0, const std::vector<double>& grid);

}  // namespace qgeo
