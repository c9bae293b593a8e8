#include "qgeo/bloch.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qgeo {

BlochVector state_to_bloch(const StateVector& psi) {
  if (psi.dim() != 2) fail(ErrorKind::DimensionMismatch, "Bloch vectors need a qubit state");
  const Complex c0 = psi[0];
  const Complex c1 = psi[1];
  const Complex cross = std::conj(c0) * c1;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(c0) - std::norm(c1)};
}

StateVector bloch_to_state(const BlochVector& a) {
  if (std::abs(a.norm() - 1.0) > 1e-10) fail(ErrorKind::InvalidArgument, "Bloch vector must be unit");
  const double theta = std::acos(clamp_unit(a.z()));
  const double phi = std::atan2(a.y(), a.x());
  return StateVector{Complex(std::cos(0.5 * theta), 0.0), std::polar(std::sin(0.5 * theta), phi)};
}

double geodesic_length(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "geodesic_length");
  const double overlap = std::abs(inner(a, b)) / (a.norm() * b.norm());
  return 2.0 * std::acos(clamp_unit(overlap));
}

double fs_discrete_length(const std::vector<StateVector>& states) {
  double total = 0.0;
  for (std::size_t k = 1; k < states.size(); ++k) {
    const CVector& psi = states[k - 1].amplitudes();
    const CVector d = states[k].amplitudes() - psi;
    const double ds2 = 4.0 * (d.squaredNorm() - std::norm(psi.dot(d)));
    total += std::sqrt(std::max(0.0, ds2));
  }
  return total;
}

double fs_path_length(const Trajectory& traj, const PathLengthOptions& opts) {
  if (traj.size() < 2 || traj.dispersions.size() != traj.size())
    fail(ErrorKind::EmptyTrajectory, "path length needs at least two samples with dispersions");
  double integral = 0.0;
  for (std::size_t k = 1; k < traj.size(); ++k)
    integral += 0.5 * (traj.dispersions[k] + traj.dispersions[k - 1]) * (traj.times[k] - traj.times[k - 1]);
  const double length = 2.0 * integral / opts.hbar;
  if (opts.cross_check_tolerance >= 0.0) {
    const double discrete = fs_discrete_length(traj.states);
    if (std::abs(discrete - length) > opts.cross_check_tolerance)
      fail(ErrorKind::NumericalCheck, "dispersion integral " + std::to_string(length) +
                                          " disagrees with Fubini-Study sum " + std::to_string(discrete));
  }
  return length;
}

StateVector geodesic_state(const StateVector& a, const StateVector& b, double xi, double phase) {
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "geodesic_state");
  if (!(xi >= 0.0 && xi <= std::numbers::pi + 1e-15))
    fail(ErrorKind::InvalidArgument, "xi must lie in [0, pi]");
  // With phase = arg<b|a> the norm reduces to 1 + sin(xi)|<b|a>|.
  const double aligned = (std::polar(1.0, phase) * inner(a, b)).real();
  const CVector v = std::cos(0.5 * xi) * a.amplitudes() + std::polar(std::sin(0.5 * xi), phase) * b.amplitudes();
  return StateVector(CVector(v / std::sqrt(1.0 + std::sin(xi) * aligned)));
}

StateVector geodesic_state(const StateVector& a, const StateVector& b, double xi) {
  const Complex ba = inner(b, a);
  if (std::abs(ba) <= 1e-12) fail(ErrorKind::DegenerateOverlap, "orthogonal endpoints need an explicit phase");
  return geodesic_state(a, b, xi, std::arg(ba));
}

double geodesic_time(double xi) {
  if (xi >= std::numbers::pi) return 1.0;
  const double t = std::tan(0.5 * xi);
  return t / (1.0 + t);
}

PathLengthReport efficiencies(const Trajectory& traj, const Hamiltonian& h, const PathLengthOptions& opts) {
  PathLengthReport report;
  report.s_dynamical = fs_path_length(traj, opts);
  report.s_geodesic = geodesic_length(traj.front(), traj.back());
  report.geodesic_efficiency = report.s_geodesic / report.s_dynamical;
  report.speed_efficiency.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const HermitianMatrix m = sample(h, traj.times[k]);
    const HermitianMatrix traceless = m.shifted(-m.trace() / static_cast<double>(m.dim()));
    const double norm = spectral_norm(traceless);
    report.speed_efficiency.push_back(norm > 0.0 ? traj.dispersions[k] / norm : 0.0);
  }
  return report;
}

BlochVector uzdin_bloch(double omega0, double nu0, double t) {
  const double s2 = std::sin(2.0 * omega0 * t);
  return {s2 * std::cos(nu0 * t), s2 * std::sin(nu0 * t), std::cos(2.0 * omega0 * t)};
}

BlochVector uzdin_bloch_derivative(double omega0, double nu0, double t) {
  const double s2 = std::sin(2.0 * omega0 * t);
  const double c2 = std::cos(2.0 * omega0 * t);
  const double cn = std::cos(nu0 * t);
  const double sn = std::sin(nu0 * t);
  return {2.0 * omega0 * c2 * cn - nu0 * s2 * sn,
          2.0 * omega0 * c2 * sn + nu0 * s2 * cn,
          -2.0 * omega0 * s2};
}

double larmor_residual(double omega0, double nu0, const std::vector<double>& grid) {
  if (grid.size() < 3) fail(ErrorKind::InvalidArgument, "grid needs at least three points");
  double worst = 0.0;
  for (double t : grid) {
    const BlochVector a = uzdin_bloch(omega0, nu0, t);
    const BlochVector rhs = 2.0 * uzdin_field(omega0, nu0, t).cross(a);
    worst = std::max(worst, (uzdin_bloch_derivative(omega0, nu0, t) - rhs).norm());
  }
  return worst;
}

}  // namespace qgeo
