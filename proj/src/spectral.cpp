#include "qgeo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qgeo {

namespace {

// Greedy maximum-overlap assignment: perm[j] = column of `next` continuing
// column j of `prev`.
std::vector<int> match_columns(const CMatrix& prev, const CMatrix& next) {
  const Eigen::Index n = prev.cols();
  const Eigen::MatrixXd overlap = (prev.adjoint() * next).cwiseAbs();
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used_prev(static_cast<std::size_t>(n), false);
  std::vector<bool> used_next(static_cast<std::size_t>(n), false);
  for (Eigen::Index round = 0; round < n; ++round) {
    double best = -1.0;
    Eigen::Index bi = 0, bj = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (used_prev[static_cast<std::size_t>(i)]) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (used_next[static_cast<std::size_t>(j)]) continue;
        if (overlap(i, j) > best) {
          best = overlap(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    used_prev[static_cast<std::size_t>(bi)] = true;
    used_next[static_cast<std::size_t>(bj)] = true;
    perm[static_cast<std::size_t>(bi)] = static_cast<int>(bj);
  }
  return perm;
}

double gap_at(const std::function<HermitianMatrix(double)>& sampler, double t) {
  const EigenDecomposition eig = hermitian_eigen(sampler(t));
  return eig.values(1) - eig.values(0);
}

// Golden-section minimization of f on [lo, hi]; returns (argmin, min).
std::pair<double, double> golden_section(const std::function<double(double)>& f, double lo, double hi,
                                         int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc < fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace

SpectralTrack track(const TimeDependentHamiltonian& h, const std::vector<double>& grid) {
  if (grid.empty()) fail(ErrorKind::InvalidArgument, "empty grid");
  const double slack = 1e-12 * std::max(1.0, std::abs(h.t1 - h.t0));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid[k] < h.t0 - slack || grid[k] > h.t1 + slack)
      fail(ErrorKind::InvalidArgument, "grid point " + std::to_string(grid[k]) + " outside domain");
    if (k > 0 && !(grid[k] > grid[k - 1])) fail(ErrorKind::InvalidArgument, "grid must be strictly ascending");
  }

  SpectralTrack out;
  out.grid = grid;
  out.sampler = h.sampler;
  out.levels.reserve(grid.size());
  out.vectors.reserve(grid.size());
  out.branch_level.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const EigenDecomposition eig = hermitian_eigen(h(grid[k]));
    const auto n = static_cast<int>(eig.size());
    std::vector<int> level(static_cast<std::size_t>(n));
    if (k == 0) {
      std::iota(level.begin(), level.end(), 0);
    } else {
      level = match_columns(out.vectors.back(), eig.vectors);
    }
    CMatrix cols(eig.vectors.rows(), eig.vectors.cols());
    for (int j = 0; j < n; ++j)
      cols.col(j) = apply_phase_convention(eig.vectors.col(level[static_cast<std::size_t>(j)]));
    out.levels.push_back(eig.values);
    out.vectors.push_back(std::move(cols));
    out.branch_level.push_back(std::move(level));
  }
  return out;
}

SpectralTrack track(const TimeDependentHamiltonian& h, std::size_t points) {
  if (points < 2) fail(ErrorKind::InvalidArgument, "need at least two grid points");
  std::vector<double> grid(points);
  for (std::size_t k = 0; k < points; ++k)
    grid[k] = h.t0 + (h.t1 - h.t0) * static_cast<double>(k) / static_cast<double>(points - 1);
  grid.back() = h.t1;
  return track(h, grid);
}

GapReport min_gap(const SpectralTrack& tr, const GapOptions& opts) {
  if (tr.size() == 0) fail(ErrorKind::InvalidArgument, "empty spectral track");
  if (tr.levels.front().size() < 2) fail(ErrorKind::InvalidArgument, "gap needs at least two levels");
  std::size_t best = 0;
  for (std::size_t k = 1; k < tr.size(); ++k)
    if (tr.gap(k) < tr.gap(best)) best = k;
  double g = tr.gap(best);
  double where = tr.grid[best];

  if (tr.sampler && tr.size() > 1) {
    const auto f = [&](double t) { return gap_at(tr.sampler, t); };
    const auto refine = [&](std::size_t lo, std::size_t hi) {
      const auto [t, v] = golden_section(f, tr.grid[lo], tr.grid[hi], opts.golden_iterations);
      if (v < g) {
        g = v;
        where = t;
      }
    };
    if (best > 0) refine(best - 1, best);
    if (best + 1 < tr.size()) refine(best, best + 1);
  }
  g = std::max(g, 0.0);
  return {g, where, g < opts.crossing_tolerance};
}

// ---------------------------------------------------------------------------
// Parallel-transport driver eigensystem

StateVector uzdin_state(double omega0, double nu0, double t) {
  const double alpha = omega0 * t;
  const double beta = nu0 * t;
  const double phi = nu0 / (4.0 * omega0) * (2.0 * omega0 * t - std::sin(2.0 * omega0 * t));
  const Complex g = std::polar(1.0, -phi);
  return StateVector{g * std::cos(alpha), g * std::polar(std::sin(alpha), beta)};
}

CVector uzdin_state_derivative(double omega0, double nu0, double t) {
  const double alpha = omega0 * t;
  const double beta = nu0 * t;
  const double phi = nu0 / (4.0 * omega0) * (2.0 * omega0 * t - std::sin(2.0 * omega0 * t));
  const double phi_dot = nu0 * std::sin(alpha) * std::sin(alpha);
  const Complex g = std::polar(1.0, -phi);
  const Complex e = std::polar(1.0, beta);
  CVector psi(2), psi_dot(2);
  psi << std::cos(alpha), e * std::sin(alpha);
  psi_dot << -omega0 * std::sin(alpha), e * Complex(omega0 * std::cos(alpha), nu0 * std::sin(alpha));
  return g * (psi_dot - kI * phi_dot * psi);
}

UzdinEigensystem uzdin_eigensystem(double omega0, double nu0, double t) {
  if (!(omega0 > 0.0)) fail(ErrorKind::InvalidArgument, "omega0 must be positive");
  const StateVector m = uzdin_state(omega0, nu0, t);
  const CVector md = uzdin_state_derivative(omega0, nu0, t);
  const double speed = md.norm();
  const CVector unit = md / speed;
  const double r = 1.0 / std::sqrt(2.0);
  return {speed, -speed, StateVector(CVector(r * (m.amplitudes() + kI * unit))),
          StateVector(CVector(r * (m.amplitudes() - kI * unit)))};
}

OverlapPair overlap_probabilities(double omega0, double nu0, double t, Endpoint which) {
  if (!(omega0 > 0.0)) fail(ErrorKind::InvalidArgument, "omega0 must be positive");
  const double a = omega0 * t;
  const double a_dot = omega0;
  const double b_dot = nu0;
  const double phi_dot = b_dot * std::sin(a) * std::sin(a);
  const double s2a = std::sin(2.0 * a);
  const double root = std::sqrt(a_dot * a_dot + 0.25 * b_dot * b_dot * s2a * s2a);
  const double sa = std::sin(a);
  const double ca = std::cos(a);
  if (which == Endpoint::A) {
    const Complex plus(ca + phi_dot * ca / root, a_dot * sa / root);
    const Complex minus(ca - phi_dot * ca / root, -a_dot * sa / root);
    return {0.5 * std::norm(plus), 0.5 * std::norm(minus)};
  }
  const double shift = (phi_dot * sa - b_dot * sa) / root;
  const Complex plus(sa + shift, -a_dot * ca / root);
  const Complex minus(sa - shift, a_dot * ca / root);
  return {0.5 * std::norm(plus), 0.5 * std::norm(minus)};
}

OverlapPair overlap_probabilities_direct(double omega0, double nu0, double t, Endpoint which) {
  const EigenDecomposition eig = hermitian_eigen(pauli_dot(uzdin_field(omega0, nu0, t)));
  const Eigen::Index row = which == Endpoint::A ? 0 : 1;
  return {std::norm(eig.vectors(row, 1)), std::norm(eig.vectors(row, 0))};
}

// ---------------------------------------------------------------------------
// Symmetry diagnostics

double commutator_norm(const HermitianMatrix& h1, const HermitianMatrix& h2) {
  if (h1.dim() != h2.dim()) fail(ErrorKind::DimensionMismatch, "commutator_norm");
  return frobenius(commutator(h1.matrix(), h2.matrix()));
}

InvolutionReport involution_check(const HermitianMatrix& h, const StateVector& a, const StateVector& b,
                                  double tolerance) {
  if (h.dim() != a.dim() || a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "involution_check");
  if (std::abs(inner(a, b)) >= 1e-10) fail(ErrorKind::NotOrthogonal, "involution needs <A|B> = 0");
  const Complex coupling = b.amplitudes().dot(h.matrix() * a.amplitudes());  // <B|H|A>
  const Complex e = std::abs(coupling) > tolerance ? coupling / std::abs(coupling) : Complex(1.0, 0.0);
  const auto n = static_cast<Eigen::Index>(h.dim());
  const CMatrix ba = outer(b, a);
  const CMatrix perp = CMatrix::Identity(n, n) - outer(a, a) - outer(b, b);
  InvolutionReport r;
  r.s = e * ba + std::conj(e) * ba.adjoint() + perp;
  r.involution_residual = frobenius(r.s * r.s - CMatrix::Identity(n, n));
  r.swap_fidelity = std::norm(b.amplitudes().dot(r.s * a.amplitudes()));
  r.commutator = frobenius(commutator(h.matrix(), r.s));
  r.is_involution = r.involution_residual < tolerance;
  r.swaps = r.swap_fidelity >= 1.0 - tolerance;
  r.commutes = r.commutator < tolerance;
  return r;
}

BlochSymmetryReport bloch_symmetry_report(const Trajectory& traj, const Hamiltonian& h) {
  if (traj.size() == 0) fail(ErrorKind::EmptyTrajectory, "bloch_symmetry_report");
  if (traj.front().dim() != 2) fail(ErrorKind::DimensionMismatch, "Bloch symmetry needs a qubit trajectory");
  const BlochVector a0 = state_to_bloch(traj.front());
  const BlochVector b = state_to_bloch(traj.back());
  BlochSymmetryReport out;
  out.endpoint_dot = a0.dot(b);
  out.points.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const EigenDecomposition eig = hermitian_eigen(sample(h, traj.times[k]));
    const BlochVector e_minus = state_to_bloch(eig.vector(0));
    const BlochVector e_plus = state_to_bloch(eig.vector(1));
    const BlochVector a = state_to_bloch(traj.states[k]);
    out.points.push_back({traj.times[k], a.dot(e_plus), a.dot(e_minus), a0.dot(e_plus), a0.dot(e_minus),
                          b.dot(e_plus), b.dot(e_minus)});
  }
  return out;
}

}  // namespace qgeo
