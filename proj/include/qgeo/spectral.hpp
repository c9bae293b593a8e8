#pragma once

// Instantaneous spectra along schedules, minimum-gap search, and the
// symmetry diagnostics (commutators, involutions, Bloch eigenvector dots).

#include <functional>
#include <vector>

#include "qgeo/bloch.hpp"

namespace qgeo {

/// Eigensystems of H along an ascending grid.
///
/// `levels[k]` is sorted ascending at every point. Columns of `vectors[k]`
/// follow branches: column j continues column j of the previous point by
/// maximum overlap, and `branch_level[k][j]` tells which sorted level that
/// branch occupies at point k.
struct SpectralTrack {
  std::vector<double> grid;
  std::vector<Eigen::VectorXd> levels;
  std::vector<CMatrix> vectors;
  std::vector<std::vector<int>> branch_level;
  std::function<HermitianMatrix(double)> sampler;  // kept for gap refinement

  std::size_t size() const noexcept { return grid.size(); }
  double gap(std::size_t k) const { return levels[k](1) - levels[k](0); }
};

SpectralTrack track(const TimeDependentHamiltonian& h, const std::vector<double>& grid);
/// `points` equally spaced samples covering h's whole domain.
SpectralTrack track(const TimeDependentHamiltonian& h, std::size_t points = 1001);

struct GapOptions {
  double crossing_tolerance = 1e-10;
  int golden_iterations = 60;
};

struct GapReport {
  double g_min;
  double arg_min;
  bool crossing;
};

/// Minimum of E1 - E0 over the grid, refined by golden-section search on the
/// two grid cells around the discrete minimum when the track has a sampler.
GapReport min_gap(const SpectralTrack& track, const GapOptions& opts = {});

/// Closed-form instantaneous eigensystem of the parallel-transport driver:
/// E = +-sqrt(<m'|m'>), |E+-> = (|m> +- i|m'>/sqrt(<m'|m'>)) / sqrt(2).
struct UzdinEigensystem {
  double e_plus;
  double e_minus;
  StateVector vec_plus;
  StateVector vec_minus;
};

/// Parallel-transported state |m(t)> and its time derivative.
StateVector uzdin_state(double omega0, double nu0, double t);
CVector uzdin_state_derivative(double omega0, double nu0, double t);

UzdinEigensystem uzdin_eigensystem(double omega0, double nu0, double t);

enum class Endpoint { A, B };  // A = |0>, B = |1>

struct OverlapPair {
  double plus;   // |<E+(t)|X>|^2
  double minus;  // |<E-(t)|X>|^2
};

/// Closed-form overlap probabilities with alpha = w0 t, beta = v0 t and
/// phi' = v0 sin^2(alpha).
OverlapPair overlap_probabilities(double omega0, double nu0, double t, Endpoint which);
/// Same quantities from a direct eigendecomposition of h(t).sigma.
OverlapPair overlap_probabilities_direct(double omega0, double nu0, double t, Endpoint which);

/// ||H1 H2 - H2 H1||_F
double commutator_norm(const HermitianMatrix& h1, const HermitianMatrix& h2);

struct InvolutionReport {
  bool is_involution;
  bool swaps;
  bool commutes;
  double involution_residual;  // ||S^2 - I||_F
  double swap_fidelity;        // |<B|S|A>|^2
  double commutator;           // ||[H, S]||_F
  CMatrix s;
};

/// Builds S = e^{i chi}|B><A| + e^{-i chi}|A><B| + P_perp with
/// chi = arg <B|H|A> (0 when that element vanishes) and checks S^2 = I,
/// S|A> ~ |B> and [H, S] = 0. Throws NotOrthogonal unless |<A|B>| < 1e-10.
InvolutionReport involution_check(const HermitianMatrix& h, const StateVector& a, const StateVector& b,
                                  double tolerance = 1e-12);

/// Dot products between Bloch vectors and the instantaneous eigenvector Bloch
/// vectors e+ (upper level) and e- (lower level) at one sample.
struct BlochSymmetryPoint {
  double t;
  double state_plus;   // a(t) . e+(t), a(t) the evolving state
  double state_minus;
  double source_plus;  // a . e+(t), a the initial state of the trajectory
  double source_minus;
  double target_plus;  // b . e+(t), b the final state of the trajectory
  double target_minus;
};

struct BlochSymmetryReport {
  std::vector<BlochSymmetryPoint> points;
  double endpoint_dot;  // a(0) . b(final); -1 for antipodal endpoints
};

BlochSymmetryReport bloch_symmetry_report(const Trajectory& traj, const Hamiltonian& h);

}  // namespace qgeo
