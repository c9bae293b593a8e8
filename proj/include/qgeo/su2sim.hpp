#pragma once

// SU(2) rotation algebra for the discrete simulation of the search
// Hamiltonian, worked in the two-dimensional {|w>, |r>} basis where
// |w> = |0> and s = (2x sqrt(1 - x^2), 0, 2x^2 - 1), x = 1/sqrt(N).

#include "qgeo/bloch.hpp"

namespace qgeo {

/// Rotation exp(-i angle axis.sigma / 2).
struct AxisAngle {
  BlochVector axis;
  double angle;
};

struct PauliProduct {
  double scalar;       // n1 . n2
  BlochVector vector;  // n1 x n2
};

/// (n1.sigma)(n2.sigma) = (n1.n2) I + i (n1 x n2).sigma. Both inputs must be
/// unit vectors (NonUnitAxis otherwise).
PauliProduct pauli_product(const BlochVector& n1, const BlochVector& n2);

/// 2x2 unitary cos(angle/2) I - i sin(angle/2) axis.sigma.
CMatrix rotation_matrix(const AxisAngle& r);

/// Single rotation equal to applying r2 first, then r1 (matrix product R1 R2).
/// When the result is the identity up to sign the axis is undefined; the
/// result then carries axis z and angle 0 (or 2 pi for -I).
AxisAngle compose_rotations(const AxisAngle& r1, const AxisAngle& r2);

struct SimStep {
  double dt;
  double angle;
  BlochVector axis;
  CMatrix unitary;  // exp(-i|s><s| dt) exp(-i|w><w| dt), global phase kept
};

/// Unit vectors s and w for an N-item search.
BlochVector search_source_axis(int n);
BlochVector search_target_axis();

/// One discrete simulation step; axis and angle come from the composition
/// rule, the unitary from exact exponentials.
SimStep simulation_step(int n, double dt);

/// Unnormalized axis cos(dt/2)(s + w)/2 + sin(dt/2)(s x w)/2.
BlochVector simulation_axis_raw(int n, double dt);

/// Phase-minimized Frobenius distance between U(pi) and the Grover iterate
/// (I - 2|s><s|)(I - 2|w><w|).
double grover_equivalence(int n);

struct SearchIteration {
  int steps_to_peak;
  double peak_probability;
};

/// Applies the step unitary to |s> until |<w|psi_k>|^2 stops increasing.
/// NoProgress when the peak does not exceed 1/N + 1e-9, or after 1e6 steps.
SearchIteration iterate_search(int n, double dt);

}  // namespace qgeo
