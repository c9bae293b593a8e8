#include "qgeo/su2sim.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qgeo {

namespace {

constexpr double kUnitAxisTolerance = 1e-12;
constexpr double kDegenerateAxis = 1e-12;
constexpr int kMaxSearchSteps = 1000000;

void require_unit(const BlochVector& n, const char* name) {
  if (!n.allFinite() || std::abs(n.norm() - 1.0) > kUnitAxisTolerance)
    fail(ErrorKind::NonUnitAxis, std::string(name) + " must be a unit vector");
}

void require_search_size(int n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "N must be at least 2, got " + std::to_string(n));
}

StateVector source_state(int n) {
  const double x = 1.0 / std::sqrt(static_cast<double>(n));
  return StateVector{Complex(x, 0.0), Complex(std::sqrt(1.0 - x * x), 0.0)};
}

}  // namespace

PauliProduct pauli_product(const BlochVector& n1, const BlochVector& n2) {
  require_unit(n1, "n1");
  require_unit(n2, "n2");
  return {n1.dot(n2), n1.cross(n2)};
}

CMatrix rotation_matrix(const AxisAngle& r) {
  const CMatrix id = CMatrix::Identity(2, 2);
  return std::cos(0.5 * r.angle) * id - kI * std::sin(0.5 * r.angle) * pauli_dot(r.axis).matrix();
}

AxisAngle compose_rotations(const AxisAngle& r1, const AxisAngle& r2) {
  require_unit(r1.axis, "r1.axis");
  require_unit(r2.axis, "r2.axis");
  const double c1 = std::cos(0.5 * r1.angle), s1 = std::sin(0.5 * r1.angle);
  const double c2 = std::cos(0.5 * r2.angle), s2 = std::sin(0.5 * r2.angle);
  const double c = c1 * c2 - s1 * s2 * r1.axis.dot(r2.axis);
  const BlochVector v = s1 * c2 * r1.axis + c1 * s2 * r2.axis + s1 * s2 * r1.axis.cross(r2.axis);
  const double sv = v.norm();
  if (sv < kDegenerateAxis) return {BlochVector::UnitZ(), c >= 0.0 ? 0.0 : 2.0 * std::numbers::pi};
  return {v / sv, 2.0 * std::atan2(sv, c)};
}

BlochVector search_source_axis(int n) {
  require_search_size(n);
  const double x = 1.0 / std::sqrt(static_cast<double>(n));
  return {2.0 * x * std::sqrt(1.0 - x * x), 0.0, 2.0 * x * x - 1.0};
}

BlochVector search_target_axis() { return BlochVector::UnitZ(); }

BlochVector simulation_axis_raw(int n, double dt) {
  const BlochVector s = search_source_axis(n);
  const BlochVector w = search_target_axis();
  return 0.5 * std::cos(0.5 * dt) * (s + w) + 0.5 * std::sin(0.5 * dt) * s.cross(w);
}

SimStep simulation_step(int n, double dt) {
  require_search_size(n);
  if (!std::isfinite(dt)) fail(ErrorKind::InvalidArgument, "dt must be finite");
  const AxisAngle r = compose_rotations({search_source_axis(n), dt}, {search_target_axis(), dt});
  const StateVector s = source_state(n);
  const StateVector w = StateVector::basis(2, 0);
  const CMatrix u = unitary_exp(HermitianMatrix::projector(s), dt) * unitary_exp(HermitianMatrix::projector(w), dt);
  return {dt, r.angle, r.axis, u};
}

double grover_equivalence(int n) {
  require_search_size(n);
  const StateVector s = source_state(n);
  const StateVector w = StateVector::basis(2, 0);
  const CMatrix id = CMatrix::Identity(2, 2);
  const CMatrix grover = (id - 2.0 * outer(s, s)) * (id - 2.0 * outer(w, w));
  return phase_aligned_distance(simulation_step(n, std::numbers::pi).unitary, grover);
}

SearchIteration iterate_search(int n, double dt) {
  require_search_size(n);
  if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::InvalidArgument, "dt must be positive");
  const CMatrix u = simulation_step(n, dt).unitary;
  CVector psi = source_state(n).amplitudes();
  double current = std::norm(psi(0));
  const double floor = current + 1e-9;
  for (int k = 0; k < kMaxSearchSteps; ++k) {
    psi = u * psi;
    const double next = std::norm(psi(0));
    if (!(next > current)) {
      if (current <= floor) fail(ErrorKind::NoProgress, "search probability never rises above 1/N");
      return {k, current};
    }
    current = next;
  }
  fail(ErrorKind::NoProgress, "no probability peak within " + std::to_string(kMaxSearchSteps) + " steps");
}

}  // namespace qgeo
