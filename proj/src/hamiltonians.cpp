#include "qgeo/hamiltonians.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qgeo {

namespace {

constexpr double kOrthogonalOverlap = 1e-12;

void require_normalized(const StateVector& v, const char* name) {
  if (!v.is_normalized(tol::kNormPrecondition))
    fail(ErrorKind::NotNormalized, std::string(name) + " must be normalized");
}

}  // namespace

SearchProblem::SearchProblem(const StateVector& source, const StateVector& target, double energy)
    : s_(source), w_(target), energy_(energy), x_(0.0) {
  require_normalized(source, "source state");
  require_normalized(target, "target state");
  if (source.dim() != target.dim()) fail(ErrorKind::DimensionMismatch, "source/target dimension");
  if (!(energy > 0.0)) fail(ErrorKind::InvalidArgument, "energy scale must be positive");
  const Complex ws = inner(w_, s_);
  x_ = std::abs(ws);
  if (x_ > 0.0) s_ = StateVector(CVector(s_.amplitudes() * (std::conj(ws) / x_)));
}

SearchProblem SearchProblem::uniform(std::size_t n, std::size_t marked, double energy) {
  return SearchProblem(StateVector::uniform(n), StateVector::basis(n, marked), energy);
}

HermitianMatrix sample(const Hamiltonian& h, double t) {
  return std::visit(
      [t](const auto& ham) -> HermitianMatrix {
        using T = std::decay_t<decltype(ham)>;
        if constexpr (std::is_same_v<T, StationaryHamiltonian>) {
          return ham.matrix;
        } else {
          return ham.sampler(t);
        }
      },
      h);
}

StationaryHamiltonian build_fg(const SearchProblem& p) {
  const HermitianMatrix m = (HermitianMatrix::projector(p.target()) + HermitianMatrix::projector(p.source()))
                                .scaled(p.energy());
  return {m, StationaryKind::FG, {{"E", p.energy()}, {"x", p.overlap()}}};
}

StationaryHamiltonian build_fenner(const SearchProblem& p) {
  if (p.overlap() < kOrthogonalOverlap)
    fail(ErrorKind::OrthogonalSourceTarget, "Fenner Hamiltonian needs <w|s> != 0");
  const double e = p.energy();
  const double x = p.overlap();
  const CMatrix ws = outer(p.target(), p.source());
  const CMatrix m = 2.0 * kI * e * x * (ws - ws.adjoint());
  return {HermitianMatrix(m), StationaryKind::Fenner, {{"E", e}, {"x", x}}};
}

StationaryHamiltonian build_opt(const StateVector& a, const StateVector& b, double dispersion,
                                double phase) {
  require_normalized(a, "initial state");
  require_normalized(b, "final state");
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "initial/final dimension");
  if (!(dispersion > 0.0)) fail(ErrorKind::InvalidArgument, "dispersion must be positive");
  const Complex ab = inner(a, b);
  const double c = std::abs(ab);
  if (c * c >= 1.0 - 1e-12) fail(ErrorKind::CoincidentStates, "|<A|B>| = 1, no transport needed");

  const CMatrix ba = outer(b, a);
  CMatrix m;
  if (c <= kOrthogonalOverlap) {
    const Complex e = std::polar(1.0, -phase);
    m = kI * dispersion * (e * ba - std::conj(e) * ba.adjoint());
  } else {
    const double scale = c / std::sqrt(1.0 - c * c);
    m = kI * dispersion * scale * (ba / ab - ba.adjoint() / std::conj(ab));
  }
  return {HermitianMatrix(m), StationaryKind::Opt, {{"dE", dispersion}, {"overlap", c}, {"phase", phase}}};
}

StationaryHamiltonian build_rc(const SearchProblem& p, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) fail(ErrorKind::InvalidArgument, "xi must lie in [0, 1]");
  const HermitianMatrix hs = HermitianMatrix::projector(p.source()).shifted(1.0);
  const HermitianMatrix hw = HermitianMatrix::projector(p.target()).shifted(1.0);
  return {hs.scaled(1.0 - xi) + hw.scaled(xi), StationaryKind::RCFixedXi, {{"xi", xi}, {"x", p.overlap()}}};
}

StationaryHamiltonian build_coupled(double schedule, double gamma) {
  if (!(schedule >= 0.0 && schedule <= 1.0)) fail(ErrorKind::InvalidArgument, "schedule must lie in [0, 1]");
  if (!(gamma >= 0.0)) fail(ErrorKind::InvalidArgument, "gamma must be non-negative");
  CMatrix m(2, 2);
  m << -(1.0 - schedule), -gamma, -gamma, -schedule;
  return {HermitianMatrix(m), StationaryKind::Coupled, {{"s", schedule}, {"gamma", gamma}}};
}

StationaryHamiltonian build_two_level(double lambda, double delta) {
  CMatrix m(2, 2);
  m << lambda, delta, delta, -lambda;
  return {HermitianMatrix(m), StationaryKind::TwoLevel, {{"lambda", lambda}, {"delta", delta}}};
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

HermitianMatrix pauli_dot(const Eigen::Vector3d& n) {
  CMatrix m(2, 2);
  m << n.z(), Complex(n.x(), -n.y()), Complex(n.x(), n.y()), -n.z();
  return HermitianMatrix(m);
}

Eigen::Vector3d uzdin_field(double omega0, double nu0, double t) {
  const double s2 = std::sin(2.0 * omega0 * t);
  const double c2 = std::cos(2.0 * omega0 * t);
  const double cn = std::cos(nu0 * t);
  const double sn = std::sin(nu0 * t);
  return {-0.5 * nu0 * c2 * s2 * cn - omega0 * sn,
          -0.5 * nu0 * c2 * s2 * sn + omega0 * cn,
          0.5 * nu0 * s2 * s2};
}

TimeDependentHamiltonian build_uzdin(double omega0, double nu0, double t_end) {
  if (!(omega0 > 0.0)) fail(ErrorKind::InvalidArgument, "omega0 must be positive");
  if (!(nu0 >= 0.0)) fail(ErrorKind::InvalidArgument, "nu0 must be non-negative");
  const double t1 = t_end > 0.0 ? t_end : std::numbers::pi / (2.0 * omega0);
  TimeDependentHamiltonian h;
  h.sampler = [omega0, nu0](double t) { return pauli_dot(uzdin_field(omega0, nu0, t)); };
  h.t0 = 0.0;
  h.t1 = t1;
  h.kind = TimeDependentKind::Uzdin;
  h.params = {{"omega0", omega0}, {"nu0", nu0}};
  return h;
}

TimeDependentHamiltonian rc_schedule(const SearchProblem& p, double total_time) {
  if (!(total_time > 0.0)) fail(ErrorKind::InvalidArgument, "schedule duration must be positive");
  TimeDependentHamiltonian h;
  h.sampler = [p, total_time](double t) {
    return build_rc(p, std::clamp(t / total_time, 0.0, 1.0)).matrix;
  };
  h.t0 = 0.0;
  h.t1 = total_time;
  h.kind = TimeDependentKind::RCSchedule;
  h.params = {{"T", total_time}, {"x", p.overlap()}};
  return h;
}

TimeDependentHamiltonian coupled_schedule(double gamma) {
  if (!(gamma >= 0.0)) fail(ErrorKind::InvalidArgument, "gamma must be non-negative");
  TimeDependentHamiltonian h;
  h.sampler = [gamma](double s) { return build_coupled(std::clamp(s, 0.0, 1.0), gamma).matrix; };
  h.t0 = 0.0;
  h.t1 = 1.0;
  h.kind = TimeDependentKind::CoupledSchedule;
  h.params = {{"gamma", gamma}};
  return h;
}

}  // namespace qgeo
