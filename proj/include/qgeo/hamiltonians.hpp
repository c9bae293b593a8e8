#pragma once

// Catalog of search and transport Hamiltonians, stationary and time dependent.
// Units default to hbar = E = 1.

#include <functional>
#include <map>
#include <string>
#include <variant>

#include "qgeo/linalg.hpp"

namespace qgeo {

/// Source |s>, target |w>, energy scale E and overlap x = |<w|s>|.
///
/// Any phase of <w|s> is absorbed into |s> on construction, so the stored
/// overlap <w|s> is real and non-negative.
class SearchProblem {
 public:
  SearchProblem(const StateVector& source, const StateVector& target, double energy = 1.0);

  /// Uniform superposition over N basis states, target = basis state `marked`.
  static SearchProblem uniform(std::size_t n, std::size_t marked = 0, double energy = 1.0);

  const StateVector& source() const noexcept { return s_; }
  const StateVector& target() const noexcept { return w_; }
  double energy() const noexcept { return energy_; }
  double overlap() const noexcept { return x_; }
  std::size_t dim() const noexcept { return s_.dim(); }

 private:
  StateVector s_;
  StateVector w_;
  double energy_;
  double x_;
};

enum class StationaryKind { FG, Fenner, Opt, TwoLevel, RCFixedXi, Coupled };
enum class TimeDependentKind { Uzdin, RCSchedule, CoupledSchedule };

using Params = std::map<std::string, double>;

struct StationaryHamiltonian {
  HermitianMatrix matrix;
  StationaryKind kind;
  Params params;
};

/// A sampled generator t -> H(t) on [t0, t1]. The sampler must be re-entrant.
struct TimeDependentHamiltonian {
  std::function<HermitianMatrix(double)> sampler;
  double t0 = 0.0;
  double t1 = 1.0;
  TimeDependentKind kind;
  Params params;

  HermitianMatrix operator()(double t) const { return sampler(t); }
  std::size_t dim() const { return sampler(t0).dim(); }
};

using Hamiltonian = std::variant<StationaryHamiltonian, TimeDependentHamiltonian>;

HermitianMatrix sample(const Hamiltonian& h, double t);

/// E|w><w| + E|s><s|
StationaryHamiltonian build_fg(const SearchProblem& p);

/// 2iEx(|w><s| - |s><w|). Throws OrthogonalSourceTarget when x < 1e-12.
StationaryHamiltonian build_fenner(const SearchProblem& p);

/// Time-optimal generator carrying |a> to |b> with dispersion `dispersion`.
/// For orthogonal inputs the limiting form
/// i dE (e^{-i phase}|b><a| - e^{+i phase}|a><b|) is used; `phase` is ignored
/// otherwise. Throws CoincidentStates when |<a|b>|^2 >= 1 - 1e-12.
StationaryHamiltonian build_opt(const StateVector& a, const StateVector& b, double dispersion,
                                double phase = 0.0);

/// (1 - xi)(I + |s><s|) + xi (I + |w><w|)
StationaryHamiltonian build_rc(const SearchProblem& p, double xi);

/// -(1 - s)|0><0| - s|1><1| - gamma(|0><1| + |1><0|)
StationaryHamiltonian build_coupled(double schedule, double gamma);

/// [[lambda, delta], [delta, -lambda]]
StationaryHamiltonian build_two_level(double lambda, double delta);

/// Parallel-transport driver h(t).sigma for the state
/// cos(w0 t)|0> + e^{i v0 t} sin(w0 t)|1>; domain defaults to [0, pi/(2 w0)].
TimeDependentHamiltonian build_uzdin(double omega0, double nu0, double t_end = -1.0);

/// Field vector h(t) of the driver above (h0 = 0).
Eigen::Vector3d uzdin_field(double omega0, double nu0, double t);

/// H_RC(t) = build_rc(p, t / T) for t in [0, T].
TimeDependentHamiltonian rc_schedule(const SearchProblem& p, double total_time);

/// build_coupled(s, gamma) with s in [0, 1] playing the role of time.
TimeDependentHamiltonian coupled_schedule(double gamma);

/// Pauli matrices and n.sigma.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
HermitianMatrix pauli_dot(const Eigen::Vector3d& n);

}  // namespace qgeo
