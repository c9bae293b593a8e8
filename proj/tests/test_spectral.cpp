#include "qgeo/spectral.hpp"

#include "support.hpp"

using namespace qgeo;
using namespace testing;

namespace {

TimeDependentHamiltonian shifted(const TimeDependentHamiltonian& h, double c) {
  TimeDependentHamiltonian out = h;
  out.sampler = [inner = h.sampler, c](double t) { return inner(t).shifted(c); };
  return out;
}

SearchProblem overlapping() { return SearchProblem(StateVector::basis(2, 0), StateVector::normalized(CVector::Ones(2))); }
SearchProblem orthogonal() { return SearchProblem(StateVector::basis(2, 0), StateVector::basis(2, 1)); }

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("orthogonal interpolation: linear levels and a crossing at one half") {
    const SpectralTrack tr = track(rc_schedule(orthogonal(), 1.0), std::size_t{101});
    for (std::size_t k = 0; k < tr.size(); ++k) {
      const double xi = tr.grid[k];
      CHECK(tr.gap(k) == doctest::Approx(std::abs(1.0 - 2.0 * xi)).epsilon(1e-12));
    }
    const GapReport g = min_gap(tr);
    CHECK(g.g_min < 1e-12);
    CHECK(g.arg_min == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(g.crossing);

    // Branches keep their eigenvectors through the crossing.
    const CMatrix& first = tr.vectors.front();
    const CMatrix& last = tr.vectors.back();
    CHECK(std::abs(first.col(0).dot(last.col(0))) == doctest::Approx(1.0));
    CHECK(tr.branch_level.back()[0] == 1);
  }

  TEST_CASE("overlapping interpolation: gap never closes") {
    const SpectralTrack tr = track(rc_schedule(overlapping(), 1.0), std::size_t{101});
    for (std::size_t k = 0; k < tr.size(); ++k) {
      const double xi = tr.grid[k];
      CHECK(std::abs(tr.gap(k) - std::sqrt((1 - xi) * (1 - xi) + xi * xi)) < 1e-12);
    }
    const GapReport g = min_gap(tr);
    CHECK(std::abs(g.g_min - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(g.arg_min - 0.5) < 1e-6);
    CHECK_FALSE(g.crossing);

    // A coarse, asymmetric grid still lands on the refined minimum.
    const SpectralTrack coarse = track(rc_schedule(overlapping(), 1.0), std::vector<double>{0.0, 0.13, 0.41, 0.77, 1.0});
    const GapReport gc = min_gap(coarse);
    CHECK(std::abs(gc.g_min - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(gc.arg_min - 0.5) < 1e-6);
  }

  TEST_CASE("coupled interpolation gap equals twice the coupling") {
    for (double gamma : {0.0, 0.05, 0.1, 0.25}) {
      const GapReport g = min_gap(track(coupled_schedule(gamma)));
      CHECK(std::abs(g.g_min - 2.0 * gamma) < 1e-10);
      CHECK(std::abs(g.arg_min - 0.5) < 1e-6);
      CHECK(g.crossing == (gamma == 0.0));
    }
  }

  TEST_CASE("gap reports are shift invariant") {
    for (const auto& h : {rc_schedule(overlapping(), 1.0), coupled_schedule(0.1), build_uzdin(1.0, 1.0)}) {
      const GapReport a = min_gap(track(h, std::size_t{201}));
      const GapReport b = min_gap(track(shifted(h, 3.25), std::size_t{201}));
      CHECK(std::abs(a.g_min - b.g_min) < 1e-12);
      CHECK(std::abs(a.arg_min - b.arg_min) < 1e-6);  // argmin of a smooth minimum is only ~sqrt(eps) sharp
      CHECK(a.crossing == b.crossing);
    }
  }

  TEST_CASE("level repulsion in the two-level model") {
    for (double delta : {0.0, 0.01, 0.3}) {
      TimeDependentHamiltonian h;
      h.t0 = -1.0;
      h.t1 = 1.0;
      h.kind = TimeDependentKind::CoupledSchedule;
      h.sampler = [delta](double lambda) { return build_two_level(lambda, delta).matrix; };
      const GapReport g = min_gap(track(h, std::size_t{401}));
      CHECK(std::abs(g.g_min - 2.0 * delta) < 1e-12);
      CHECK(std::abs(g.arg_min) < 1e-6);
    }
  }

  TEST_CASE("track guards") {
    const TimeDependentHamiltonian h = coupled_schedule(0.1);
    CHECK_THROWS_KIND(track(h, std::vector<double>{}), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(track(h, std::vector<double>{0.0, 2.0}), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(track(h, std::vector<double>{0.5, 0.2}), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(track(h, std::size_t{1}), ErrorKind::InvalidArgument);
  }

  TEST_CASE("driver eigensystem closed form") {
    for (auto [w0, v0] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}, std::pair{1.0, 0.0}}) {
      const TimeDependentHamiltonian h = build_uzdin(w0, v0);
      for (int k = 0; k <= 30; ++k) {
        const double t = h.t1 * k / 30.0;
        const UzdinEigensystem e = uzdin_eigensystem(w0, v0, t);
        const Eigen::VectorXd ref = oracle_eigenvalues(h(t).matrix());
        CHECK(std::abs(e.e_plus - ref(1)) < 1e-10);
        CHECK(std::abs(e.e_minus - ref(0)) < 1e-10);
        const CMatrix m = h(t).matrix();
        CHECK((m * e.vec_plus.amplitudes() - e.e_plus * e.vec_plus.amplitudes()).norm() < 1e-10);
        CHECK((m * e.vec_minus.amplitudes() - e.e_minus * e.vec_minus.amplitudes()).norm() < 1e-10);
        if (v0 == 0.0) CHECK(e.e_plus == doctest::Approx(w0));
      }
    }
    CHECK(uzdin_eigensystem(1.0, 1.0, pi() / 4.0).e_plus == doctest::Approx(std::sqrt(1.25)).epsilon(1e-12));
    CHECK(uzdin_eigensystem(3.0, 1.0, 0.0).e_plus == doctest::Approx(3.0));

    // The driven state solves the Schrodinger equation with this generator.
    const TimeDependentHamiltonian h = build_uzdin(1.0, 1.0);
    for (double t : {0.2, 0.9, 1.4}) {
      const CVector lhs = Complex(0.0, 1.0) * uzdin_state_derivative(1.0, 1.0, t);
      const CVector rhs = h(t).matrix() * uzdin_state(1.0, 1.0, t).amplitudes();
      CHECK((lhs - rhs).norm() < 1e-12);
    }
  }

  TEST_CASE("overlap probabilities") {
    for (double w0 : {0.5, 1.0, 2.0})
      for (double v0 : {0.0, 1.0, 3.0}) {
        const OverlapPair a = overlap_probabilities(w0, v0, 0.0, Endpoint::A);
        CHECK(a.plus == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(a.minus == doctest::Approx(0.5).epsilon(1e-15));
      }
    for (int k = 0; k <= 20; ++k) {
      const double t = 0.1 * k;
      for (Endpoint e : {Endpoint::A, Endpoint::B}) {
        const OverlapPair p = overlap_probabilities(1.3, 0.0, t, e);
        CHECK(std::abs(p.plus - 0.5) < 1e-12);
        CHECK(std::abs(p.minus - 0.5) < 1e-12);
      }
    }
    const OverlapPair q = overlap_probabilities(1.0, 1.0, pi() / 4.0, Endpoint::A);
    CHECK(q.plus == doctest::Approx(0.7236068).epsilon(1e-7));
    CHECK(q.minus == doctest::Approx(0.2763932).epsilon(1e-7));
  }

  TEST_CASE("overlap closed forms agree with the eigenvector oracle on random inputs") {
    auto g = rng(41);
    std::uniform_real_distribution<double> w(0.1, 3.0), v(0.0, 4.0), t(0.0, 5.0);
    for (int k = 0; k < 1000; ++k) {
      const double w0 = w(g), v0 = v(g), tt = t(g);
      const CMatrix m = pauli_dot(uzdin_field(w0, v0, tt)).matrix();
      const Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
      for (Endpoint e : {Endpoint::A, Endpoint::B}) {
        const OverlapPair p = overlap_probabilities(w0, v0, tt, e);
        const Eigen::Index row = e == Endpoint::A ? 0 : 1;
        CHECK(std::abs(p.plus + p.minus - 1.0) < 1e-12);
        CHECK(std::abs(p.plus - std::norm(es.eigenvectors()(row, 1))) < 1e-9);
        CHECK(std::abs(p.minus - std::norm(es.eigenvectors()(row, 0))) < 1e-9);
      }
    }
  }

  TEST_CASE("commutators") {
    const auto proj = [](const StateVector& s) { return HermitianMatrix::projector(s); };
    const StateVector s0 = StateVector::basis(2, 0), s1 = StateVector::basis(2, 1);
    CHECK(commutator_norm(proj(s0), proj(s1)) < 1e-12);
    const StateVector half{Complex(0.5, 0.0), Complex(std::sqrt(0.75), 0.0)};
    CHECK(commutator_norm(proj(half), proj(s0)) > 0.1);
    CHECK_THROWS_KIND(commutator_norm(proj(s0), HermitianMatrix::identity(3)), ErrorKind::DimensionMismatch);
  }

  TEST_CASE("involutions") {
    const StateVector a = StateVector::basis(2, 0), b = StateVector::basis(2, 1);
    const InvolutionReport r = involution_check(build_opt(a, b, 1.0).matrix, a, b);
    CHECK(r.is_involution);
    CHECK(r.swaps);
    CHECK(r.commutes);
    CHECK(r.commutator < 1e-12);

    const InvolutionReport z = involution_check(HermitianMatrix(pauli_z()), a, b);
    CHECK((z.s - pauli_x()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(z.is_involution);
    CHECK(z.swaps);
    CHECK_FALSE(z.commutes);
    CHECK(z.commutator == doctest::Approx(2.0 * std::sqrt(2.0)));

    CHECK_THROWS_KIND(involution_check(HermitianMatrix(pauli_z()), a, StateVector::uniform(2)), ErrorKind::NotOrthogonal);

    // In higher dimension S acts as the identity off span{A, B}.
    const StateVector a3 = StateVector::basis(3, 0), b3 = StateVector::basis(3, 2);
    const InvolutionReport r3 = involution_check(build_opt(a3, b3, 2.0).matrix, a3, b3);
    CHECK(r3.is_involution);
    CHECK(r3.swaps);
    CHECK(r3.commutes);
    CHECK(std::abs(r3.s(1, 1) - Complex(1.0, 0.0)) < 1e-15);
  }

  TEST_CASE("bloch dots vanish for stationary transport") {
    const StateVector a = StateVector::basis(2, 0), b = StateVector::basis(2, 1);
    const StationaryHamiltonian h = build_opt(a, b, 1.0);
    const BlochSymmetryReport r = bloch_symmetry_report(sample_stationary(h, a, pi() / 2.0, 200), Hamiltonian{h});
    for (const auto& p : r.points) {
      CHECK(std::abs(p.state_plus) < 1e-10);
      CHECK(std::abs(p.state_minus) < 1e-10);
      CHECK(std::abs(p.source_plus) < 1e-10);
      CHECK(std::abs(p.target_minus) < 1e-10);
    }
    CHECK(r.endpoint_dot == doctest::Approx(-1.0).epsilon(1e-9));
  }

  TEST_CASE("bloch dots for the nonstationary driver") {
    PropagationConfig cfg;
    cfg.dt = 1e-4;
    const TimeDependentHamiltonian h = build_uzdin(1.0, 1.0);
    const Trajectory tr = evolve_timedep(h, StateVector::basis(2, 0), cfg);
    const BlochSymmetryReport r = bloch_symmetry_report(tr, Hamiltonian{h});
    double source = 0.0, state = 0.0;
    for (const auto& p : r.points) {
      source = std::max(source, std::abs(p.source_plus));
      state = std::max(state, std::abs(p.state_plus));
      // Source endpoint projections reproduce the overlap probabilities.
      const OverlapPair q = overlap_probabilities(1.0, 1.0, p.t, Endpoint::A);
      CHECK(std::abs(0.5 * (1.0 + p.source_plus) - q.plus) < 1e-9);
    }
    CHECK(source > 0.1);
    CHECK(source == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-6));
    // The evolving state stays perpendicular to the field.
    CHECK(state < 1e-6);
    CHECK(r.endpoint_dot == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK_THROWS_KIND(bloch_symmetry_report(Trajectory{}, Hamiltonian{h}), ErrorKind::EmptyTrajectory);
  }
}
