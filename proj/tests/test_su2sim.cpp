#include "qgeo/su2sim.hpp"

#include "support.hpp"

using namespace qgeo;
using namespace testing;

namespace {

CMatrix sigma_dot(const BlochVector& n) { return n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z(); }

BlochVector random_axis(std::mt19937_64& g) {
  std::normal_distribution<double> d;
  return BlochVector(d(g), d(g), d(g)).normalized();
}

// Textbook Grover: success after k iterations is sin^2((2k + 1) theta).
SearchIteration grover_oracle(int n) {
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
  double prev = std::pow(std::sin(theta), 2);
  for (int k = 1;; ++k) {
    const double p = std::pow(std::sin((2 * k + 1) * theta), 2);
    if (p <= prev) return {k - 1, prev};
    prev = p;
  }
}

}  // namespace

TEST_SUITE("su2sim") {
  TEST_CASE("pauli product identity") {
    auto g = rng(61);
    for (int k = 0; k < 200; ++k) {
      const BlochVector a = random_axis(g), b = random_axis(g);
      const PauliProduct p = pauli_product(a, b);
      CHECK(p.scalar == doctest::Approx(a.dot(b)));
      const CMatrix lhs = sigma_dot(a) * sigma_dot(b);
      const CMatrix rhs = p.scalar * CMatrix::Identity(2, 2) + Complex(0.0, 1.0) * sigma_dot(p.vector);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
    }
    CHECK_THROWS_KIND(pauli_product(BlochVector(1, 1, 0), BlochVector(0, 0, 1)), ErrorKind::NonUnitAxis);
  }

  TEST_CASE("composition examples") {
    const BlochVector x(1, 0, 0), z(0, 0, 1);
    const AxisAngle half{x, pi() / 2.0};
    const AxisAngle r = compose_rotations(half, half);
    CHECK((r.axis - x).norm() < 1e-15);
    CHECK(r.angle == doctest::Approx(pi()));

    const AxisAngle undo = compose_rotations({x, 0.7}, {x, -0.7});
    CHECK((undo.axis - z).norm() == 0.0);
    CHECK(undo.angle == 0.0);
    const AxisAngle minus = compose_rotations({x, pi()}, {x, pi()});
    CHECK(minus.angle == doctest::Approx(2.0 * pi()));
    CHECK((rotation_matrix(minus) + CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_KIND(compose_rotations({BlochVector(2, 0, 0), 1.0}, half), ErrorKind::NonUnitAxis);
  }

  TEST_CASE("composition agrees with the matrix product") {
    auto g = rng(62);
    std::uniform_real_distribution<double> ang(-2.0 * pi(), 2.0 * pi());
    for (int k = 0; k < 500; ++k) {
      const AxisAngle a{random_axis(g), ang(g)}, b{random_axis(g), ang(g)}, c{random_axis(g), ang(g)};
      const AxisAngle ab = compose_rotations(a, b);
      CHECK(std::abs(ab.axis.norm() - 1.0) < 1e-12);
      CHECK((rotation_matrix(ab) - rotation_matrix(a) * rotation_matrix(b)).cwiseAbs().maxCoeff() < 1e-12);
      const AxisAngle left = compose_rotations(ab, c);
      const AxisAngle right = compose_rotations(a, compose_rotations(b, c));
      CHECK((rotation_matrix(left) - rotation_matrix(right)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("search axes") {
    for (int n : {2, 4, 64}) {
      const BlochVector s = search_source_axis(n);
      CHECK(std::abs(s.norm() - 1.0) < 1e-15);
      CHECK(s.dot(search_target_axis()) == doctest::Approx(2.0 / n - 1.0));
      // Matches the Bloch vector of the uniform state restricted to {|w>, |r>}.
      const double x = 1.0 / std::sqrt(static_cast<double>(n));
      const StateVector u{Complex(x, 0.0), Complex(std::sqrt(1.0 - x * x), 0.0)};
      CHECK((state_to_bloch(u) - s).norm() < 1e-15);
    }
    CHECK_THROWS_KIND(search_source_axis(1), ErrorKind::InvalidArgument);
  }

  TEST_CASE("simulation step") {
    for (int n : {2, 3, 4, 16, 64, 1000}) {
      const BlochVector s = search_source_axis(n), w = search_target_axis();
      for (double dt : {0.1, 0.5, 1.0, 2.0, pi(), 4.0}) {
        const SimStep st = simulation_step(n, dt);
        // Exact exponential of the two projectors, built independently.
        const CMatrix ps = 0.5 * (CMatrix::Identity(2, 2) + sigma_dot(s));
        const CMatrix pw = 0.5 * (CMatrix::Identity(2, 2) + sigma_dot(w));
        const CMatrix exact = unitary_exp(HermitianMatrix(ps), dt) * unitary_exp(HermitianMatrix(pw), dt);
        CHECK((st.unitary - exact).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((st.unitary - std::polar(1.0, -dt) * rotation_matrix({st.axis, st.angle})).cwiseAbs().maxCoeff() <
              1e-12);
        const BlochVector raw = simulation_axis_raw(n, dt);
        const BlochVector expected = std::cos(dt / 2) * (s + w) / 2 + std::sin(dt / 2) * s.cross(w) / 2;
        CHECK((raw - expected).norm() < 1e-15);
        CHECK(std::abs(st.axis.dot(raw.normalized()) - 1.0) < 1e-12);
      }
      const SimStep half = simulation_step(n, pi());
      CHECK(half.axis.cross(s.cross(w)).norm() < 1e-12);
      const double x2 = 1.0 / n;
      CHECK(std::cos(half.angle / 2.0) == doctest::Approx(1.0 - 2.0 * x2).epsilon(1e-12));
    }
  }

  TEST_CASE("step at pi is the Grover iterate") {
    for (int n : {2, 3, 4, 8, 64, 1024, 1 << 20}) CHECK(grover_equivalence(n) < 1e-12);
  }

  TEST_CASE("iterated search reaches the textbook peak") {
    for (int n : {4, 8, 16, 64, 100, 1024}) {
      const SearchIteration got = iterate_search(n, pi());
      const SearchIteration want = grover_oracle(n);
      CHECK(got.steps_to_peak == want.steps_to_peak);
      CHECK(std::abs(got.peak_probability - want.peak_probability) < 1e-9);
    }
    const SearchIteration n64 = iterate_search(64, pi());
    CHECK(n64.steps_to_peak == 6);
    CHECK(n64.peak_probability == doctest::Approx(0.996586).epsilon(1e-6));
    CHECK(iterate_search(4, pi()).peak_probability == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("iterated search without progress") {
    CHECK_THROWS_KIND(iterate_search(2, pi()), ErrorKind::NoProgress);
    CHECK_THROWS_KIND(iterate_search(16, 2.0 * pi()), ErrorKind::NoProgress);
    CHECK_THROWS_KIND(iterate_search(16, 0.0), ErrorKind::InvalidArgument);
  }
}
