#pragma once

#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <doctest.h>

#include "qgeo/linalg.hpp"

namespace testing {

using qgeo::CMatrix;
using qgeo::Complex;
using qgeo::CVector;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline CVector random_vector(std::mt19937_64& g, Eigen::Index n) {
  std::normal_distribution<double> d;
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = {d(g), d(g)};
  return v;
}

inline qgeo::StateVector random_state(std::mt19937_64& g, Eigen::Index n) {
  return qgeo::StateVector::normalized(random_vector(g, n));
}

inline CMatrix random_hermitian_matrix(std::mt19937_64& g, Eigen::Index n) {
  std::normal_distribution<double> d;
  CMatrix a(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) a(r, c) = {d(g), d(g)};
  return 0.5 * (a + a.adjoint());
}

inline qgeo::HermitianMatrix random_hermitian(std::mt19937_64& g, Eigen::Index n) {
  return qgeo::HermitianMatrix(random_hermitian_matrix(g, n));
}

inline CMatrix random_unitary(std::mt19937_64& g, Eigen::Index n) {
  Eigen::HouseholderQR<CMatrix> qr(random_hermitian_matrix(g, n) + CMatrix::Identity(n, n) * Complex(0.0, 1.0));
  return qr.householderQ() * CMatrix::Identity(n, n);
}

// Independent eigenvalue oracle.
inline Eigen::VectorXd oracle_eigenvalues(const CMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<CMatrix>(m).eigenvalues();
}

// |<a|U|b>|^2 by explicit matrix action.
inline double transition(const CMatrix& u, const qgeo::StateVector& from, const qgeo::StateVector& to) {
  return std::norm(to.amplitudes().dot(u * from.amplitudes()));
}

inline double pi() { return 3.14159265358979323846; }

}  // namespace testing

#define CHECK_THROWS_KIND(expr, k)                       \
  do {                                                   \
    bool thrown_ = false;                                \
    try {                                                \
      (void)(expr);                                      \
    } catch (const qgeo::Error& e_) {                    \
      thrown_ = true;                                    \
      CHECK_MESSAGE(e_.kind() == (k), e_.what());        \
    }                                                    \
    CHECK_MESSAGE(thrown_, "expected qgeo::Error: " #k); \
  } while (0)
