#pragma once

// Dense complex kernel for small (N <= 64) Hermitian problems.
//
// Storage is Eigen; the eigensolver is our own (closed form for 2x2, cyclic
// Jacobi above that) so results come with a deterministic ordering and phase
// convention that the rest of the library relies on.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qgeo/error.hpp"

namespace qgeo {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

namespace tol {
inline constexpr double kNormalization = 1e-12;
// Looser bound used when checking that inputs are normalized (propagated
// states may carry round-off from many steps).
inline constexpr double kNormPrecondition = 1e-9;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kDegeneracy = 1e-12;
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kPhaseTie = 1e-12;
}  // namespace tol

/// Pure state amplitudes in a fixed orthonormal basis, N >= 2.
///
/// Components are always finite. Normalization is not enforced on
/// construction because trajectories carry round-off; operations that need a
/// unit vector check it themselves.
class StateVector {
 public:
  explicit StateVector(CVector amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  /// Rescales to unit norm; fails on the zero vector.
  static StateVector normalized(CVector amplitudes);
  static StateVector basis(std::size_t dim, std::size_t index);
  static StateVector uniform(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  double norm() const { return amps_.norm(); }
  bool is_normalized(double tolerance = tol::kNormalization) const {
    return std::abs(norm() - 1.0) <= tolerance;
  }

  StateVector with_phase(double phase) const { return StateVector(amps_ * std::polar(1.0, phase)); }

 private:
  CVector amps_;
};

/// Square matrix equal to its adjoint within tol::kHermitian (entrywise).
/// Stored exactly Hermitian after construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const CMatrix& m, double tolerance = tol::kHermitian);

  static HermitianMatrix zero(std::size_t dim);
  static HermitianMatrix identity(std::size_t dim);
  /// |a><a|
  static HermitianMatrix projector(const StateVector& a);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix scaled(double f) const;
  HermitianMatrix shifted(double c) const;  // M + c*I
  double trace() const { return m_.trace().real(); }

 private:
  struct Trusted {};
  HermitianMatrix(CMatrix m, Trusted) : m_(std::move(m)) {}
  CMatrix m_;
};

struct EigenOptions {
  double degeneracy = tol::kDegeneracy;
  double off_diagonal = tol::kJacobiOffDiagonal;
  int max_sweeps = tol::kJacobiMaxSweeps;
};

/// Ascending eigenvalues with orthonormal eigenvectors stored as columns.
/// Every column has its largest-magnitude component real and positive (lowest
/// index wins ties).
struct EigenDecomposition {
  Eigen::VectorXd values;
  CMatrix vectors;

  std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
  StateVector vector(std::size_t i) const {
    return StateVector(CVector(vectors.col(static_cast<Eigen::Index>(i))));
  }
  /// sum_i values_i |v_i><v_i|
  CMatrix reconstruct() const;
};

EigenDecomposition hermitian_eigen(const HermitianMatrix& m, const EigenOptions& opts = {});

/// exp(-i H t / hbar) built from the spectral decomposition.
CMatrix unitary_exp(const HermitianMatrix& h, double t, double hbar = 1.0);

Complex inner(const StateVector& a, const StateVector& b);  // <a|b>
/// |<a|b>|^2; both inputs must be normalized.
double fidelity(const StateVector& a, const StateVector& b,
                double norm_tolerance = tol::kNormPrecondition);

double expectation(const HermitianMatrix& h, const StateVector& psi);
/// sqrt(<H^2> - <H>^2)
double dispersion(const HermitianMatrix& h, const StateVector& psi);

/// |a><b|
CMatrix outer(const StateVector& a, const StateVector& b);
CMatrix commutator(const CMatrix& a, const CMatrix& b);
double frobenius(const CMatrix& m);
double max_abs(const CMatrix& m);
/// Largest singular value.
double spectral_norm(const HermitianMatrix& h);

/// Frobenius distance after removing the global phase that best aligns b
/// with a, i.e. min over phi of ||a - e^{i phi} b||_F.
double phase_aligned_distance(const CMatrix& a, const CMatrix& b);

/// Scales v so its largest-magnitude entry is real positive.
CVector apply_phase_convention(const CVector& v, double tie = tol::kPhaseTie);

StateVector apply_unitary(const CMatrix& u, const StateVector& psi);

double clamp_unit(double v);  // clip to [-1, 1] before acos/asin

}  // namespace qgeo
