#include "qgeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qgeo {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::OrthogonalSourceTarget: return "OrthogonalSourceTarget";
    case ErrorKind::CoincidentStates: return "CoincidentStates";
    case ErrorKind::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::EmptyTrajectory: return "EmptyTrajectory";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorKind::NonUnitAxis: return "NonUnitAxis";
    case ErrorKind::NoProgress: return "NoProgress";
    case ErrorKind::NumericalCheck: return "NumericalCheck";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    fail(ErrorKind::DimensionMismatch,
         std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2) fail(ErrorKind::InvalidArgument, "state dimension must be >= 2");
  if (!all_finite(amps_)) fail(ErrorKind::InvalidArgument, "state has non-finite amplitude");
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(CVector(Eigen::Map<const CVector>(amplitudes.begin(),
                                                    static_cast<Eigen::Index>(amplitudes.size())))) {}

StateVector StateVector::normalized(CVector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) fail(ErrorKind::InvalidArgument, "cannot normalize zero vector");
  return StateVector(amplitudes / n);
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) fail(ErrorKind::InvalidArgument, "basis index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

StateVector StateVector::uniform(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return StateVector(CVector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(const CMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "matrix is not square");
  if (m.rows() < 1) fail(ErrorKind::InvalidArgument, "empty matrix");
  if (!all_finite(m)) fail(ErrorKind::InvalidArgument, "matrix has non-finite entry");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tolerance)
    fail(ErrorKind::NotHermitian, "max |M - M^dagger| = " + std::to_string(asym));
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianMatrix(CMatrix::Zero(n, n), Trusted{});
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianMatrix(CMatrix::Identity(n, n), Trusted{});
}

HermitianMatrix HermitianMatrix::projector(const StateVector& a) {
  CMatrix p = a.amplitudes() * a.amplitudes().adjoint();
  return HermitianMatrix(0.5 * (p + p.adjoint()), Trusted{});
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  require_same_dim(dim(), o.dim(), "matrix sum");
  return HermitianMatrix(m_ + o.m_, Trusted{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  require_same_dim(dim(), o.dim(), "matrix difference");
  return HermitianMatrix(m_ - o.m_, Trusted{});
}

HermitianMatrix HermitianMatrix::scaled(double f) const { return HermitianMatrix(m_ * f, Trusted{}); }

HermitianMatrix HermitianMatrix::shifted(double c) const {
  CMatrix m = m_;
  m.diagonal().array() += c;
  return HermitianMatrix(std::move(m), Trusted{});
}

// ---------------------------------------------------------------------------
// Eigensolver

CVector apply_phase_convention(const CVector& v, double tie) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs + tie) {
      best = i;
      best_abs = a;
    }
  }
  if (best_abs <= 0.0) return v;
  const Complex phase = std::conj(v(best)) / best_abs;
  CVector out = v * phase;
  out(best) = Complex(std::abs(out(best)), 0.0);
  return out;
}

namespace {

// Closed form for [[a, b], [conj(b), d]].
void eigen_2x2(const CMatrix& m, Eigen::VectorXd& values, CMatrix& vectors) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = m(0, 1);
  const double mean = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  const double r = std::hypot(half_diff, std::abs(b));
  values.resize(2);
  values << mean - r, mean + r;
  vectors.resize(2, 2);
  if (r == 0.0) {
    vectors.setIdentity();
    return;
  }
  for (int k = 0; k < 2; ++k) {
    const double lambda = values(k);
    // Two equivalent null vectors of (M - lambda); keep the longer one.
    CVector u(2), w(2);
    u << b, Complex(lambda - a, 0.0);
    w << Complex(lambda - d, 0.0), std::conj(b);
    CVector v = (u.norm() >= w.norm()) ? u : w;
    vectors.col(k) = v / v.norm();
  }
}

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Cyclic complex Jacobi. Each rotation first removes the phase of a(p,q) and
// then applies the real symmetric Jacobi rotation.
void eigen_jacobi(const CMatrix& m, const EigenOptions& opts, Eigen::VectorXd& values,
                  CMatrix& vectors) {
  const Eigen::Index n = m.rows();
  CMatrix a = m;
  CMatrix v = CMatrix::Identity(n, n);
  const double scale = std::max(a.norm(), 1e-300);
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= opts.off_diagonal * scale) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const Complex ph = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = diag(1, conj(ph)) on (p, q) followed by the real rotation.
        const Complex jpp = c, jpq = s, jqp = -s * std::conj(ph), jqq = c * std::conj(ph);
        for (Eigen::Index k = 0; k < n; ++k) {  // a <- a J
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // a <- J^dagger a
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {  // v <- v J
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }
  values = a.diagonal().real();
  vectors = v;
}

}  // namespace

EigenDecomposition hermitian_eigen(const HermitianMatrix& m, const EigenOptions& opts) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::VectorXd raw_values;
  CMatrix raw_vectors;
  if (n == 1) {
    raw_values = Eigen::VectorXd::Constant(1, m(0, 0).real());
    raw_vectors = CMatrix::Identity(1, 1);
  } else if (n == 2) {
    eigen_2x2(m.matrix(), raw_values, raw_vectors);
  } else {
    eigen_jacobi(m.matrix(), opts, raw_values, raw_vectors);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return raw_values(i) < raw_values(j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = raw_values(order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = raw_vectors.col(order[static_cast<std::size_t>(k)]);
  }

  // Degenerate blocks: sequential projection in index order.
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && out.values(stop) - out.values(stop - 1) <= opts.degeneracy) ++stop;
    for (Eigen::Index k = start; k < stop; ++k) {
      CVector col = out.vectors.col(k);
      for (Eigen::Index j = start; j < k; ++j) col -= out.vectors.col(j).dot(col) * out.vectors.col(j);
      out.vectors.col(k) = col / col.norm();
    }
    start = stop;
  }

  for (Eigen::Index k = 0; k < n; ++k) out.vectors.col(k) = apply_phase_convention(out.vectors.col(k));
  return out;
}

CMatrix EigenDecomposition::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

CMatrix unitary_exp(const HermitianMatrix& h, double t, double hbar) {
  if (!(hbar > 0.0)) fail(ErrorKind::InvalidArgument, "hbar must be positive");
  const EigenDecomposition eig = hermitian_eigen(h);
  CVector phases(eig.values.size());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) phases(k) = std::polar(1.0, -eig.values(k) * t / hbar);
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

// ---------------------------------------------------------------------------
// Inner products and friends

Complex inner(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner product");
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left operand
}

double fidelity(const StateVector& a, const StateVector& b, double norm_tolerance) {
  require_same_dim(a.dim(), b.dim(), "fidelity");
  if (!a.is_normalized(norm_tolerance) || !b.is_normalized(norm_tolerance))
    fail(ErrorKind::NotNormalized, "fidelity requires normalized states");
  return std::min(1.0, std::norm(inner(a, b)));
}

double expectation(const HermitianMatrix& h, const StateVector& psi) {
  require_same_dim(h.dim(), psi.dim(), "expectation");
  return psi.amplitudes().dot(h.matrix() * psi.amplitudes()).real();
}

double dispersion(const HermitianMatrix& h, const StateVector& psi) {
  require_same_dim(h.dim(), psi.dim(), "dispersion");
  const CVector hpsi = h.matrix() * psi.amplitudes();
  const double mean = psi.amplitudes().dot(hpsi).real();
  const double second = hpsi.squaredNorm();
  return std::sqrt(std::max(0.0, second - mean * mean));
}

CMatrix outer(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "outer product");
  return a.amplitudes() * b.amplitudes().adjoint();
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "commutator operands differ in shape");
  return a * b - b * a;
}

double frobenius(const CMatrix& m) { return m.norm(); }

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double spectral_norm(const HermitianMatrix& h) {
  const EigenDecomposition eig = hermitian_eigen(h);
  return std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
}

double phase_aligned_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "phase_aligned_distance operands differ in shape");
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  return (a - phase * b).norm();
}

StateVector apply_unitary(const CMatrix& u, const StateVector& psi) {
  if (u.cols() != static_cast<Eigen::Index>(psi.dim()))
    fail(ErrorKind::DimensionMismatch, "operator/state dimension mismatch");
  return StateVector(CVector(u * psi.amplitudes()));
}

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace qgeo
