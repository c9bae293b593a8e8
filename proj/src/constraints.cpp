#include "qgeo/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace qgeo {

namespace {

double overlap_modulus(double epsilon, double pb1, double pb2) {
  const double w1 = 0.5 * (1.0 - epsilon);
  const double w2 = 0.5 * (1.0 + epsilon);
  return std::abs(std::polar(w1, pb1) + std::polar(w2, pb2));
}

void require_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || std::abs(epsilon) >= 1.0)
    fail(ErrorKind::EpsilonOutOfRange, "epsilon must satisfy |epsilon| < 1, got " + std::to_string(epsilon));
}

using Point = std::array<double, 2>;

// Plain Nelder-Mead on two variables.
Point nelder_mead(const std::function<double(const Point&)>& f, Point start, double scale, int iterations) {
  std::array<Point, 3> x{start, Point{start[0] + scale, start[1]}, Point{start[0], start[1] + scale}};
  std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};
  const auto lerp = [](const Point& a, const Point& b, double t) {
    return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };
  for (int it = 0; it < iterations; ++it) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const int best = order[0], mid = order[1], worst = order[2];
    const Point centroid{0.5 * (x[best][0] + x[mid][0]), 0.5 * (x[best][1] + x[mid][1])};
    const Point reflected = lerp(x[worst], centroid, 2.0);
    const double fr = f(reflected);
    if (fr < fx[best]) {
      const Point expanded = lerp(x[worst], centroid, 3.0);
      const double fe = f(expanded);
      if (fe < fr) {
        x[worst] = expanded;
        fx[worst] = fe;
      } else {
        x[worst] = reflected;
        fx[worst] = fr;
      }
    } else if (fr < fx[mid]) {
      x[worst] = reflected;
      fx[worst] = fr;
    } else {
      const Point contracted = lerp(x[worst], centroid, 0.5);
      const double fc = f(contracted);
      if (fc < fx[worst]) {
        x[worst] = contracted;
        fx[worst] = fc;
      } else {
        for (int i : {mid, worst}) {
          x[i] = lerp(x[best], x[i], 0.5);
          fx[i] = f(x[i]);
        }
      }
    }
  }
  const auto it = std::min_element(fx.begin(), fx.end());
  return x[static_cast<std::size_t>(it - fx.begin())];
}

}  // namespace

ConstraintReport check_system(const AmplitudeSet& amps, double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) fail(ErrorKind::InvalidArgument, "energy must be positive");
  const double a1 = std::norm(amps.alpha1), a2 = std::norm(amps.alpha2);
  const double b1 = std::norm(amps.beta1), b2 = std::norm(amps.beta2);
  ConstraintReport r;
  r.normalization_residual = std::max(std::abs(a1 + a2 - 1.0), std::abs(b1 + b2 - 1.0));
  r.orthogonality_residual = std::abs(std::conj(amps.alpha1) * amps.beta1 + std::conj(amps.alpha2) * amps.beta2);
  const double mean_a = a2 - a1;
  const double mean_b = b2 - b1;
  r.mean_energy_residual = std::abs(mean_a - mean_b);
  r.variance_residual = std::abs(mean_a * mean_a - mean_b * mean_b);
  // Equal means force equal variances: |ma^2 - mb^2| <= |ma - mb| |ma + mb|.
  const double bound = r.mean_energy_residual * std::abs(mean_a + mean_b);
  if (r.variance_residual > bound + 1e-12)
    fail(ErrorKind::NumericalCheck, "variance residual exceeds the mean-energy bound");
  r.feasible = r.normalization_residual < kConstraintTolerance && r.orthogonality_residual < kConstraintTolerance &&
               r.mean_energy_residual < kConstraintTolerance && r.variance_residual < kConstraintTolerance;
  return r;
}

AmplitudeSet pair_amplitudes(double epsilon, const PhaseSet& phases) {
  require_epsilon(epsilon);
  const double m1 = std::sqrt(0.5 * (1.0 - epsilon));
  const double m2 = std::sqrt(0.5 * (1.0 + epsilon));
  return {std::polar(m1, phases[0]), std::polar(m2, phases[1]), std::polar(m1, phases[2]),
          std::polar(m2, phases[3])};
}

std::pair<StateVector, StateVector> build_pair(double epsilon, const PhaseSet& phases) {
  const AmplitudeSet s = pair_amplitudes(epsilon, phases);
  return {StateVector{s.alpha1, s.alpha2}, StateVector{s.beta1, s.beta2}};
}

double epsilon_residual(double epsilon) {
  require_epsilon(epsilon);
  const double q = (1.0 + epsilon) / (1.0 - epsilon);
  return std::abs(q * q - 1.0);
}

PhaseMinimum minimize_overlap(double epsilon, const PhaseSearchOptions& opts) {
  require_epsilon(epsilon);
  if (opts.coarse < 4) fail(ErrorKind::InvalidArgument, "coarse phase grid needs at least 4 points");
  const double step = 2.0 * std::numbers::pi / opts.coarse;
  const auto n = static_cast<std::size_t>(opts.coarse);
  std::vector<Complex> unit(n);
  for (std::size_t i = 0; i < n; ++i) unit[i] = std::polar(1.0, step * static_cast<double>(i));
  const double w1 = 0.5 * (1.0 - epsilon);
  const double w2 = 0.5 * (1.0 + epsilon);
  PhaseMinimum best{overlap_modulus(epsilon, 0.0, 0.0), 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = std::abs(w1 * unit[i] + w2 * unit[j]);
      if (v < best.overlap) best = {v, step * static_cast<double>(i), step * static_cast<double>(j)};
    }
  }
  if (opts.refine_steps > 0) {
    const auto f = [epsilon](const Point& p) { return overlap_modulus(epsilon, p[0], p[1]); };
    const Point p = nelder_mead(f, {best.phase_b1, best.phase_b2}, 0.5 * step, opts.refine_steps);
    const double v = f(p);
    if (v < best.overlap) best = {v, p[0], p[1]};
  }
  return best;
}

FeasibilityReport verify_unique_feasibility(int grid_size, double range, const PhaseSearchOptions& opts) {
  if (grid_size < 101) fail(ErrorKind::InvalidArgument, "epsilon grid needs at least 101 points");
  if (!(range > 0.0 && range < 1.0)) fail(ErrorKind::EpsilonOutOfRange, "range must lie in (0, 1)");
  FeasibilityReport out;
  out.threshold = kFeasibilityThreshold;
  out.samples.reserve(static_cast<std::size_t>(grid_size));
  const int last = grid_size - 1;
  for (int k = 0; k < grid_size; ++k) {
    // Symmetric construction so an odd grid hits epsilon = 0 exactly.
    const double eps = range * static_cast<double>(2 * k - last) / static_cast<double>(last);
    const PhaseMinimum m = minimize_overlap(eps, opts);
    const bool ok = m.overlap < kFeasibilityThreshold;
    out.samples.push_back({eps, m.overlap, ok});
    if (ok) out.feasible_epsilons.push_back(eps);
  }
  out.unique_at_zero = !out.feasible_epsilons.empty() &&
                       std::all_of(out.feasible_epsilons.begin(), out.feasible_epsilons.end(),
                                   [&](double e) { return std::abs(e) <= 0.5 * range / last; });
  out.amplitude_half_residual = 1.0;
  if (!out.feasible_epsilons.empty()) {
    const auto best = std::min_element(out.samples.begin(), out.samples.end(),
                                       [](const EpsilonSample& a, const EpsilonSample& b) {
                                         return a.min_overlap < b.min_overlap;
                                       });
    const AmplitudeSet amps = pair_amplitudes(best->epsilon, {0.0, 0.0, 0.0, 0.0});
    out.amplitude_half_residual =
        std::max(std::abs(std::norm(amps.alpha1) - 0.5), std::abs(std::norm(amps.alpha2) - 0.5));
  }
  return out;
}

}  // namespace qgeo
