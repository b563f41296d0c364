#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "dass/models/reference_adjust.hpp"
#include "dass/target.hpp"

namespace dass::models {

// One-dimensional benchmark target rho(x) = exp(|x| - x^2/2) over the
// Lebesgue measure, factorized into the Gaussian bulk rho_app = exp(-x^2/2)
// and the ratio rho_hat = exp(|x|). Both superlevel-set families are
// analytically tractable, so exact slice samplers are available for the
// factorized and the unfactorized density.

inline double example1d_log_rho(double x) { return std::abs(x) - 0.5 * x * x; }

// Factorized target with the direct sampler of U(-a, a), a = sqrt(-2 log s),
// for the Gaussian coarse slice. Consumes one uniform per draw.
inline FactorizedTarget example1d_target() {
  FactorizedTarget t;
  t.dim = 1;
  t.reference = make_lebesgue(1);
  t.coarse = DensityFactor{[](const Vector& x) { return -0.5 * x[0] * x[0]; }, 1, 1.0};
  t.fine_ratio = DensityFactor{[](const Vector& x) { return std::abs(x[0]); }, 1, 1.0};
  t.direct_slice_sampler = [](double log_s, const std::function<double()>& unif01) {
    if (!(log_s < 0.0)) throw std::domain_error("example1d: coarse level above the density maximum");
    const double a = std::sqrt(-2.0 * log_s);
    return Vector{a * (2.0 * unif01() - 1.0)};
  };
  return t;
}

// Trivial factorization of the full density, with the exact sampler of the
// uniform distribution on {x : |x| - x^2/2 > log s}: a single symmetric
// interval for s < 1 and two symmetric intervals around +-1 above.
inline FactorizedTarget example1d_plain_target() {
  DensityFactor full{[](const Vector& x) { return example1d_log_rho(x[0]); }, 1, 1.0};
  FactorizedTarget t = trivial_factorization(std::move(full), make_lebesgue(1));
  t.direct_slice_sampler = [](double log_s, const std::function<double()>& unif01) {
    if (!(log_s < 0.5)) throw std::domain_error("example1d: level above the density maximum");
    const double b = std::sqrt(1.0 - 2.0 * log_s);
    const double u = unif01();
    if (log_s < 0.0) {
      const double edge = 1.0 + b;
      return Vector{edge * (2.0 * u - 1.0)};
    }
    const double span = u * 4.0 * b;
    return Vector{span < 2.0 * b ? -1.0 - b + span : 1.0 - b + (span - 2.0 * b)};
  };
  return t;
}

// CDF of the normalized target by composite trapezoidal quadrature on
// [-8, 8]; the Gaussian factor makes the tail mass beyond the window
// negligible (< 1e-10).
inline std::function<double(double)> example1d_true_cdf(int grid_resolution = 200000) {
  if (grid_resolution < 10000)
    throw std::invalid_argument("example1d_true_cdf: grid resolution too coarse");
  const double lo = -8.0, hi = 8.0;
  const int n = grid_resolution;
  const double step = (hi - lo) / n;
  auto density = std::make_shared<std::vector<double>>(n + 1);
  auto cum = std::make_shared<std::vector<double>>(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) (*density)[i] = std::exp(example1d_log_rho(lo + i * step));
  for (int i = 1; i <= n; ++i)
    (*cum)[i] = (*cum)[i - 1] + 0.5 * ((*density)[i - 1] + (*density)[i]) * step;
  const double total = (*cum)[n];
  return [=](double x) {
    if (x <= lo) return 0.0;
    if (x >= hi) return 1.0;
    const double pos = (x - lo) / step;
    int i = static_cast<int>(pos);
    if (i >= n) i = n - 1;
    const double xi = lo + i * step;
    const double di = (*density)[i];
    const double dx = x - xi;
    // trapezoid of the linearly interpolated density within the cell
    const double d_at = di + ((*density)[i + 1] - di) * (dx / step);
    return ((*cum)[i] + 0.5 * (di + d_at) * dx) / total;
  };
}

namespace detail {

inline double abs_sum(const Vector& x) {
  double s = 0.0;
  for (double xi : x) s += std::abs(xi);
  return s;
}

}  // namespace detail

// Product extension over a Gaussian reference N(0, I_d): the likelihood
// exp(sum |x_i|) split evenly between the coarse and the fine factor, so
// both predicates stay active. Coordinates are i.i.d. with the 1d target
// law, which keeps the quadrature CDF usable as the marginal oracle.
inline FactorizedTarget example1d_gaussian_analog(int dim, bool delayed_acceptance) {
  FactorizedTarget t;
  t.dim = dim;
  t.reference = GaussianRef::diagonal(Vector(dim, 1.0));
  if (delayed_acceptance) {
    t.coarse = DensityFactor{[](const Vector& x) { return 0.5 * detail::abs_sum(x); }, dim, 1.0};
    t.fine_ratio =
        DensityFactor{[](const Vector& x) { return 0.5 * detail::abs_sum(x); }, dim, 1.0};
    return t;
  }
  return trivial_factorization(
      DensityFactor{[](const Vector& x) { return detail::abs_sum(x); }, dim, 1.0},
      GaussianRef::diagonal(Vector(dim, 1.0)));
}

// Product extension over the Lebesgue measure: the standard normal prior is
// folded into the coarse factor via reference_adjust, the fine factor keeps
// exp(sum |x_i|). Marginals again follow the 1d target law.
inline FactorizedTarget example1d_product_lebesgue(int dim, bool delayed_acceptance) {
  GaussianRef prior = GaussianRef::diagonal(Vector(dim, 1.0));
  ReferenceMeasure ref = make_lebesgue(dim);
  DensityFactor zero{[](const Vector&) { return 0.0; }, dim, 1.0};
  DensityFactor gauss = reference_adjust(std::move(zero), prior, ref);
  if (delayed_acceptance) {
    FactorizedTarget t;
    t.dim = dim;
    t.reference = ref;
    t.coarse = std::move(gauss);
    t.fine_ratio = DensityFactor{[](const Vector& x) { return detail::abs_sum(x); }, dim, 1.0};
    return t;
  }
  DensityFactor full{[g = gauss.log_eval](const Vector& x) { return g(x) + detail::abs_sum(x); },
                     dim, 1.0};
  return trivial_factorization(std::move(full), ref);
}

// Product extension under the polar reference, with the Jacobian term folded
// into the same adjusted coarse factor.
inline FactorizedTarget example1d_product_polar(int dim, bool delayed_acceptance) {
  GaussianRef prior = GaussianRef::diagonal(Vector(dim, 1.0));
  ReferenceMeasure ref = make_polar(dim);
  DensityFactor zero{[](const Vector&) { return 0.0; }, dim, 1.0};
  DensityFactor adjusted = reference_adjust(std::move(zero), prior, ref);
  if (delayed_acceptance) {
    FactorizedTarget t;
    t.dim = dim;
    t.reference = ref;
    t.coarse = std::move(adjusted);
    t.fine_ratio = DensityFactor{[](const Vector& x) { return detail::abs_sum(x); }, dim, 1.0};
    return t;
  }
  DensityFactor full{
      [g = adjusted.log_eval](const Vector& x) { return g(x) + detail::abs_sum(x); }, dim, 1.0};
  return trivial_factorization(std::move(full), ref);
}

}  // namespace dass::models
