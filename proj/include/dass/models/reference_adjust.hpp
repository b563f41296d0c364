#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "dass/target.hpp"

namespace dass::models {

// Folds a Gaussian prior into a log-density factor so a target formulated
// against the prior can be run under the Lebesgue or polar reference measure:
// Lebesgue gains the prior log-density, the polar measure additionally the
// Jacobian term (d-1) log ||x||. Applied to the coarse factor and the full
// density alike, the adjustment cancels in the ratio rho_hat.
inline DensityFactor reference_adjust(DensityFactor factor, GaussianRef prior,
                                      const ReferenceMeasure& reference) {
  if (prior.dim() != factor.dim)
    throw std::invalid_argument("reference_adjust: prior/factor dimension mismatch");
  if (std::holds_alternative<GaussianRef>(reference))
    throw std::invalid_argument(
        "reference_adjust: a Gaussian reference carries the prior already");
  const bool polar = std::holds_alternative<PolarLebesgue>(reference);
  if (dim_of(reference) != factor.dim)
    throw std::invalid_argument("reference_adjust: reference/factor dimension mismatch");

  DensityFactor out;
  out.dim = factor.dim;
  out.cost_weight = factor.cost_weight;
  out.log_eval = [base = std::move(factor.log_eval), prior = std::move(prior),
                  polar](const Vector& x) {
    double v = base(x) + prior.log_density(x);
    if (polar) {
      const double r = norm(x);
      // r = 0 maps to the -inf out-of-support sentinel of the polar measure.
      v += (static_cast<double>(x.size()) - 1.0) * std::log(r);
    }
    return v;
  };
  return out;
}

}  // namespace dass::models
