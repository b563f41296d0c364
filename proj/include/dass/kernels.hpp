#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "dass/slice_moves.hpp"
#include "dass/target.hpp"

namespace dass {

struct SamplerConfig {
  double w = 1.0;          // stepping-out step size
  double mh_step = 1.0;    // random-walk proposal scale
  int max_expand = 10000;  // stepping-out safety cap per direction
  int max_shrink = 10000;  // shrinkage safety cap
  long max_reject = 1000000;  // rejection-loop cap of the ideal sampler

  void validate() const {
    if (!(w > 0.0)) throw std::invalid_argument("SamplerConfig: w must be positive");
    if (!(mh_step > 0.0)) throw std::invalid_argument("SamplerConfig: mh_step must be positive");
    if (max_expand < 1 || max_shrink < 1 || max_reject < 1)
      throw std::invalid_argument("SamplerConfig: caps must be >= 1");
  }
};

// Per-stage acceptance counters of the two-stage Metropolis test.
struct AcceptStats {
  std::uint64_t proposals = 0;
  std::uint64_t stage1_accepts = 0;
  std::uint64_t stage2_accepts = 0;

  double overall_rate() const {
    return proposals == 0 ? 0.0 : static_cast<double>(stage2_accepts) / proposals;
  }
};

// Two-stage random-walk Metropolis: accept first against the cheap factor,
// and only on success pay for the expensive ratio. Both tests are superlevel
// membership checks in disguise (u < a/b is log a > log b + log u), which
// routes them through the counted, recordable evaluation path.
template <class Rng>
Vector step_da_mh(const FactorizedTarget& target, const Vector& x, const SamplerConfig& config,
                  Rng& rng, EvalLedger& ledger, AcceptStats* stats = nullptr) {
  if (!std::holds_alternative<Lebesgue>(target.reference))
    throw std::invalid_argument("step_da_mh: random-walk proposal requires a Lebesgue reference");
  const double log_coarse_x = detail::eval_factor(target, Factor::kCoarse, x, ledger);
  if (ledger.recorder) ledger.recorder({Factor::kCoarse, x, log_coarse_x, false, 0.0, false});
  const double log_fine_x = detail::eval_factor(target, Factor::kFine, x, ledger);
  if (ledger.recorder) ledger.recorder({Factor::kFine, x, log_fine_x, false, 0.0, false});
  if (log_coarse_x == kNegInf || log_fine_x == kNegInf)
    throw std::domain_error("step_da_mh: current state is outside the support");

  Vector y(x);
  for (auto& yi : y) yi += config.mh_step * rng.normal();

  if (stats) stats->proposals += 1;
  const double u1 = rng.uniform01();
  if (!in_superlevel(target, Factor::kCoarse, y, log_coarse_x + std::log(u1), ledger)) return x;
  if (stats) stats->stage1_accepts += 1;

  const double u2 = rng.uniform01();
  if (!in_superlevel(target, Factor::kFine, y, log_fine_x + std::log(u2), ledger)) return x;
  if (stats) stats->stage2_accepts += 1;
  return y;
}

// Delayed acceptance ideal slice sampling: draw both levels, then draw exact
// samples of the reference measure restricted to the coarse slice until one
// lands in the fine slice. One fine evaluation per loop iteration.
template <class Rng>
Vector step_da_ideal(const FactorizedTarget& target, const Vector& x, const SamplerConfig& config,
                     Rng& rng, EvalLedger& ledger, AcceptStats* = nullptr) {
  if (!target.direct_slice_sampler)
    throw std::invalid_argument("step_da_ideal: target has no direct slice sampler");
  const Levels levels = draw_levels(target, x, rng, ledger);
  const auto unif = std::function<double()>([&rng] { return rng.uniform01(); });
  for (long i = 0; i < config.max_reject; ++i) {
    Vector y = target.direct_slice_sampler(levels.log_s, unif);
    if (in_superlevel(target, Factor::kFine, y, levels.log_t, ledger)) return y;
  }
  throw std::runtime_error("step_da_ideal: rejection loop exhausted after " +
                           std::to_string(config.max_reject) + " draws");
}

// Delayed acceptance elliptical slice sampling (Gaussian reference): one
// shrinkage pass over the ellipse angle with the cheap factor screened first.
template <class Rng>
Vector step_da_ess(const FactorizedTarget& target, const Vector& x, const SamplerConfig& config,
                   Rng& rng, EvalLedger& ledger, AcceptStats* = nullptr) {
  const auto* gauss = std::get_if<GaussianRef>(&target.reference);
  if (!gauss) throw std::invalid_argument("step_da_ess: requires a Gaussian reference measure");
  const Levels levels = draw_levels(target, x, rng, ledger);
  const Vector v = gauss->sample(rng);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);

  auto cheap = [&](double th) {
    return in_superlevel(target, Factor::kCoarse, ellipse_point(x, v, th), levels.log_s, ledger);
  };
  auto expensive = [&](double th) {
    return in_superlevel(target, Factor::kFine, ellipse_point(x, v, th), levels.log_t, ledger);
  };
  const double theta_acc = da_shrink(cheap, expensive, 0.0, theta,
                                     theta - 2.0 * std::numbers::pi, theta, rng,
                                     config.max_shrink);
  return ellipse_point(x, v, theta_acc);
}

// Delayed acceptance hit-and-run slice sampling (Lebesgue reference):
// stepping-out probes only the cheap factor along the random line; the
// shrinkage then settles on a point of the intersection slice.
template <class Rng>
Vector step_da_hruss(const FactorizedTarget& target, const Vector& x, const SamplerConfig& config,
                     Rng& rng, EvalLedger& ledger, AcceptStats* = nullptr) {
  if (!std::holds_alternative<Lebesgue>(target.reference))
    throw std::invalid_argument("step_da_hruss: requires the Lebesgue reference measure");
  const Levels levels = draw_levels(target, x, rng, ledger);
  const Vector v = sample_unit_sphere(target.dim, rng);

  auto line_point = [&](double p) {
    Vector y(x);
    axpy(p, v, y);
    return y;
  };
  auto cheap = [&](double p) {
    return in_superlevel(target, Factor::kCoarse, line_point(p), levels.log_s, ledger);
  };
  auto expensive = [&](double p) {
    return in_superlevel(target, Factor::kFine, line_point(p), levels.log_t, ledger);
  };

  const Bracket br = step_out(cheap, 0.0, config.w, rng, config.max_expand);
  const double p0 = rng.uniform(br.l, br.r);
  const double p_acc = da_shrink(cheap, expensive, 0.0, p0, br.l, br.r, rng, config.max_shrink);
  return line_point(p_acc);
}

// Delayed acceptance Gibbsian polar slice sampling (reference ||x||^{1-d} dx):
// a great-circle update of the direction at the current radius, then a ray
// update of the radius along the new direction, both with the delayed
// acceptance shrinkage.
template <class Rng>
Vector step_da_gpss(const FactorizedTarget& target, const Vector& x, const SamplerConfig& config,
                    Rng& rng, EvalLedger& ledger, AcceptStats* = nullptr) {
  if (!std::holds_alternative<PolarLebesgue>(target.reference))
    throw std::invalid_argument("step_da_gpss: requires the polar reference measure");
  if (target.dim < 2) throw std::invalid_argument("step_da_gpss: requires dim >= 2");
  const double r0 = norm(x);
  if (!(r0 > 0.0)) throw std::domain_error("step_da_gpss: state at the origin has no direction");
  const Vector v0 = scaled(x, 1.0 / r0);

  const Levels levels = draw_levels(target, x, rng, ledger);
  const Vector v_perp = sample_orth_sphere(v0, rng);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double u = rng.uniform01();

  auto circle_cheap = [&](double th) {
    return in_superlevel(target, Factor::kCoarse, scaled(ellipse_point(v0, v_perp, th), r0),
                         levels.log_s, ledger);
  };
  auto circle_expensive = [&](double th) {
    return in_superlevel(target, Factor::kFine, scaled(ellipse_point(v0, v_perp, th), r0),
                         levels.log_t, ledger);
  };
  const double theta_acc = da_shrink(circle_cheap, circle_expensive, 0.0, theta,
                                     theta - 2.0 * std::numbers::pi, theta, rng,
                                     config.max_shrink);
  const Vector v = ellipse_point(v0, v_perp, theta_acc);

  auto ray_cheap = [&](double r) {
    return in_superlevel(target, Factor::kCoarse, scaled(v, r), levels.log_s, ledger);
  };
  auto ray_expensive = [&](double r) {
    return in_superlevel(target, Factor::kFine, scaled(v, r), levels.log_t, ledger);
  };
  // Radial bracket seeded by the pre-drawn u, clamped at radius zero.
  const Bracket br = step_out_with(ray_cheap, r0, config.w, u, config.max_expand, 0.0);
  const double r_init = rng.uniform(br.l, br.r);
  const double r_acc =
      da_shrink(ray_cheap, ray_expensive, r0, r_init, br.l, br.r, rng, config.max_shrink);
  return scaled(v, r_acc);
}

}  // namespace dass
