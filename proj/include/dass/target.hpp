#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "dass/reference.hpp"
#include "dass/vec.hpp"

namespace dass {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

enum class Factor { kCoarse, kFine };

// Record of one counted factor evaluation. Only produced when a recorder is
// attached to the ledger; used by tests to assert the delayed-acceptance
// evaluation ordering.
struct EvalRecord {
  Factor factor;
  Vector point;
  double log_value;
  bool is_membership_check;
  double log_threshold;  // meaningful only for membership checks
  bool passed;           // meaningful only for membership checks
};

// Monotone evaluation counters, the cost model of every run. Every coarse or
// fine density evaluation is routed through note(), so the counters are exact.
struct EvalLedger {
  std::uint64_t n_coarse = 0;
  std::uint64_t n_fine = 0;
  std::function<void(const EvalRecord&)> recorder;  // optional ordering trace

  void note(Factor f) { (f == Factor::kCoarse ? n_coarse : n_fine) += 1; }
};

// One multiplicative factor of the target density, evaluated in the log
// domain. -inf is the out-of-support sentinel; any other non-finite value is
// a model error.
struct DensityFactor {
  std::function<double(const Vector&)> log_eval;
  int dim = 0;
  double cost_weight = 1.0;
};

// Slice thresholds of one transition, kept as logs.
struct Levels {
  double log_s;  // coarse threshold
  double log_t;  // fine threshold
};

// Unnormalized target rho = rho_hat * rho_app over a reference measure,
// with the cheap factor rho_app (coarse) separated from the expensive ratio
// rho_hat (fine). Immutable after construction.
struct FactorizedTarget {
  int dim = 0;
  ReferenceMeasure reference;
  DensityFactor coarse;      // log rho_app
  DensityFactor fine_ratio;  // log rho_hat
  // Exact sampler of the normalized restriction of the reference measure to
  // {rho_app > exp(log_s)}. Present only when such superlevel sets are
  // analytically tractable; draws its randomness through the supplied
  // uniform source.
  std::function<Vector(double log_s, const std::function<double()>& unif01)> direct_slice_sampler;
};

namespace detail {

inline double eval_factor(const FactorizedTarget& target, Factor which, const Vector& x,
                          EvalLedger& ledger) {
  const DensityFactor& f = which == Factor::kCoarse ? target.coarse : target.fine_ratio;
  if (static_cast<int>(x.size()) != target.dim)
    throw std::invalid_argument("target: point dimension mismatch");
  const double v = f.log_eval(x);
  ledger.note(which);
  if (std::isnan(v) || v == std::numeric_limits<double>::infinity())
    throw std::domain_error("target: factor returned a non-finite value other than -inf");
  return v;
}

}  // namespace detail

// log rho(x) = log rho_app(x) + log rho_hat(x); counts one evaluation of each
// factor.
inline double log_rho(const FactorizedTarget& target, const Vector& x, EvalLedger& ledger) {
  const double c = detail::eval_factor(target, Factor::kCoarse, x, ledger);
  if (ledger.recorder) ledger.recorder({Factor::kCoarse, x, c, false, 0.0, false});
  const double f = detail::eval_factor(target, Factor::kFine, x, ledger);
  if (ledger.recorder) ledger.recorder({Factor::kFine, x, f, false, 0.0, false});
  return c + f;
}

// Strict superlevel-set membership log factor(y) > log_threshold; ties and
// the -inf sentinel resolve to "not in the set". Counts one evaluation.
inline bool in_superlevel(const FactorizedTarget& target, Factor which, const Vector& y,
                          double log_threshold, EvalLedger& ledger) {
  const double v = detail::eval_factor(target, which, y, ledger);
  const bool pass = v > log_threshold;
  if (ledger.recorder) ledger.recorder({which, y, v, true, log_threshold, pass});
  return pass;
}

// Draws the per-transition slice thresholds s ~ U(0, rho_app(x)) and
// t ~ U(0, rho_hat(x)) in the log domain: log level = log factor(x) + log u.
// Consumes exactly two uniforms and counts one evaluation of each factor.
template <class Rng>
Levels draw_levels(const FactorizedTarget& target, const Vector& x, Rng& rng,
                   EvalLedger& ledger) {
  const double log_coarse = detail::eval_factor(target, Factor::kCoarse, x, ledger);
  if (ledger.recorder) ledger.recorder({Factor::kCoarse, x, log_coarse, false, 0.0, false});
  const double log_fine = detail::eval_factor(target, Factor::kFine, x, ledger);
  if (ledger.recorder) ledger.recorder({Factor::kFine, x, log_fine, false, 0.0, false});
  if (log_coarse == kNegInf || log_fine == kNegInf)
    throw std::domain_error("draw_levels: state is outside the support");
  return Levels{log_coarse + std::log(rng.uniform01()), log_fine + std::log(rng.uniform01())};
}

// Degenerate factorization rho_app := rho, rho_hat := 1. Any delayed
// acceptance sampler run on the result follows the transition law of its
// plain counterpart, and n_coarse counts the evaluations of rho. The fine
// factor carries cost weight 0 so plain runs report coarse-only cost.
inline FactorizedTarget trivial_factorization(DensityFactor log_rho_factor,
                                              ReferenceMeasure reference) {
  FactorizedTarget t;
  t.dim = dim_of(reference);
  if (log_rho_factor.dim != t.dim)
    throw std::invalid_argument("trivial_factorization: factor/reference dimension mismatch");
  t.reference = std::move(reference);
  t.coarse = std::move(log_rho_factor);
  t.fine_ratio = DensityFactor{[](const Vector&) { return 0.0; }, t.dim, 0.0};
  return t;
}

}  // namespace dass
