#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dass/kernels.hpp"
#include "dass/rng.hpp"
#include "dass/target.hpp"

namespace dass {

enum class SamplerKind { kDaMh, kDaIdeal, kEss, kDaEss, kHruss, kDaHruss, kGpss, kDaGpss };

inline const char* to_string(SamplerKind k) {
  switch (k) {
    case SamplerKind::kDaMh: return "da_mh";
    case SamplerKind::kDaIdeal: return "da_ideal";
    case SamplerKind::kEss: return "ess";
    case SamplerKind::kDaEss: return "da_ess";
    case SamplerKind::kHruss: return "hruss";
    case SamplerKind::kDaHruss: return "da_hruss";
    case SamplerKind::kGpss: return "gpss";
    case SamplerKind::kDaGpss: return "da_gpss";
  }
  return "?";
}

inline SamplerKind sampler_from_string(const std::string& s) {
  for (SamplerKind k : {SamplerKind::kDaMh, SamplerKind::kDaIdeal, SamplerKind::kEss,
                        SamplerKind::kDaEss, SamplerKind::kHruss, SamplerKind::kDaHruss,
                        SamplerKind::kGpss, SamplerKind::kDaGpss})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown sampler: " + s);
}

// The plain samplers are the delayed acceptance kernels run on a trivially
// factorized target, so they share step functions with their DA versions.
inline bool is_delayed_acceptance(SamplerKind k) {
  return k != SamplerKind::kEss && k != SamplerKind::kHruss && k != SamplerKind::kGpss;
}

inline SamplerKind plain_counterpart(SamplerKind k) {
  switch (k) {
    case SamplerKind::kDaEss: return SamplerKind::kEss;
    case SamplerKind::kDaHruss: return SamplerKind::kHruss;
    case SamplerKind::kDaGpss: return SamplerKind::kGpss;
    default: return k;  // da_mh / da_ideal degrade through the trivial factorization
  }
}

using TransitionKernel =
    std::function<Vector(const FactorizedTarget&, const Vector&, const SamplerConfig&, RngStream&,
                         EvalLedger&, AcceptStats*)>;

inline TransitionKernel make_kernel(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kDaMh:
      return [](const FactorizedTarget& t, const Vector& x, const SamplerConfig& c, RngStream& r,
                EvalLedger& l, AcceptStats* s) { return step_da_mh(t, x, c, r, l, s); };
    case SamplerKind::kDaIdeal:
      return [](const FactorizedTarget& t, const Vector& x, const SamplerConfig& c, RngStream& r,
                EvalLedger& l, AcceptStats* s) { return step_da_ideal(t, x, c, r, l, s); };
    case SamplerKind::kEss:
    case SamplerKind::kDaEss:
      return [](const FactorizedTarget& t, const Vector& x, const SamplerConfig& c, RngStream& r,
                EvalLedger& l, AcceptStats* s) { return step_da_ess(t, x, c, r, l, s); };
    case SamplerKind::kHruss:
    case SamplerKind::kDaHruss:
      return [](const FactorizedTarget& t, const Vector& x, const SamplerConfig& c, RngStream& r,
                EvalLedger& l, AcceptStats* s) { return step_da_hruss(t, x, c, r, l, s); };
    case SamplerKind::kGpss:
    case SamplerKind::kDaGpss:
      return [](const FactorizedTarget& t, const Vector& x, const SamplerConfig& c, RngStream& r,
                EvalLedger& l, AcceptStats* s) { return step_da_gpss(t, x, c, r, l, s); };
  }
  throw std::invalid_argument("make_kernel: unknown sampler kind");
}

// Sample matrix plus everything needed for the cost and accuracy accounting
// of one run. The ledger covers burn-in and kept iterations.
struct ChainResult {
  std::vector<double> samples;  // row-major, n x dim
  int dim = 0;
  long n = 0;
  long burn_in = 0;
  EvalLedger ledger;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  AcceptStats accept;

  double state(long row, int col) const { return samples[static_cast<std::size_t>(row) * dim + col]; }

  Vector row(long i) const {
    const auto* p = samples.data() + static_cast<std::size_t>(i) * dim;
    return Vector(p, p + dim);
  }
};

// Runs burn_in + n transitions from x0, keeping the last n states. Burn-in
// and sampling own separate named sub-streams of the seed, so the kept chain
// is insensitive to how many draws the burn-in consumed.
inline ChainResult run_chain(const TransitionKernel& kernel, const FactorizedTarget& target,
                             Vector x0, long n, long burn_in, std::uint64_t seed,
                             const SamplerConfig& config) {
  config.validate();
  if (n < 0 || burn_in < 0) throw std::invalid_argument("run_chain: negative iteration count");
  if (static_cast<int>(x0.size()) != target.dim)
    throw std::invalid_argument("run_chain: x0 dimension mismatch");

  ChainResult result;
  result.dim = target.dim;
  result.n = n;
  result.burn_in = burn_in;
  result.seed = seed;
  result.samples.reserve(static_cast<std::size_t>(n) * target.dim);

  const auto t0 = std::chrono::steady_clock::now();
  Vector x = std::move(x0);
  RngStream root(seed);
  RngStream rng_burn = root.derive("burnin");
  RngStream rng_main = root.derive("chain");
  for (long i = 0; i < burn_in + n; ++i) {
    const bool burning = i < burn_in;
    try {
      x = kernel(target, x, config, burning ? rng_burn : rng_main, result.ledger, &result.accept);
    } catch (const std::exception& e) {
      throw std::runtime_error("run_chain: iteration " + std::to_string(i) +
                               (burning ? " (burn-in): " : ": ") + e.what());
    }
    if (!burning) result.samples.insert(result.samples.end(), x.begin(), x.end());
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace dass
