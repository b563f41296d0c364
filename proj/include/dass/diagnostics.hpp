#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace dass {

inline constexpr int kMaxAutocovLag = 10000;

// Biased (1/n normalized) sample autocovariances at lags 0..max_lag.
inline std::vector<double> autocovariance(const std::vector<double>& series, int max_lag) {
  const long n = static_cast<long>(series.size());
  if (n < 2) throw std::invalid_argument("autocovariance: need at least two values");
  if (max_lag < 0 || max_lag >= n) throw std::invalid_argument("autocovariance: max_lag out of range");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> gamma(max_lag + 1, 0.0);
  for (int lag = 0; lag <= max_lag; ++lag) {
    double s = 0.0;
    for (long k = 0; k + lag < n; ++k) s += (series[k] - mean) * (series[k + lag] - mean);
    gamma[lag] = s / static_cast<double>(n);
  }
  return gamma;
}

// Internals of the integrated-autocorrelation estimate with Geyer's initial
// positive sequence truncation: consecutive autocorrelation pairs
// (rho_{2m} + rho_{2m+1}) are summed while they stay positive.
struct GeyerResult {
  double tau;                     // integrated autocorrelation time (clamped >= 1/2)
  int truncation_lag;             // even; first lag of the last included pair
  std::vector<double> pair_sums;  // the included, all-positive pair sums
};

inline GeyerResult geyer_iact(const std::vector<double>& series) {
  const long n = static_cast<long>(series.size());
  if (n < 2) throw std::invalid_argument("geyer_iact: need at least two values");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  const int max_lag = static_cast<int>(std::min<long>(n - 1, kMaxAutocovLag));

  auto gamma_at = [&](int lag) {
    double s = 0.0;
    for (long k = 0; k + lag < n; ++k) s += (series[k] - mean) * (series[k + lag] - mean);
    return s / static_cast<double>(n);
  };
  const double gamma0 = gamma_at(0);
  if (!(gamma0 > 0.0)) throw std::invalid_argument("geyer_iact: constant series");

  GeyerResult out;
  out.truncation_lag = 0;
  double rho_sum = 0.0;  // sum of rho_1 .. rho_L over included pairs
  for (int m = 0;; ++m) {
    const int lag_even = 2 * m;
    const int lag_odd = 2 * m + 1;
    if (lag_odd > max_lag) break;
    const double pair =
        (lag_even == 0 ? 1.0 : gamma_at(lag_even) / gamma0) + gamma_at(lag_odd) / gamma0;
    if (!(pair > 0.0)) break;
    out.pair_sums.push_back(pair);
    out.truncation_lag = lag_even;
    rho_sum += pair;
  }
  // tau = 1 + 2 sum_{j>=1} rho_j = -1 + 2 * sum of included pairs.
  out.tau = std::max(-1.0 + 2.0 * rho_sum, 0.5);
  return out;
}

// Effective sample size n / (1 + 2 sum of autocorrelations), Geyer-truncated
// and clamped to (0, 2n].
inline double ess(const std::vector<double>& series) {
  const GeyerResult g = geyer_iact(series);
  const double n = static_cast<double>(series.size());
  return std::min(n / g.tau, 2.0 * n);
}

// Asymptotic variance of the path average estimator: gamma_0 * tau, i.e.
// gamma_0 * n / n_eff, tying the two reported quantities together.
inline double asymptotic_variance(const std::vector<double>& series) {
  const GeyerResult g = geyer_iact(series);
  const long n = static_cast<long>(series.size());
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  double gamma0 = 0.0;
  for (double v : series) gamma0 += (v - mean) * (v - mean);
  gamma0 /= static_cast<double>(n);
  return gamma0 * g.tau;
}

// Sup distance between the empirical CDF of the sample and a reference CDF,
// evaluated at the sorted sample points.
inline double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  const std::size_t n = sample.size();
  if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = cdf(sample[i]);
    d = std::max(d, std::abs(c - static_cast<double>(i + 1) / n));
    d = std::max(d, std::abs(c - static_cast<double>(i) / n));
  }
  return d;
}

enum class CostMode { kWall, kWeightedEvals };

struct DiagnosticsReport {
  long n = 0;
  double n_eff = 0.0;
  double asym_var = 0.0;
  double mean = 0.0;
  double wall_seconds = 0.0;
  std::uint64_t n_coarse = 0;
  std::uint64_t n_fine = 0;
  double cost_weight_coarse = 1.0;
  double cost_weight_fine = 1.0;

  double weighted_evals() const {
    return cost_weight_coarse * static_cast<double>(n_coarse) +
           cost_weight_fine * static_cast<double>(n_fine);
  }
};

inline DiagnosticsReport diagnostics_report(const std::vector<double>& f_series,
                                            double wall_seconds, std::uint64_t n_coarse,
                                            std::uint64_t n_fine, double cost_weight_coarse,
                                            double cost_weight_fine) {
  DiagnosticsReport r;
  r.n = static_cast<long>(f_series.size());
  r.n_eff = ess(f_series);
  r.asym_var = asymptotic_variance(f_series);
  double m = 0.0;
  for (double v : f_series) m += v;
  r.mean = r.n > 0 ? m / static_cast<double>(r.n) : 0.0;
  r.wall_seconds = wall_seconds;
  r.n_coarse = n_coarse;
  r.n_fine = n_fine;
  r.cost_weight_coarse = cost_weight_coarse;
  r.cost_weight_fine = cost_weight_fine;
  return r;
}

// Effective independent samples per unit cost of the delayed acceptance run
// relative to its plain baseline:
// (n_eff_da / n_eff_plain) * (cost_plain / cost_da).
inline double relative_efficiency(const DiagnosticsReport& da, const DiagnosticsReport& plain,
                                  CostMode mode) {
  const double cost_da = mode == CostMode::kWall ? da.wall_seconds : da.weighted_evals();
  const double cost_plain = mode == CostMode::kWall ? plain.wall_seconds : plain.weighted_evals();
  if (!(cost_da > 0.0) || !(cost_plain > 0.0))
    throw std::invalid_argument("relative_efficiency: nonpositive cost");
  if (!(plain.n_eff > 0.0)) throw std::invalid_argument("relative_efficiency: baseline n_eff is zero");
  return (da.n_eff / plain.n_eff) * (cost_plain / cost_da);
}

}  // namespace dass
