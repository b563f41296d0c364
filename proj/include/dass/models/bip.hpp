#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dass/rng.hpp"
#include "dass/target.hpp"

namespace dass::models {

// One-dimensional elliptic inverse problem: infer the coefficients x of the
// log-conductivity expansion u(tau, x) = sqrt(2)/pi sum_k x_k sin(k pi tau)
// from three point observations of the solution q(tau, x) = 2 S_tau / S_1,
// where S_tau integrates exp(-u) from 0 to tau. The integrals are computed
// with the composite trapezoidal rule on the uniform grid of size h, which is
// the discretization knob the coarse factor turns.

inline double bip_u(double tau, const Vector& x) {
  double s = 0.0;
  for (std::size_t k = 1; k <= x.size(); ++k)
    s += x[k - 1] * std::sin(static_cast<double>(k) * std::numbers::pi * tau);
  return std::numbers::sqrt2 / std::numbers::pi * s;
}

// Precomputed sine table for one grid size; evaluating u on all nodes is then
// a single matrix-vector product.
class BipGrid {
 public:
  BipGrid(int d, double h) : d_(d), h_(h) {
    if (d < 1) throw std::invalid_argument("BipGrid: d must be >= 1");
    n_cells_ = cells_of(h);
    sin_.resize(static_cast<std::size_t>(n_cells_ + 1) * d);
    for (int i = 0; i <= n_cells_; ++i) {
      const double tau = static_cast<double>(i) * h_;
      for (int k = 1; k <= d_; ++k)
        sin_[static_cast<std::size_t>(i) * d_ + (k - 1)] =
            std::sin(static_cast<double>(k) * std::numbers::pi * tau);
    }
  }

  // Validates that 1/h is an integer power of two >= 4, so the observation
  // times 0.25, 0.5, 0.75 are grid nodes.
  static int cells_of(double h) {
    if (!(h > 0.0)) throw std::invalid_argument("bip: h must be positive");
    const double inv = 1.0 / h;
    const int n = static_cast<int>(std::lround(inv));
    if (n < 4 || (n & (n - 1)) != 0 || std::abs(inv - n) > 1e-9 * inv)
      throw std::invalid_argument("bip: 1/h must be an integer power of two >= 4");
    return n;
  }

  int cells() const { return n_cells_; }
  double h() const { return h_; }
  int d() const { return d_; }

  std::vector<double> u_on_nodes(const Vector& x) const {
    if (static_cast<int>(x.size()) != d_) throw std::invalid_argument("bip: coefficient dimension mismatch");
    std::vector<double> u(n_cells_ + 1, 0.0);
    const double scale = std::numbers::sqrt2 / std::numbers::pi;
    for (int i = 0; i <= n_cells_; ++i) {
      double s = 0.0;
      const double* row = sin_.data() + static_cast<std::size_t>(i) * d_;
      for (int k = 0; k < d_; ++k) s += row[k] * x[k];
      u[i] = scale * s;
    }
    return u;
  }

 private:
  int d_;
  double h_;
  int n_cells_;
  std::vector<double> sin_;
};

// Forward map F_h(x) = (q(0.25), q(0.5), q(0.75)) with q = 2 S_tau / S_1.
inline std::array<double, 3> bip_forward(const Vector& x, const BipGrid& grid) {
  const int n = grid.cells();
  const std::vector<double> u = grid.u_on_nodes(x);
  std::vector<double> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::exp(-u[i]);
  // cumulative trapezoid, read off at the quarter nodes
  std::array<double, 3> s_obs{};
  double s = 0.0;
  const int q = n / 4;
  for (int i = 1; i <= n; ++i) {
    s += 0.5 * (w[i - 1] + w[i]) * grid.h();
    if (i == q) s_obs[0] = s;
    if (i == 2 * q) s_obs[1] = s;
    if (i == 3 * q) s_obs[2] = s;
  }
  return {2.0 * s_obs[0] / s, 2.0 * s_obs[1] / s, 2.0 * s_obs[2] / s};
}

inline std::array<double, 3> bip_forward(const Vector& x, double h) {
  return bip_forward(x, BipGrid(static_cast<int>(x.size()), h));
}

struct BipModel {
  int d = 10;
  double sigma2 = 0.01;
  double h_ref = 0.001953125;  // 2^-9
  std::array<double, 3> delta{};
  std::shared_ptr<const BipGrid> grid_ref;

  static BipModel make(int d, double sigma2, double h_ref, std::array<double, 3> delta) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("bip: sigma2 must be positive");
    BipModel m;
    m.d = d;
    m.sigma2 = sigma2;
    m.h_ref = h_ref;
    m.delta = delta;
    m.grid_ref = std::make_shared<BipGrid>(d, h_ref);
    return m;
  }

  Vector prior_cov_diag() const {
    Vector c(d);
    for (int k = 1; k <= d; ++k) c[k - 1] = 1.0 / (static_cast<double>(k) * k);
    return c;
  }
};

inline double bip_log_likelihood(const Vector& x, const BipGrid& grid, const BipModel& model) {
  const std::array<double, 3> f = bip_forward(x, grid);
  double sq = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double r = model.delta[j] - f[j];
    sq += r * r;
  }
  return -sq / (2.0 * model.sigma2);
}

inline double bip_log_likelihood(const Vector& x, double h, const BipModel& model) {
  return bip_log_likelihood(x, BipGrid(model.d, h), model);
}

// Quantity of interest f(x) = int_0^1 exp(u(tau, x)) dtau on the reference grid.
inline double bip_qoi(const Vector& x, const BipGrid& grid) {
  const std::vector<double> u = grid.u_on_nodes(x);
  double s = 0.0;
  for (int i = 1; i <= grid.cells(); ++i)
    s += 0.5 * (std::exp(u[i - 1]) + std::exp(u[i])) * grid.h();
  return s;
}

struct BipData {
  std::uint64_t seed = 0;
  double sigma2 = 0.01;
  double h_ref = 0.001953125;
  Vector x_true;
  std::array<double, 3> delta{};
};

// Draws x_true from the prior N(0, diag k^-2) and observes the reference
// forward map under Gaussian noise. sigma2 = 0 is the exact-data testing mode.
inline BipData bip_generate_data(std::uint64_t seed, int d, double sigma2, double h_ref) {
  BipData data;
  data.seed = seed;
  data.sigma2 = sigma2;
  data.h_ref = h_ref;
  RngStream rng = RngStream(seed).derive("data");
  data.x_true.resize(d);
  for (int k = 1; k <= d; ++k) data.x_true[k - 1] = rng.normal() / static_cast<double>(k);
  const BipGrid grid(d, h_ref);
  const std::array<double, 3> f = bip_forward(data.x_true, grid);
  const double sigma = std::sqrt(sigma2);
  for (int j = 0; j < 3; ++j) data.delta[j] = f[j] + sigma * rng.normal();
  return data;
}

// Factorized posterior: coarse factor is the likelihood on the h grid, the
// fine ratio tops it up to the reference grid. Cost weights are grid-size
// ratios, normalized so one reference-grid solve costs 1.
inline FactorizedTarget bip_target(const BipModel& model, double h) {
  if (!(h > model.h_ref)) throw std::invalid_argument("bip_target: need h > h_ref");
  FactorizedTarget t;
  t.dim = model.d;
  t.reference = GaussianRef::diagonal(model.prior_cov_diag());
  auto grid_h = std::make_shared<BipGrid>(model.d, h);
  auto grid_ref = model.grid_ref;
  const double cells_ratio = static_cast<double>(grid_h->cells()) / grid_ref->cells();
  t.coarse = DensityFactor{
      [model, grid_h](const Vector& x) { return bip_log_likelihood(x, *grid_h, model); }, model.d,
      cells_ratio};
  t.fine_ratio = DensityFactor{[model, grid_h, grid_ref](const Vector& x) {
                                 return bip_log_likelihood(x, *grid_ref, model) -
                                        bip_log_likelihood(x, *grid_h, model);
                               },
                               model.d, 1.0 + cells_ratio};
  return t;
}

inline FactorizedTarget bip_plain_target(const BipModel& model) {
  auto grid_ref = model.grid_ref;
  DensityFactor full{
      [model, grid_ref](const Vector& x) { return bip_log_likelihood(x, *grid_ref, model); },
      model.d, 1.0};
  return trivial_factorization(std::move(full), GaussianRef::diagonal(model.prior_cov_diag()));
}

}  // namespace dass::models
