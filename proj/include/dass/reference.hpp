#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "dass/vec.hpp"

namespace dass {

// Reference measures the samplers are formulated against: the d-dimensional
// Lebesgue measure, a centered Gaussian N(0,C), or the polar measure
// ||x||^{1-d} dx used by Gibbsian polar slice sampling.

struct Lebesgue {
  int dim = 1;
};

struct PolarLebesgue {
  int dim = 2;  // requires dim >= 2
};

class GaussianRef {
 public:
  // Diagonal covariance, supplied as the vector of diagonal entries.
  static GaussianRef diagonal(Vector cov_diag) {
    GaussianRef g;
    g.dim_ = static_cast<int>(cov_diag.size());
    if (g.dim_ < 1) throw std::invalid_argument("GaussianRef: empty covariance");
    g.diag_sd_.resize(cov_diag.size());
    double log_det = 0.0;
    for (std::size_t i = 0; i < cov_diag.size(); ++i) {
      if (!(cov_diag[i] > 0.0))
        throw std::invalid_argument("GaussianRef: nonpositive diagonal covariance entry");
      g.diag_sd_[i] = std::sqrt(cov_diag[i]);
      log_det += std::log(cov_diag[i]);
    }
    g.log_norm_ = -0.5 * (g.dim_ * std::log(2.0 * std::numbers::pi) + log_det);
    return g;
  }

  // Dense SPD covariance, supplied row-major; factorized on construction.
  static GaussianRef dense(int dim, const std::vector<double>& cov_row_major) {
    if (dim < 1 || cov_row_major.size() != static_cast<std::size_t>(dim) * dim)
      throw std::invalid_argument("GaussianRef: bad dense covariance shape");
    GaussianRef g;
    g.dim_ = dim;
    g.chol_ = cholesky_lower(dim, cov_row_major);
    double log_det = 0.0;
    for (int i = 0; i < dim; ++i) log_det += 2.0 * std::log(g.chol_[i * dim + i]);
    g.log_norm_ = -0.5 * (dim * std::log(2.0 * std::numbers::pi) + log_det);
    return g;
  }

  int dim() const { return dim_; }

  // v = C^{1/2} z for a vector of standard normals z.
  template <class Rng>
  Vector sample(Rng& rng) const {
    Vector z(dim_);
    for (auto& zi : z) zi = rng.normal();
    if (!diag_sd_.empty()) {
      for (int i = 0; i < dim_; ++i) z[i] *= diag_sd_[i];
      return z;
    }
    Vector v(dim_, 0.0);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j <= i; ++j) v[i] += chol_[i * dim_ + j] * z[j];
    return v;
  }

  // log N(x; 0, C)
  double log_density(const Vector& x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw std::invalid_argument("GaussianRef::log_density: dimension mismatch");
    double quad = 0.0;
    if (!diag_sd_.empty()) {
      for (int i = 0; i < dim_; ++i) {
        const double w = x[i] / diag_sd_[i];
        quad += w * w;
      }
    } else {
      // Solve L w = x forward, quad = ||w||^2.
      Vector w(x);
      for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < i; ++j) w[i] -= chol_[i * dim_ + j] * w[j];
        w[i] /= chol_[i * dim_ + i];
        quad += w[i] * w[i];
      }
    }
    return log_norm_ - 0.5 * quad;
  }

 private:
  GaussianRef() = default;

  static std::vector<double> cholesky_lower(int n, const std::vector<double>& a) {
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) {
        double s = a[i * n + j];
        for (int k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
        if (i == j) {
          if (!(s > 0.0)) throw std::invalid_argument("GaussianRef: covariance not positive definite");
          l[i * n + i] = std::sqrt(s);
        } else {
          l[i * n + j] = s / l[j * n + j];
        }
      }
    }
    return l;
  }

  int dim_ = 0;
  Vector diag_sd_;             // set for diagonal covariances
  std::vector<double> chol_;   // lower factor, set for dense covariances
  double log_norm_ = 0.0;
};

using ReferenceMeasure = std::variant<Lebesgue, GaussianRef, PolarLebesgue>;

inline int dim_of(const ReferenceMeasure& ref) {
  return std::visit(
      [](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, GaussianRef>)
          return r.dim();
        else
          return r.dim;
      },
      ref);
}

inline ReferenceMeasure make_lebesgue(int dim) {
  if (dim < 1) throw std::invalid_argument("Lebesgue: dim must be >= 1");
  return Lebesgue{dim};
}

inline ReferenceMeasure make_polar(int dim) {
  if (dim < 2) throw std::invalid_argument("PolarLebesgue: dim must be >= 2");
  return PolarLebesgue{dim};
}

}  // namespace dass
