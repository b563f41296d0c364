#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "dass/vec.hpp"

namespace dass {

// Uniform direction on the unit sphere S_{d-1}: normalized standard normal
// vector. For dim = 1 this is a fair +-1 coin.
template <class Rng>
Vector sample_unit_sphere(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("sample_unit_sphere: dim must be >= 1");
  Vector v(dim);
  double n = 0.0;
  do {
    for (auto& vi : v) vi = rng.normal();
    n = norm(v);
  } while (n == 0.0);
  for (auto& vi : v) vi /= n;
  return v;
}

// Uniform direction on the sub-sphere orthogonal to the unit vector v0:
// project a standard normal vector onto the orthogonal complement and
// normalize, retrying on a degenerate residual.
template <class Rng>
Vector sample_orth_sphere(const Vector& v0, Rng& rng) {
  const int dim = static_cast<int>(v0.size());
  if (dim < 2) throw std::invalid_argument("sample_orth_sphere: dim must be >= 2");
  if (std::abs(norm(v0) - 1.0) > 1e-9)
    throw std::invalid_argument("sample_orth_sphere: v0 is not a unit vector");
  Vector z(dim);
  while (true) {
    for (auto& zi : z) zi = rng.normal();
    const double proj = dot(v0, z);
    axpy(-proj, v0, z);
    const double n = norm(z);
    if (n > 1e-12) {
      for (auto& zi : z) zi /= n;
      return z;
    }
  }
}

// Point on the ellipse through x with auxiliary direction v:
// p(x, v, theta) = cos(theta) x + sin(theta) v.
inline Vector ellipse_point(const Vector& x, const Vector& v, double theta) {
  if (x.size() != v.size()) throw std::invalid_argument("ellipse_point: dimension mismatch");
  const double c = std::cos(theta), s = std::sin(theta);
  Vector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = c * x[i] + s * v[i];
  return y;
}

// One-dimensional search interval of a live shrinkage loop. The anchor is the
// coordinate of the current chain state and stays strictly inside.
struct Bracket {
  double l;
  double r;
  double anchor;
};

// Delayed acceptance shrinkage: candidates are tested against the cheap
// predicate first and against the expensive one only after the cheap test
// passed. Each rejection moves the bracket edge on the candidate's side of
// the anchor to the candidate and the next candidate is drawn uniformly from
// the remaining interval. The anchor satisfies both predicates by
// construction of the level draws, so it can never be cut off.
//
// The entry candidate z0 may sit on the bracket boundary (the elliptical
// samplers enter with z0 = r); every subsequently drawn candidate lies
// strictly inside, so the width decreases strictly on each later rejection.
template <class Rng, class CheapPred, class ExpensivePred>
double da_shrink(CheapPred&& cheap, ExpensivePred&& expensive, double anchor, double z0,
                 double l, double r, Rng& rng, int max_shrink) {
  if (!(l <= anchor && anchor <= r))
    throw std::invalid_argument("da_shrink: anchor outside the initial bracket");
  double z = z0;
  for (int i = 0; i <= max_shrink; ++i) {
    if (cheap(z) && expensive(z)) return z;
    if (z < anchor)
      l = z;
    else
      r = z;
    z = rng.uniform(l, r);
  }
  throw std::runtime_error("da_shrink: no acceptable point after " + std::to_string(max_shrink) +
                           " shrink steps (pathological target or violated preconditions)");
}

// Stepping-out around the anchor with the placement uniform u supplied by the
// caller: place an interval of length w over the anchor, then push each edge
// outward in steps of w until it leaves the set described by pred. With a
// lower bound (the radial variant) the left edge is clamped and expansion
// stops at the clamp.
template <class Pred>
Bracket step_out_with(Pred&& pred, double anchor, double w, double u, int max_expand,
                      std::optional<double> lower_bound = std::nullopt) {
  if (!(w > 0.0)) throw std::invalid_argument("step_out: step size must be positive");
  double l = anchor - u * w;
  double r = l + w;
  if (lower_bound) l = std::max(l, *lower_bound);

  int steps = 0;
  while ((!lower_bound || l > *lower_bound) && pred(l)) {
    l -= w;
    if (lower_bound) l = std::max(l, *lower_bound);
    if (++steps > max_expand)
      throw std::runtime_error("step_out: lower expansion exceeded max_expand (unbounded slice?)");
  }
  steps = 0;
  while (pred(r)) {
    r += w;
    if (++steps > max_expand)
      throw std::runtime_error("step_out: upper expansion exceeded max_expand (unbounded slice?)");
  }
  return Bracket{l, r, anchor};
}

// Stepping-out drawing its own placement uniform; consumes exactly one.
template <class Rng, class Pred>
Bracket step_out(Pred&& pred, double anchor, double w, Rng& rng, int max_expand,
                 std::optional<double> lower_bound = std::nullopt) {
  return step_out_with(pred, anchor, w, rng.uniform01(), max_expand, lower_bound);
}

}  // namespace dass
