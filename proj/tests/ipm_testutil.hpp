#pragma once

#include "tropipm/ipm.hpp"
#include "tropipm/path.hpp"
#include "tropipm/reports.hpp"

#include <random>

namespace tropipm::testutil {

/// Strictly interior point of the instantiated counterexample at parameter t:
/// a lift of a randomly chosen path point, pushed inward by the strict
/// perturbation direction plus a small random shift; rejection-sampled
/// against the exact slack test.
inline FVec random_interior_point(std::mt19937& rng, int n, const LogBarrier& barrier,
                                  const BigFloat& t) {
  std::uniform_int_distribution<long> lam(0, (2 * cex_u(n)).convert_to<long>() * 4);
  std::uniform_int_distribution<long> jitter(0, 63);
  for (int tries = 0; tries < 1000; ++tries) {
    const Rat lambda(lam(rng), 4);
    const TropVector base = cex_tropical_path_point(n, lambda);
    FVec x(static_cast<size_t>(n));
    Rat weight = rat_pow(Rat(2), n - 1);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const Rat exponent =
          base[i].value() - Rat(jitter(rng), 256) - Rat(1, 8) * weight;
      x[static_cast<size_t>(i)] = pow_rat(t, exponent);
      weight /= 2;
    }
    if (ok && barrier.strictly_feasible(x)) return x;
  }
  throw std::runtime_error("random_interior_point: rejection sampling failed");
}

/// Point at H(center)-distance about `radius` from `center`: center + r·L^-T w
/// for the Cholesky factor L of H(center) and a random unit-ish direction w.
inline FVec ellipsoid_sample(std::mt19937& rng, const LogBarrier& barrier, const FVec& center,
                             double radius) {
  const FMat H = barrier.hessian(center);
  const auto L = cholesky(H);
  if (!L) throw std::runtime_error("ellipsoid_sample: Hessian not positive definite");
  const size_t n = center.size();
  std::normal_distribution<double> gauss(0.0, 1.0);
  FVec w(n);
  double norm2 = 0;
  for (size_t i = 0; i < n; ++i) {
    const double g = gauss(rng);
    w[i] = BigFloat(g);
    norm2 += g * g;
  }
  const BigFloat scale = BigFloat(radius) / BigFloat(std::sqrt(norm2) + 1e-12);
  // Back substitution: solve L^T z = w.
  FVec z(n, BigFloat(0));
  for (size_t ii = n; ii-- > 0;) {
    BigFloat v = w[ii];
    for (size_t k = ii + 1; k < n; ++k) v -= (*L)[k][ii] * z[k];
    z[ii] = v / (*L)[ii][ii];
  }
  FVec out = center;
  for (size_t i = 0; i < n; ++i) out[i] += scale * z[i];
  return out;
}

}  // namespace tropipm::testutil
