#include "tropipm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropipm {

BigFloat dot(const FVec& a, const FVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  BigFloat acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

FVec mat_vec(const FMat& A, const FVec& x) {
  FVec out(A.size(), BigFloat(0));
  for (size_t i = 0; i < A.size(); ++i) out[i] = dot(A[i], x);
  return out;
}

std::optional<FMat> cholesky(const FMat& H) {
  const size_t n = H.size();
  FMat L(n, FVec(n, BigFloat(0)));
  for (size_t j = 0; j < n; ++j) {
    BigFloat d = H[j][j];
    for (size_t k = 0; k < j; ++k) d -= L[j][k] * L[j][k];
    if (d <= 0) return std::nullopt;
    L[j][j] = sqrt(d);
    for (size_t i = j + 1; i < n; ++i) {
      BigFloat v = H[i][j];
      for (size_t k = 0; k < j; ++k) v -= L[i][k] * L[j][k];
      L[i][j] = v / L[j][j];
    }
  }
  return L;
}

FVec cholesky_solve(const FMat& L, const FVec& rhs) {
  const size_t n = L.size();
  FVec y(n, BigFloat(0));
  for (size_t i = 0; i < n; ++i) {
    BigFloat v = rhs[i];
    for (size_t k = 0; k < i; ++k) v -= L[i][k] * y[k];
    y[i] = v / L[i][i];
  }
  FVec x(n, BigFloat(0));
  for (size_t ii = n; ii-- > 0;) {
    BigFloat v = y[ii];
    for (size_t k = ii + 1; k < n; ++k) v -= L[k][ii] * x[k];
    x[ii] = v / L[ii][ii];
  }
  return x;
}

std::optional<FVec> solve_spd(const FMat& H, const FVec& rhs, BigFloat* residual_inf) {
  auto L = cholesky(H);
  if (!L) return std::nullopt;
  FVec x = cholesky_solve(*L, rhs);
  if (residual_inf) {
    FVec r = mat_vec(H, x);
    BigFloat worst(0);
    for (size_t i = 0; i < r.size(); ++i) {
      BigFloat e = abs(r[i] - rhs[i]);
      if (e > worst) worst = e;
    }
    *residual_inf = worst;
  }
  return x;
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form.
void tridiagonalize(FMat A, FVec& diag, FVec& off) {
  const size_t n = A.size();
  diag.assign(n, BigFloat(0));
  off.assign(n > 0 ? n - 1 : 0, BigFloat(0));
  for (size_t k = 0; k + 2 < n; ++k) {
    BigFloat norm2(0);
    for (size_t i = k + 1; i < n; ++i) norm2 += A[i][k] * A[i][k];
    if (norm2 == 0) continue;
    BigFloat alpha = sqrt(norm2);
    if (A[k + 1][k] > 0) alpha = -alpha;
    FVec v(n, BigFloat(0));
    v[k + 1] = A[k + 1][k] - alpha;
    for (size_t i = k + 2; i < n; ++i) v[i] = A[i][k];
    BigFloat vnorm2(0);
    for (size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0) continue;
    // A <- P A P with P = I - 2 v v^T / (v^T v).
    FVec w = mat_vec(A, v);
    BigFloat beta = BigFloat(2) / vnorm2;
    BigFloat coef = dot(v, w) * beta * beta / 2;
    for (size_t i = 0; i < n; ++i) {
      BigFloat pi = beta * w[i] - coef * v[i];
      for (size_t j = 0; j < n; ++j) {
        A[i][j] -= pi * v[j] + v[i] * (beta * w[j] - coef * v[j]);
      }
    }
  }
  for (size_t i = 0; i < n; ++i) diag[i] = A[i][i];
  for (size_t i = 0; i + 1 < n; ++i) off[i] = A[i + 1][i];
}

// Number of eigenvalues of the tridiagonal matrix strictly below x,
// from the signs of the LDL^T pivots.
size_t sturm_count(const FVec& diag, const FVec& off, const BigFloat& x) {
  size_t count = 0;
  BigFloat d(1);
  const BigFloat tiny = ldexp(BigFloat(1), -static_cast<int>(current_precision_bits()));
  for (size_t i = 0; i < diag.size(); ++i) {
    BigFloat q = diag[i] - x;
    if (i > 0) {
      if (abs(d) < tiny) d = d >= 0 ? tiny : -tiny;
      q -= off[i - 1] * off[i - 1] / d;
    }
    if (q < 0) ++count;
    d = q;
  }
  return count;
}

}  // namespace

BigFloat min_eigenvalue_sym(const FMat& A, unsigned bits) {
  const size_t n = A.size();
  if (n == 0) throw std::invalid_argument("min_eigenvalue_sym: empty matrix");
  FVec diag, off;
  tridiagonalize(A, diag, off);
  // Gershgorin bracket.
  BigFloat lo = diag[0], hi = diag[0];
  for (size_t i = 0; i < n; ++i) {
    BigFloat r(0);
    if (i > 0) r += abs(off[i - 1]);
    if (i + 1 < n) r += abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  BigFloat width_target = (hi - lo) * ldexp(BigFloat(1), -static_cast<int>(bits));
  while (hi - lo > width_target) {
    BigFloat mid = (lo + hi) / 2;
    if (sturm_count(diag, off, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2;
}

BigFloat inf_norm(const FMat& A) {
  BigFloat best(0);
  for (const FVec& row : A) {
    BigFloat s(0);
    for (const BigFloat& v : row) s += abs(v);
    if (s > best) best = s;
  }
  return best;
}

std::optional<std::vector<Rat>> solve_linear_rational(std::vector<std::vector<Rat>> M,
                                                      std::vector<Rat> rhs) {
  const size_t n = M.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && M[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(M[pivot], M[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rat p = M[col][col];
    for (size_t j = col; j < n; ++j) M[col][j] /= p;
    rhs[col] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || M[i][col] == 0) continue;
      const Rat f = M[i][col];
      for (size_t j = col; j < n; ++j) M[i][j] -= f * M[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace tropipm
