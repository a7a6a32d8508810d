#pragma once

#include "tropipm/bigfloat.hpp"
#include "tropipm/rational.hpp"

#include <optional>
#include <vector>

namespace tropipm {

using FVec = std::vector<BigFloat>;
using FMat = std::vector<std::vector<BigFloat>>;

BigFloat dot(const FVec& a, const FVec& b);
FVec mat_vec(const FMat& A, const FVec& x);

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix;
/// nullopt when a pivot fails to be positive.
std::optional<FMat> cholesky(const FMat& H);

/// Solves L L^T x = rhs given the Cholesky factor.
FVec cholesky_solve(const FMat& L, const FVec& rhs);

/// Solves the SPD system H x = rhs; nullopt when H is not positive definite
/// at working precision. `residual_inf` (optional out) receives ||Hx - rhs||_inf.
std::optional<FVec> solve_spd(const FMat& H, const FVec& rhs, BigFloat* residual_inf = nullptr);

/// Smallest eigenvalue of a symmetric matrix: Householder tridiagonalization
/// followed by Sturm-count bisection within Gershgorin bounds, to a relative
/// width of 2^-(bits).
BigFloat min_eigenvalue_sym(const FMat& A, unsigned bits = 96);

BigFloat inf_norm(const FMat& A);

/// Exact rational solve of a square system; nullopt when singular.
std::optional<std::vector<Rat>> solve_linear_rational(std::vector<std::vector<Rat>> M,
                                                      std::vector<Rat> rhs);

}  // namespace tropipm
