#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lnfft/flops.hpp"
#include "lnfft/nfft.hpp"
#include "lnfft/types.hpp"

namespace lnfft {

enum class SystemType { Type4, Type5 };

/// Dense P×P system, row-major.
///
/// Type 4: A[p][q] = e^{-j2πp t_q} (unknowns are amplitudes).
/// Type 5: A[q][p] = e^{+j2πp t_q} (unknowns are coefficients).
/// The two matrices are Hermitian transposes of each other.
struct DenseSystem {
  std::size_t size = 0;
  std::vector<Complex> matrix;
  CVector rhs;

  Complex& at(std::size_t row, std::size_t col) { return matrix[row * size + col]; }
  const Complex& at(std::size_t row, std::size_t col) const { return matrix[row * size + col]; }
};

/// Upper limit on P for the dense baseline (O(P²) memory).
inline constexpr std::size_t kMaxDenseSize = 8192;

DenseSystem make_system(const NonuniformGrid& grid, std::span<const Complex> rhs,
                        SystemType type);

/// Gaussian elimination with partial pivoting. Errc::SingularMatrix when a
/// pivot falls below 1e-300, Errc::InvalidArgument above kMaxDenseSize.
CVector ge_solve(const DenseSystem& system, FlopCounter* flops = nullptr);

/// Flops charged by ge_solve for an n×n system; depends on n only.
void charge_ge(std::size_t n, FlopCounter& flops);

struct CgOptions {
  /// Stop once ‖b - Ax‖ <= tol·‖b‖.
  double tol = 1e-15;
  /// 0 selects the default of 4P.
  std::size_t max_iter = 0;
  int spread_width = kDefaultSpreadWidth;
};

struct CgResult {
  CVector solution;
  std::size_t iterations = 0;
  bool converged = false;
  double relative_residual = 0.0;
};

/// Conjugate gradients on the normal equations A^H A x = A^H b (CGNR); each
/// iteration applies A and A^H once through the fast type-1/type-2
/// transforms. When max_iter is reached the last iterate is returned with
/// converged == false.
CgResult cg_solve(const NonuniformGrid& grid, std::span<const Complex> rhs, SystemType type,
                  const CgOptions& options = {}, FlopCounter* flops = nullptr);

}  // namespace lnfft
