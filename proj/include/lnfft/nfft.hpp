#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lnfft/flops.hpp"
#include "lnfft/types.hpp"

namespace lnfft {

/// Truncated Gaussian gridding pulse on a 2x oversampled grid for a fixed
/// number of Fourier modes.
///
/// Modes p = 0..N-1 are handled as the centred block k = p - N/2 by
/// modulating with e^{∓j2π(N/2)t}; the Gaussian width follows the usual
/// rule τ = π·m / (σ(σ - 1/2)·N²) with σ = 2, which gives a per-point error
/// of roughly e^{-2πm/3}.
class GriddingKernel {
 public:
  GriddingKernel(std::size_t modes, int spread_width);

  std::size_t modes() const noexcept { return modes_; }
  std::size_t fine_size() const noexcept { return 2 * modes_; }
  int spread_width() const noexcept { return spread_width_; }
  double tau() const noexcept { return tau_; }
  std::ptrdiff_t centre() const noexcept { return static_cast<std::ptrdiff_t>(modes_ / 2); }

  /// Deconvolution weight for output mode p (0..N-1); includes the 1/M
  /// quadrature factor of the fine grid.
  std::span<const double> weights() const noexcept { return weights_; }

  /// Pulse value at angular offset d (radians on the 2π-periodic axis).
  double pulse(double d) const noexcept;

 private:
  std::size_t modes_;
  int spread_width_;
  double tau_;
  std::vector<double> weights_;
};

/// A(p) = Σ_q a_q e^{-j2πp t_q}, p = 0..R-1 with R = kernel.modes().
CVector nfft_type1(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                   const GriddingKernel& kernel, FlopCounter* flops = nullptr);
CVector nfft_type1(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                   std::size_t modes, int spread_width = kDefaultSpreadWidth,
                   FlopCounter* flops = nullptr);

/// s(t_q) = Σ_p S_p e^{+j2πp t_q}, p = 0..P-1 with P = kernel.modes().
CVector nfft_type2(std::span<const Complex> coefficients, const NonuniformGrid& grid,
                   const GriddingKernel& kernel, FlopCounter* flops = nullptr);
CVector nfft_type2(std::span<const Complex> coefficients, const NonuniformGrid& grid,
                   int spread_width = kDefaultSpreadWidth, FlopCounter* flops = nullptr);

/// Exact O(QR) summations of the two sums above (extended-precision
/// accumulation, FMA-reduced phases).
CVector nfft_type1_direct(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                          std::size_t modes);
CVector nfft_type2_direct(std::span<const Complex> coefficients, const NonuniformGrid& grid);

/// γ(q/P), q = 0..P-1, for γ(t) = Σ_p a_p λ(t - t_p) with
/// λ(t) = Σ_{r<R} Λ_r e^{j2πrt}. R = Λ.size() must be a multiple of P
/// (Errc::SizeMismatch otherwise) and equal kernel.modes().
CVector nonuniform_conv(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                        std::span<const Complex> lambda, std::size_t size,
                        const GriddingKernel& kernel, FlopCounter* flops = nullptr);
/// Real-coefficient kernel: the products Λ_r·A(r) are charged as real scalings.
CVector nonuniform_conv(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                        std::span<const double> lambda, std::size_t size,
                        const GriddingKernel& kernel, FlopCounter* flops = nullptr);
CVector nonuniform_conv(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                        std::span<const Complex> lambda, std::size_t size,
                        int spread_width = kDefaultSpreadWidth, FlopCounter* flops = nullptr);

}  // namespace lnfft
