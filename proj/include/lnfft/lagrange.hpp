#pragma once

#include <span>
#include <vector>

#include "lnfft/flops.hpp"
#include "lnfft/nfft.hpp"
#include "lnfft/types.hpp"

namespace lnfft {

/// Grid-only quantities of the node polynomial L(z) = Π_p (z - e^{j2πt_p}).
struct KernelData {
  /// v(q/P) = Σ_p log(1 - e^{j2π(q/P - t_p + ja)}), truncated series.
  CVector v_samples;
  /// L(e^{j2π(q/P + ja)}), q = 0..P-1.
  CVector kernel_samples;
  /// Monomial coefficients L_0..L_{P-1}; the leading L_P = 1 is implicit.
  CVector coefficients;
  /// L'(e^{j2πt_p}) in caller order.
  CVector derivative_samples;
  /// Set when e^{2π(P-1)a} exceeds 1/ε_machine, i.e. the high
  /// coefficients are recovered with no significant digits.
  bool amplification_warning = false;
};

/// e^{sign·2πpa}, p = 0..n-1.
std::vector<double> damping_vector(std::size_t n, double damping_a, double sign);

/// Coefficients of the truncated log kernel: Λ_0 = 0, Λ_p = -e^{-2πpa}/p for
/// 1 <= p < ηP.
std::vector<double> log_kernel_coefficients(std::size_t oversampled, double damping_a,
                                            FlopCounter* flops = nullptr);

CVector compute_v_samples(const NonuniformGrid& grid, const MethodParams& params,
                          FlopCounter* flops = nullptr);

/// exp(jPπ + j2πΣt_p + v(q/P)). Errc::Overflow when |Re v| leaves the
/// representable exponent range.
CVector kernel_samples_from_v(std::span<const Complex> v_samples, const NonuniformGrid& grid,
                              PhaseEvaluation phase = PhaseEvaluation::Direct,
                              FlopCounter* flops = nullptr);

/// L_p = (1/P)(DFT(K)_p - P e^{-2πPa} δ_p) e^{2πpa}.
CVector kernel_coefficients(std::span<const Complex> kernel_samples, double damping_a,
                            FlopCounter* flops = nullptr);
/// Same, with the compensating vector e^{2πpa} supplied by the caller.
CVector kernel_coefficients(std::span<const Complex> kernel_samples, double damping_a,
                            std::span<const double> undamping, FlopCounter* flops = nullptr);

/// True when recovering L_{P-1} amplifies by more than 1/ε_machine.
bool amplification_exceeded(std::size_t size, double damping_a) noexcept;

/// L'(e^{j2πt_p}) via a type-2 transform of {(p+1)L_{p+1}}.
/// Errc::SingularDerivative when any |L'| < 1e-300.
CVector derivative_samples(std::span<const Complex> coefficients, const NonuniformGrid& grid,
                           const GriddingKernel& kernel, FlopCounter* flops = nullptr);

/// All of the above for one grid. Errc::SizeMismatch if params.size differs
/// from the grid size.
KernelData build_kernel_data(const NonuniformGrid& grid, const MethodParams& params,
                             FlopCounter* flops = nullptr);

}  // namespace lnfft
