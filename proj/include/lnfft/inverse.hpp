#pragma once

#include <span>
#include <vector>

#include "lnfft/flops.hpp"
#include "lnfft/lagrange.hpp"
#include "lnfft/nfft.hpp"
#include "lnfft/types.hpp"

namespace lnfft {

/// Grid-dependent precomputation shared by the type-4 and type-5 solvers.
///
/// Immutable once built; any number of right-hand sides may be solved
/// against one plan, also concurrently.
class InversePlan {
 public:
  InversePlan(NonuniformGrid grid, MethodParams params, FlopCounter* flops = nullptr);

  const NonuniformGrid& grid() const noexcept { return grid_; }
  const MethodParams& params() const noexcept { return params_; }
  const KernelData& kernel_data() const noexcept { return kernel_data_; }
  std::size_t size() const noexcept { return grid_.size(); }

  /// h(-Pt_p + Pja) / (L'(e^{j2πt_p}) e^{j2πt_p}), caller order.
  std::span<const Complex> node_weights() const noexcept { return node_weights_; }
  /// e^{-2πpa}: coefficients of the band-limited pulse h1 and the type-4
  /// spectral damping.
  std::span<const double> h1_coefficients() const noexcept { return damping_; }
  /// e^{+2πpa}/P: undoes the imaginary shift after the final DFT.
  std::span<const double> undamping() const noexcept { return undamping_; }
  const GriddingKernel& gridding_kernel() const noexcept { return kernel_; }

  /// Flops spent building this plan.
  const FlopReport& build_flops() const noexcept { return build_flops_; }

 private:
  NonuniformGrid grid_;
  MethodParams params_;
  KernelData kernel_data_;
  GriddingKernel kernel_;
  CVector node_weights_;
  std::vector<double> damping_;
  std::vector<double> undamping_;
  FlopReport build_flops_;
};

InversePlan build_plan(const NonuniformGrid& grid, const MethodParams& params,
                       FlopCounter* flops = nullptr);

/// Coefficients S with Σ_p S_p e^{j2πp t_q} = samples_q.
CVector type5(const InversePlan& plan, std::span<const Complex> samples,
              FlopCounter* flops = nullptr);

/// Amplitudes a with Σ_q a_q e^{-j2πp t_q} = spectrum_p.
CVector type4(const InversePlan& plan, std::span<const Complex> spectrum,
              FlopCounter* flops = nullptr);

struct RefineReport {
  int passes = 0;
  /// ‖correction_k‖ / ‖previous correction‖ (the first entry is relative to
  /// the plain solution).
  std::vector<double> contraction;
};

/// Residual correction: each pass evaluates the forward transform of the
/// current estimate, solves again for the residual and adds the correction.
/// Errc::NonConvergence when a correction grows relative to the previous one
/// while still being non-negligible.
CVector refine_type4(const InversePlan& plan, std::span<const Complex> spectrum, int passes,
                     FlopCounter* flops = nullptr, RefineReport* report = nullptr);
CVector refine_type5(const InversePlan& plan, std::span<const Complex> samples, int passes,
                     FlopCounter* flops = nullptr, RefineReport* report = nullptr);

}  // namespace lnfft
