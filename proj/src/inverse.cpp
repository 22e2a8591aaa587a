#include "lnfft/inverse.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "lnfft/error.hpp"
#include "lnfft/fft.hpp"

namespace lnfft {

namespace {

KernelData checked_kernel_data(const NonuniformGrid& grid, const MethodParams& params,
                               FlopCounter* flops) {
  if (params.size != grid.size())
    throw Error(Errc::SizeMismatch, "parameters were derived for P = " +
                                        std::to_string(params.size) + ", grid has " +
                                        std::to_string(grid.size()));
  return build_kernel_data(grid, params, flops);
}

void check_rhs(std::span<const Complex> rhs, std::size_t size, const char* what) {
  if (rhs.size() != size)
    throw Error(Errc::LengthMismatch, std::string(what) + " has length " +
                                          std::to_string(rhs.size()) + ", plan size is " +
                                          std::to_string(size));
  require_finite(rhs, what);
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

InversePlan::InversePlan(NonuniformGrid grid, MethodParams params, FlopCounter* flops)
    : grid_(std::move(grid)),
      params_(params),
      kernel_(grid_.size(), params.spread_width) {
  FlopCounter local;
  kernel_data_ = checked_kernel_data(grid_, params_, &local);

  const std::size_t size = grid_.size();
  const double n = static_cast<double>(size);
  const double a = params_.damping_a;
  damping_ = damping_vector(size, a, -1.0);
  undamping_ = damping_vector(size, a, +1.0);
  for (auto& u : undamping_) u /= n;

  const double shift = std::exp(-kTwoPi * n * a);
  node_weights_.resize(size);
  for (std::size_t p = 0; p < size; ++p) {
    const double t = grid_[p];
    const Complex h_denominator = unit_phase(-static_cast<std::int64_t>(size), t) * shift - 1.0;
    const Complex denominator = h_denominator * kernel_data_.derivative_samples[p] *
                                unit_phase(t);
    node_weights_[p] = 1.0 / denominator;
  }
  require_finite(node_weights_, "node weights");

  local.complex_exps(2 * size + 1);  // damping tables and e^{-2πPa}
  local.real_muls(size);
  local.complex_exps(2 * size);
  local.real_scale(size);
  local.real_adds(size);
  local.complex_muls(2 * size);
  local.complex_divs(size);
  build_flops_ = local.report();
  if (flops) flops->merge(local);
}

InversePlan build_plan(const NonuniformGrid& grid, const MethodParams& params,
                       FlopCounter* flops) {
  return InversePlan(grid, params, flops);
}

namespace {

// Shared tail of both solvers: {γ_q} -> s(q/P + ja) -> S.
CVector coefficients_from_conv(const InversePlan& plan, std::span<const Complex> conv,
                               FlopCounter* flops) {
  CVector shifted = hadamard(conv, plan.kernel_data().kernel_samples, flops);
  dft_inplace(shifted);
  const auto undamp = plan.undamping();
  for (std::size_t p = 0; p < shifted.size(); ++p) shifted[p] *= undamp[p];
  count(flops, [&](FlopCounter& c) {
    c.fft(shifted.size());
    c.real_scale(shifted.size());
  });
  return shifted;
}

}  // namespace

CVector type5(const InversePlan& plan, std::span<const Complex> samples, FlopCounter* flops) {
  check_rhs(samples, plan.size(), "samples");
  const CVector weighted = hadamard(samples, plan.node_weights(), flops);
  const CVector conv = nonuniform_conv(plan.grid(), weighted, plan.h1_coefficients(),
                                       plan.size(), plan.gridding_kernel(), flops);
  return coefficients_from_conv(plan, conv, flops);
}

CVector type4(const InversePlan& plan, std::span<const Complex> spectrum, FlopCounter* flops) {
  check_rhs(spectrum, plan.size(), "spectrum");
  const std::size_t size = plan.size();
  const auto damping = plan.h1_coefficients();
  CVector conv(size);
  for (std::size_t r = 0; r < size; ++r) conv[r] = damping[r] * spectrum[r];
  count(flops, [&](FlopCounter& c) { c.real_scale(size); });
  synthesize_inplace(conv);
  count(flops, [&](FlopCounter& c) { c.fft(size); });

  const CVector coefficients = coefficients_from_conv(plan, conv, flops);
  const CVector at_nodes = nfft_type2(coefficients, plan.grid(), plan.gridding_kernel(), flops);
  return hadamard(at_nodes, plan.node_weights(), flops);
}

namespace {

// A correction that grows relative to its predecessor signals a contraction
// factor >= 1, unless both are already at the rounding floor.
constexpr double kNegligibleCorrection = 1.4901161193847656e-08;  // sqrt(eps)

template <typename Solve, typename Forward>
CVector refine(const InversePlan& plan, std::span<const Complex> rhs, int passes,
               FlopCounter* flops, RefineReport* report, Solve solve, Forward forward) {
  if (passes < 0) throw Error(Errc::InvalidArgument, "refinement passes must be >= 0");
  CVector x = solve(rhs);
  if (report) *report = RefineReport{};
  if (passes == 0) return x;

  const std::size_t size = plan.size();
  const double solution_norm = norm2(x);
  double previous = solution_norm;
  count(flops, [&](FlopCounter& c) { c.squared_norm(size); });

  for (int k = 0; k < passes; ++k) {
    CVector residual = forward(x);
    for (std::size_t i = 0; i < size; ++i) residual[i] = rhs[i] - residual[i];
    const CVector correction = solve(residual);
    for (std::size_t i = 0; i < size; ++i) x[i] += correction[i];
    const double cn = norm2(correction);
    count(flops, [&](FlopCounter& c) {
      c.complex_adds(2 * size);
      c.squared_norm(size);
    });

    const double ratio = previous > 0.0 ? cn / previous : 0.0;
    if (report) {
      report->passes = k + 1;
      report->contraction.push_back(ratio);
    }
    if (ratio > 1.0 && cn > kNegligibleCorrection * solution_norm)
      throw Error(Errc::NonConvergence, "refinement pass " + std::to_string(k + 1) +
                                            " grew the correction by a factor " +
                                            std::to_string(ratio));
    previous = cn;
  }
  return x;
}

}  // namespace

CVector refine_type4(const InversePlan& plan, std::span<const Complex> spectrum, int passes,
                     FlopCounter* flops, RefineReport* report) {
  return refine(
      plan, spectrum, passes, flops, report,
      [&](std::span<const Complex> rhs) { return type4(plan, rhs, flops); },
      [&](std::span<const Complex> x) {
        return nfft_type1(plan.grid(), x, plan.gridding_kernel(), flops);
      });
}

CVector refine_type5(const InversePlan& plan, std::span<const Complex> samples, int passes,
                     FlopCounter* flops, RefineReport* report) {
  return refine(
      plan, samples, passes, flops, report,
      [&](std::span<const Complex> rhs) { return type5(plan, rhs, flops); },
      [&](std::span<const Complex> x) {
        return nfft_type2(x, plan.grid(), plan.gridding_kernel(), flops);
      });
}

}  // namespace lnfft
