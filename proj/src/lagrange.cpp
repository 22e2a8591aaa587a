#include "lnfft/lagrange.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lnfft/error.hpp"
#include "lnfft/fft.hpp"

namespace lnfft {

namespace {

// Headroom left below the largest finite exponent so that later products
// with O(P) sums stay finite.
constexpr double kExponentMargin = 16.0;

}  // namespace

std::vector<double> damping_vector(std::size_t n, double damping_a, double sign) {
  std::vector<double> out(n);
  for (std::size_t p = 0; p < n; ++p)
    out[p] = std::exp(sign * kTwoPi * static_cast<double>(p) * damping_a);
  return out;
}

std::vector<double> log_kernel_coefficients(std::size_t oversampled, double damping_a,
                                            FlopCounter* flops) {
  std::vector<double> lambda(oversampled, 0.0);
  for (std::size_t p = 1; p < oversampled; ++p) {
    const double pd = static_cast<double>(p);
    lambda[p] = -std::exp(-kTwoPi * pd * damping_a) / pd;
  }
  count(flops, [&](FlopCounter& c) {
    c.complex_exps(oversampled);
    c.real_muls(oversampled);
  });
  return lambda;
}

CVector compute_v_samples(const NonuniformGrid& grid, const MethodParams& params,
                          FlopCounter* flops) {
  const std::size_t size = grid.size();
  const std::size_t oversampled = size * static_cast<std::size_t>(params.eta);
  if (oversampled < 2) throw Error(Errc::InvalidArgument, "eta*P must be >= 2");
  const auto lambda = log_kernel_coefficients(oversampled, params.damping_a, flops);
  const CVector ones(size, Complex(1.0, 0.0));
  return nonuniform_conv(grid, ones, std::span<const double>(lambda), size,
                         GriddingKernel(oversampled, params.spread_width), flops);
}

CVector kernel_samples_from_v(std::span<const Complex> v_samples, const NonuniformGrid& grid,
                              PhaseEvaluation phase, FlopCounter* flops) {
  const std::size_t size = grid.size();
  if (v_samples.size() != size)
    throw Error(Errc::LengthMismatch, "v samples length does not match the grid");

  const double limit = std::log(DBL_MAX) - kExponentMargin;
  for (std::size_t q = 0; q < size; ++q) {
    if (std::abs(v_samples[q].real()) > limit)
      throw Error(Errc::Overflow, "|Re v(" + std::to_string(q) + "/P)| = " +
                                      std::to_string(std::abs(v_samples[q].real())) +
                                      " exceeds the exponent range");
  }

  CVector out(size);
  if (phase == PhaseEvaluation::Direct) {
    const double sum = std::accumulate(grid.instants().begin(), grid.instants().end(), 0.0);
    const double angle = static_cast<double>(size) * kPi + kTwoPi * sum;
    for (std::size_t q = 0; q < size; ++q)
      out[q] = std::exp(Complex(v_samples[q].real(), angle + v_samples[q].imag()));
    count(flops, [&](FlopCounter& c) {
      c.complex_exps(size);
      c.real_adds(size);
    });
    return out;
  }

  long double sum = 0.0L;
  for (double t : grid.instants()) sum += t;
  const long double frac = sum - std::floor(sum);
  const double cycles = static_cast<double>(frac) + ((size % 2) ? 0.5 : 0.0);
  const Complex constant = unit_phase(cycles);
  for (std::size_t q = 0; q < size; ++q) out[q] = constant * std::exp(v_samples[q]);
  count(flops, [&](FlopCounter& c) {
    c.complex_exps(size + 1);
    c.complex_muls(size);
  });
  return out;
}

bool amplification_exceeded(std::size_t size, double damping_a) noexcept {
  if (size < 2) return false;
  const double exponent = kTwoPi * static_cast<double>(size - 1) * damping_a;
  return exponent > -std::log(std::numeric_limits<double>::epsilon());
}

CVector kernel_coefficients(std::span<const Complex> kernel_samples, double damping_a,
                            std::span<const double> undamping, FlopCounter* flops) {
  const std::size_t size = kernel_samples.size();
  if (undamping.size() != size)
    throw Error(Errc::LengthMismatch, "damping compensation vector length mismatch");
  CVector coef = dft(kernel_samples, flops);
  const double n = static_cast<double>(size);
  // The z^P term of the shifted polynomial folds onto bin 0.
  coef[0] -= n * std::exp(-kTwoPi * n * damping_a);
  for (std::size_t p = 0; p < size; ++p) coef[p] *= undamping[p] / n;
  count(flops, [&](FlopCounter& c) {
    c.real_adds(1);
    c.real_scale(size);
  });
  return coef;
}

CVector kernel_coefficients(std::span<const Complex> kernel_samples, double damping_a,
                            FlopCounter* flops) {
  const auto undamping = damping_vector(kernel_samples.size(), damping_a, +1.0);
  count(flops, [&](FlopCounter& c) { c.complex_exps(kernel_samples.size()); });
  return kernel_coefficients(kernel_samples, damping_a, undamping, flops);
}

CVector derivative_samples(std::span<const Complex> coefficients, const NonuniformGrid& grid,
                           const GriddingKernel& kernel, FlopCounter* flops) {
  const std::size_t size = coefficients.size();
  if (size != grid.size())
    throw Error(Errc::LengthMismatch, "coefficient count does not match the grid");
  CVector weighted(size);
  for (std::size_t p = 0; p + 1 < size; ++p)
    weighted[p] = static_cast<double>(p + 1) * coefficients[p + 1];
  weighted[size - 1] = Complex(static_cast<double>(size), 0.0);  // leading coefficient is 1
  count(flops, [&](FlopCounter& c) { c.real_scale(size); });

  CVector out = nfft_type2(weighted, grid, kernel, flops);
  for (std::size_t p = 0; p < size; ++p) {
    if (std::abs(out[p]) < 1e-300)
      throw Error(Errc::SingularDerivative,
                  "L'(e^{j2πt}) vanishes at instant " + std::to_string(p));
  }
  return out;
}

KernelData build_kernel_data(const NonuniformGrid& grid, const MethodParams& params,
                             FlopCounter* flops) {
  if (params.size != grid.size())
    throw Error(Errc::SizeMismatch, "parameters were derived for P = " +
                                        std::to_string(params.size) + ", grid has " +
                                        std::to_string(grid.size()));
  KernelData data;
  data.v_samples = compute_v_samples(grid, params, flops);
  data.kernel_samples = kernel_samples_from_v(data.v_samples, grid, params.phase, flops);
  data.coefficients = kernel_coefficients(data.kernel_samples, params.damping_a, flops);
  data.amplification_warning = amplification_exceeded(grid.size(), params.damping_a);
  data.derivative_samples = derivative_samples(
      data.coefficients, grid, GriddingKernel(grid.size(), params.spread_width), flops);
  return data;
}

}  // namespace lnfft
