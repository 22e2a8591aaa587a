#include "lnfft/nfft.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "lnfft/error.hpp"
#include "lnfft/fft.hpp"

namespace lnfft {

GriddingKernel::GriddingKernel(std::size_t modes, int spread_width)
    : modes_(modes), spread_width_(spread_width) {
  if (modes == 0) throw Error(Errc::InvalidArgument, "gridding kernel needs at least one mode");
  if (spread_width < 1) throw Error(Errc::InvalidArgument, "spread width must be >= 1");
  const double n = static_cast<double>(modes);
  constexpr double sigma = 2.0;
  tau_ = kPi * spread_width / (sigma * (sigma - 0.5) * n * n);

  const double m = static_cast<double>(fine_size());
  const double amplitude = std::sqrt(kPi / tau_) / m;
  weights_.resize(modes);
  for (std::size_t p = 0; p < modes; ++p) {
    const double k = static_cast<double>(static_cast<std::ptrdiff_t>(p) - centre());
    weights_[p] = amplitude * std::exp(k * k * tau_);
  }
}

double GriddingKernel::pulse(double d) const noexcept { return std::exp(-d * d / (4.0 * tau_)); }

namespace {

std::size_t wrap(std::ptrdiff_t l, std::size_t m) {
  const auto mm = static_cast<std::ptrdiff_t>(m);
  l %= mm;
  return static_cast<std::size_t>(l < 0 ? l + mm : l);
}

// t·M split into an exactly representable head and its rounding error, so
// offsets to nearby fine-grid cells keep full relative precision for any M.
struct FinePosition {
  FinePosition(double t, double fine) : head(t * fine), tail(std::fma(t, fine, -head)) {
    cell = static_cast<std::ptrdiff_t>(std::floor(head));
  }
  double offset(std::ptrdiff_t l) const noexcept {
    return (head - static_cast<double>(l)) + tail;
  }
  double head;
  double tail;
  std::ptrdiff_t cell;
};

void check_sizes(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw Error(Errc::LengthMismatch, std::string(what) + " has length " + std::to_string(got) +
                                          ", expected " + std::to_string(want));
}

// Shared flop charge of one type-1 or type-2 transform; identical by design
// so the two transforms are interchangeable in cost.
void charge_transform(FlopCounter* flops, const GriddingKernel& kernel, std::size_t points) {
  count(flops, [&](FlopCounter& c) {
    const std::uint64_t q = points;
    const std::uint64_t taps = 2 * static_cast<std::uint64_t>(kernel.spread_width());
    c.complex_exps(q);        // centring modulation
    c.complex_muls(q);
    c.complex_exps(q * taps);  // pulse evaluations
    c.real_scale(q * taps);
    c.complex_adds(q * taps);
    c.fft(kernel.fine_size());
    c.real_scale(kernel.modes());  // deconvolution
  });
}

}  // namespace

CVector nfft_type1(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                   const GriddingKernel& kernel, FlopCounter* flops) {
  check_sizes(amplitudes.size(), grid.size(), "amplitudes");
  const std::size_t fine = kernel.fine_size();
  const double fine_d = static_cast<double>(fine);
  const double step = kTwoPi / fine_d;
  const int m = kernel.spread_width();
  const std::ptrdiff_t centre = kernel.centre();

  CVector spread(fine, Complex{});
  // Visit instants in ascending order so neighbouring points touch
  // neighbouring fine-grid cells.
  for (std::size_t idx : grid.order()) {
    const double t = grid[idx];
    const Complex b = amplitudes[idx] * unit_phase(-centre, t);
    const FinePosition u(t, fine_d);
    for (std::ptrdiff_t l = u.cell - m + 1; l <= u.cell + m; ++l) {
      const double d = step * u.offset(l);
      spread[wrap(l, fine)] += b * kernel.pulse(d);
    }
  }
  dft_inplace(spread);

  const auto w = kernel.weights();
  CVector out(kernel.modes());
  for (std::size_t p = 0; p < out.size(); ++p) {
    const auto k = static_cast<std::ptrdiff_t>(p) - centre;
    out[p] = w[p] * spread[wrap(k, fine)];
  }
  charge_transform(flops, kernel, grid.size());
  return out;
}

CVector nfft_type1(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                   std::size_t modes, int spread_width, FlopCounter* flops) {
  return nfft_type1(grid, amplitudes, GriddingKernel(modes, spread_width), flops);
}

CVector nfft_type2(std::span<const Complex> coefficients, const NonuniformGrid& grid,
                   const GriddingKernel& kernel, FlopCounter* flops) {
  check_sizes(coefficients.size(), kernel.modes(), "coefficients");
  const std::size_t fine = kernel.fine_size();
  const double fine_d = static_cast<double>(fine);
  const double step = kTwoPi / fine_d;
  const int m = kernel.spread_width();
  const std::ptrdiff_t centre = kernel.centre();

  CVector fine_grid(fine, Complex{});
  const auto w = kernel.weights();
  for (std::size_t p = 0; p < coefficients.size(); ++p) {
    const auto k = static_cast<std::ptrdiff_t>(p) - centre;
    fine_grid[wrap(k, fine)] = w[p] * coefficients[p];
  }
  synthesize_inplace(fine_grid);

  CVector out(grid.size());
  for (std::size_t idx : grid.order()) {
    const double t = grid[idx];
    const FinePosition u(t, fine_d);
    Complex acc{};
    for (std::ptrdiff_t l = u.cell - m + 1; l <= u.cell + m; ++l) {
      const double d = step * u.offset(l);
      acc += fine_grid[wrap(l, fine)] * kernel.pulse(d);
    }
    out[idx] = acc * unit_phase(centre, t);
  }
  charge_transform(flops, kernel, grid.size());
  return out;
}

CVector nfft_type2(std::span<const Complex> coefficients, const NonuniformGrid& grid,
                   int spread_width, FlopCounter* flops) {
  return nfft_type2(coefficients, grid, GriddingKernel(coefficients.size(), spread_width),
                    flops);
}

CVector nfft_type1_direct(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                          std::size_t modes) {
  check_sizes(amplitudes.size(), grid.size(), "amplitudes");
  CVector out(modes);
  for (std::size_t p = 0; p < modes; ++p) {
    std::complex<long double> acc{};
    for (std::size_t q = 0; q < grid.size(); ++q) {
      const Complex term = amplitudes[q] * unit_phase(-static_cast<std::int64_t>(p), grid[q]);
      acc += std::complex<long double>(term.real(), term.imag());
    }
    out[p] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return out;
}

CVector nfft_type2_direct(std::span<const Complex> coefficients, const NonuniformGrid& grid) {
  CVector out(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) {
    std::complex<long double> acc{};
    for (std::size_t p = 0; p < coefficients.size(); ++p) {
      const Complex term = coefficients[p] * unit_phase(static_cast<std::int64_t>(p), grid[q]);
      acc += std::complex<long double>(term.real(), term.imag());
    }
    out[q] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return out;
}

namespace {

template <typename Coef>
CVector conv_impl(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                  std::span<const Coef> lambda, std::size_t size, const GriddingKernel& kernel,
                  FlopCounter* flops) {
  const std::size_t r = lambda.size();
  if (size == 0 || r == 0 || r % size != 0)
    throw Error(Errc::SizeMismatch, "kernel length " + std::to_string(r) +
                                        " is not a positive multiple of " + std::to_string(size));
  if (kernel.modes() != r)
    throw Error(Errc::SizeMismatch, "gridding kernel built for " +
                                        std::to_string(kernel.modes()) + " modes, need " +
                                        std::to_string(r));

  const CVector spectrum = nfft_type1(grid, amplitudes, kernel, flops);
  CVector folded(size, Complex{});
  for (std::size_t i = 0; i < r; ++i) folded[i % size] += lambda[i] * spectrum[i];
  count(flops, [&](FlopCounter& c) {
    if constexpr (std::is_same_v<Coef, double>)
      c.real_scale(r);
    else
      c.complex_muls(r);
    c.complex_adds(r - size);
  });
  return synthesize(folded, flops);
}

}  // namespace

CVector nonuniform_conv(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                        std::span<const Complex> lambda, std::size_t size,
                        const GriddingKernel& kernel, FlopCounter* flops) {
  return conv_impl(grid, amplitudes, lambda, size, kernel, flops);
}

CVector nonuniform_conv(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                        std::span<const double> lambda, std::size_t size,
                        const GriddingKernel& kernel, FlopCounter* flops) {
  return conv_impl(grid, amplitudes, lambda, size, kernel, flops);
}

CVector nonuniform_conv(const NonuniformGrid& grid, std::span<const Complex> amplitudes,
                        std::span<const Complex> lambda, std::size_t size, int spread_width,
                        FlopCounter* flops) {
  if (lambda.empty() || size == 0 || lambda.size() % size != 0)
    throw Error(Errc::SizeMismatch, "kernel length " + std::to_string(lambda.size()) +
                                        " is not a positive multiple of " + std::to_string(size));
  return conv_impl(grid, amplitudes, lambda, size, GriddingKernel(lambda.size(), spread_width),
                   flops);
}

}  // namespace lnfft
