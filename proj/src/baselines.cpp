#include "lnfft/baselines.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "lnfft/error.hpp"

namespace lnfft {

DenseSystem make_system(const NonuniformGrid& grid, std::span<const Complex> rhs,
                        SystemType type) {
  const std::size_t n = grid.size();
  if (rhs.size() != n) throw Error(Errc::LengthMismatch, "rhs length does not match the grid");
  if (n > kMaxDenseSize)
    throw Error(Errc::InvalidArgument, "dense system of size " + std::to_string(n) +
                                           " exceeds the cap of " +
                                           std::to_string(kMaxDenseSize));
  DenseSystem sys;
  sys.size = n;
  sys.matrix.resize(n * n);
  sys.rhs.assign(rhs.begin(), rhs.end());
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const auto k = static_cast<std::int64_t>(p);
      if (type == SystemType::Type4)
        sys.at(p, q) = unit_phase(-k, grid[q]);
      else
        sys.at(q, p) = unit_phase(k, grid[q]);
    }
  }
  return sys;
}

void charge_ge(std::size_t n, FlopCounter& flops) {
  const std::uint64_t nn = n;
  const std::uint64_t tri = nn * (nn - (nn ? 1 : 0)) / 2;  // n(n-1)/2
  const std::uint64_t sq = nn ? (nn - 1) * nn * (2 * nn - 1) / 6 : 0;
  flops.squared_norm(nn * (nn + 1) / 2);  // pivot search
  flops.complex_divs(tri + nn);           // multipliers and back substitution
  flops.complex_muls(sq + 2 * tri);
  flops.complex_adds(sq + 2 * tri);
}

CVector ge_solve(const DenseSystem& system, FlopCounter* flops) {
  const std::size_t n = system.size;
  if (n == 0) throw Error(Errc::InvalidArgument, "empty system");
  if (n > kMaxDenseSize)
    throw Error(Errc::InvalidArgument, "dense system of size " + std::to_string(n) +
                                           " exceeds the cap of " +
                                           std::to_string(kMaxDenseSize));
  if (system.matrix.size() != n * n || system.rhs.size() != n)
    throw Error(Errc::LengthMismatch, "dense system storage does not match its size");

  std::vector<Complex> a = system.matrix;
  CVector b = system.rhs;
  auto row = [&](std::size_t i) { return a.data() + i * n; };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::norm(row(k)[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::norm(row(i)[k]);
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (std::sqrt(best) < 1e-300)
      throw Error(Errc::SingularMatrix, "pivot " + std::to_string(k) + " vanishes");
    if (pivot != k) {
      std::swap_ranges(row(k), row(k) + n, row(pivot));
      std::swap(b[k], b[pivot]);
    }

    const Complex* rk = row(k);
    const Complex inv_pivot = 1.0 / rk[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex* ri = row(i);
      const Complex l = ri[k] * inv_pivot;
      const double lr = l.real();
      const double li = l.imag();
      // Spelled out in reals: keeps the hot loop free of the C99 complex
      // multiply's inf/nan recovery path.
      for (std::size_t j = k + 1; j < n; ++j) {
        const double xr = rk[j].real();
        const double xi = rk[j].imag();
        ri[j] = Complex(ri[j].real() - (lr * xr - li * xi), ri[j].imag() - (lr * xi + li * xr));
      }
      b[i] -= l * b[k];
    }
  }

  CVector x(n);
  for (std::size_t kk = n; kk-- > 0;) {
    const Complex* rk = row(kk);
    Complex acc = b[kk];
    for (std::size_t j = kk + 1; j < n; ++j) acc -= rk[j] * x[j];
    x[kk] = acc / rk[kk];
  }
  count(flops, [&](FlopCounter& c) { charge_ge(n, c); });
  return x;
}

namespace {

double norm_sq(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

}  // namespace

CgResult cg_solve(const NonuniformGrid& grid, std::span<const Complex> rhs, SystemType type,
                  const CgOptions& options, FlopCounter* flops) {
  const std::size_t n = grid.size();
  if (rhs.size() != n) throw Error(Errc::LengthMismatch, "rhs length does not match the grid");
  if (!(options.tol > 0.0)) throw Error(Errc::InvalidArgument, "CG tolerance must be positive");
  require_finite(rhs, "rhs");
  const std::size_t max_iter = options.max_iter ? options.max_iter : 4 * n;
  const GriddingKernel kernel(n, options.spread_width);

  // A and A^H for the selected system.
  auto apply = [&](std::span<const Complex> x) {
    return type == SystemType::Type4 ? nfft_type1(grid, x, kernel, flops)
                                     : nfft_type2(x, grid, kernel, flops);
  };
  auto apply_adjoint = [&](std::span<const Complex> y) {
    return type == SystemType::Type4 ? nfft_type2(y, grid, kernel, flops)
                                     : nfft_type1(grid, y, kernel, flops);
  };

  CgResult result;
  result.solution.assign(n, Complex{});
  const double b_norm = std::sqrt(norm_sq(rhs));
  count(flops, [&](FlopCounter& c) { c.squared_norm(n); });
  if (b_norm == 0.0) {
    result.converged = true;
    return result;
  }

  CVector r(rhs.begin(), rhs.end());
  CVector z = apply_adjoint(r);
  CVector p = z;
  double zz = norm_sq(z);
  count(flops, [&](FlopCounter& c) { c.squared_norm(n); });
  CVector& x = result.solution;
  double r_norm = b_norm;

  for (std::size_t it = 1; it <= max_iter; ++it) {
    const CVector w = apply(p);
    const double ww = norm_sq(w);
    if (ww == 0.0) break;
    const double alpha = zz / ww;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * w[i];
    }
    r_norm = std::sqrt(norm_sq(r));
    result.iterations = it;
    count(flops, [&](FlopCounter& c) {
      c.squared_norm(2 * n);  // ‖w‖², ‖r‖²
      c.real_scale(2 * n);
      c.complex_adds(2 * n);
    });
    if (r_norm <= options.tol * b_norm) {
      result.converged = true;
      break;
    }
    z = apply_adjoint(r);
    const double zz_new = norm_sq(z);
    const double beta = zz_new / zz;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    zz = zz_new;
    count(flops, [&](FlopCounter& c) {
      c.squared_norm(n);
      c.real_scale(n);
      c.complex_adds(n);
    });
  }
  result.relative_residual = r_norm / b_norm;
  return result;
}

}  // namespace lnfft
