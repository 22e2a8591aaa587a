#include "lnfft/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "lnfft/error.hpp"

namespace lnfft {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DuplicateNode: return "DuplicateNode";
    case Errc::NonPositiveDamping: return "NonPositiveDamping";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonFinite: return "NonFinite";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::Overflow: return "Overflow";
    case Errc::SingularDerivative: return "SingularDerivative";
    case Errc::AmplificationWarning: return "AmplificationWarning";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::MaxIterations: return "MaxIterations";
    case Errc::ZeroReference: return "ZeroReference";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

void require_finite(std::span<const Complex> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
      throw Error(Errc::NonFinite, std::string(what) + " has a non-finite entry at index " +
                                       std::to_string(i));
  }
}

Complex unit_phase(double cycles) noexcept {
  const double frac = cycles - std::nearbyint(cycles);
  return std::polar(1.0, kTwoPi * frac);
}

Complex unit_phase(std::int64_t k, double t) noexcept {
  const double kd = static_cast<double>(k);
  const double hi = kd * t;
  const double lo = std::fma(kd, t, -hi);
  const double frac = (hi - std::nearbyint(hi)) + lo;
  return std::polar(1.0, kTwoPi * frac);
}

NonuniformGrid validate_grid(std::span<const double> instants, double gap_floor) {
  if (instants.empty()) throw Error(Errc::OutOfRange, "grid must contain at least one instant");
  for (std::size_t i = 0; i < instants.size(); ++i) {
    const double t = instants[i];
    if (!(t >= 0.0 && t < 1.0))
      throw Error(Errc::OutOfRange,
                  "instant " + std::to_string(i) + " = " + std::to_string(t) + " not in [0,1)");
  }

  NonuniformGrid grid;
  grid.instants_.assign(instants.begin(), instants.end());
  grid.order_.resize(instants.size());
  std::iota(grid.order_.begin(), grid.order_.end(), std::size_t{0});
  std::stable_sort(grid.order_.begin(), grid.order_.end(),
                   [&](std::size_t a, std::size_t b) { return instants[a] < instants[b]; });
  grid.sorted_.resize(instants.size());
  for (std::size_t k = 0; k < instants.size(); ++k) grid.sorted_[k] = instants[grid.order_[k]];

  if (instants.size() > 1) {
    double gap = grid.sorted_.front() + 1.0 - grid.sorted_.back();
    std::size_t at = grid.order_.back();
    for (std::size_t k = 1; k < grid.sorted_.size(); ++k) {
      const double g = grid.sorted_[k] - grid.sorted_[k - 1];
      if (g < gap) {
        gap = g;
        at = grid.order_[k];
      }
    }
    if (gap < gap_floor) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "instant %zu is within %.3g of a neighbour (floor %.3g)", at,
                    gap, gap_floor);
      throw Error(Errc::DuplicateNode, buf);
    }
    grid.min_gap_ = gap;
  }
  return grid;
}

namespace {

double last_index(std::size_t size, int eta) {
  if (eta < 1) throw Error(Errc::InvalidArgument, "eta must be >= 1");
  const double n = static_cast<double>(size) * eta - 1.0;
  if (n < 1.0) throw Error(Errc::InvalidArgument, "eta*P must be >= 2");
  return n;
}

}  // namespace

double truncation_ratio(double damping, std::size_t size, int eta) {
  const double n = last_index(size, eta);
  return std::exp(-kTwoPi * n * damping) / n;
}

double damping_from_mu(double mu, std::size_t size, int eta) {
  const double n = last_index(size, eta);
  if (!(mu > 0.0 && mu < 1.0)) throw Error(Errc::InvalidArgument, "mu must lie in (0,1)");
  const double prod = mu * n;
  if (prod >= 1.0)
    throw Error(Errc::NonPositiveDamping,
                "mu*(eta*P-1) = " + std::to_string(prod) + " >= 1, no damping needed");
  return -std::log(prod) / (kTwoPi * n);
}

MethodParams MethodParams::from_mu(std::size_t size, int eta, double mu, int spread_width,
                                   int refine_passes) {
  MethodParams p;
  p.size = size;
  p.eta = eta;
  p.mu = mu;
  p.damping_a = damping_from_mu(mu, size, eta);
  p.spread_width = spread_width;
  p.refine_passes = refine_passes;
  if (spread_width < 1) throw Error(Errc::InvalidArgument, "spread width must be >= 1");
  if (refine_passes < 0) throw Error(Errc::InvalidArgument, "refine passes must be >= 0");
  return p;
}

MethodParams MethodParams::from_damping(std::size_t size, int eta, double damping_a,
                                        int spread_width, int refine_passes) {
  if (!(damping_a > 0.0) || !std::isfinite(damping_a))
    throw Error(Errc::NonPositiveDamping, "damping must be a positive finite number");
  MethodParams p;
  p.size = size;
  p.eta = eta;
  p.damping_a = damping_a;
  p.mu = truncation_ratio(damping_a, size, eta);
  p.spread_width = spread_width;
  p.refine_passes = refine_passes;
  if (spread_width < 1) throw Error(Errc::InvalidArgument, "spread width must be >= 1");
  if (refine_passes < 0) throw Error(Errc::InvalidArgument, "refine passes must be >= 0");
  return p;
}

}  // namespace lnfft
