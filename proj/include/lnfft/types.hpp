#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lnfft {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Throws Errc::NonFinite if any entry is NaN or infinite. `what` names the
/// offending argument in the message.
void require_finite(std::span<const Complex> values, const char* what);

/// e^{j2πx}, with x reduced to [-1/2, 1/2] before the trig call.
Complex unit_phase(double cycles) noexcept;

/// e^{j2π·k·t} for integer k; the product k·t is reduced modulo one with an
/// FMA-corrected remainder so the phase stays accurate for large k.
Complex unit_phase(std::int64_t k, double t) noexcept;

/// Default minimum circular gap between grid instants.
inline constexpr double kDefaultGapFloor = 1e-12;

/// Validated instants t_p in [0, 1), pairwise distinct on the circle.
///
/// Instants are kept in caller order; a sorted copy and the sorting
/// permutation are retained for locality-sensitive consumers.
class NonuniformGrid {
 public:
  std::size_t size() const noexcept { return instants_.size(); }
  std::span<const double> instants() const noexcept { return instants_; }
  double operator[](std::size_t i) const noexcept { return instants_[i]; }

  std::span<const double> sorted() const noexcept { return sorted_; }
  /// sorted()[k] == instants()[order()[k]]
  std::span<const std::size_t> order() const noexcept { return order_; }

  /// Smallest circular distance between neighbouring instants (1 for P=1).
  double min_gap() const noexcept { return min_gap_; }

  friend bool operator==(const NonuniformGrid& a, const NonuniformGrid& b) {
    return a.instants_ == b.instants_;
  }

 private:
  friend NonuniformGrid validate_grid(std::span<const double>, double);
  std::vector<double> instants_;
  std::vector<double> sorted_;
  std::vector<std::size_t> order_;
  double min_gap_ = 1.0;
};

/// Errc::OutOfRange for an instant outside [0,1) or an empty list,
/// Errc::DuplicateNode when two instants are closer than `gap_floor`.
NonuniformGrid validate_grid(std::span<const double> instants,
                             double gap_floor = kDefaultGapFloor);

/// Ratio between the last kept and the first coefficient of the truncated
/// log-kernel series: e^{-2π(ηP-1)a} / (ηP-1).
double truncation_ratio(double damping, std::size_t size, int eta);

/// Inverse of truncation_ratio in the damping: a = -ln(μ(ηP-1)) / (2π(ηP-1)).
/// Errc::NonPositiveDamping when μ(ηP-1) >= 1.
double damping_from_mu(double mu, std::size_t size, int eta);

inline constexpr int kDefaultSpreadWidth = 16;

/// How the constant jPπ + j2πΣt_p enters the kernel samples.
/// Direct adds it to v(q/P) in double before exponentiating, so its rounding
/// (about P·eps radians) reaches every sample. Reduced takes it modulo 2π in
/// extended precision first; the η = 1 error floor drops by roughly 30 dB.
enum class PhaseEvaluation { Direct, Reduced };

/// Parameters of the inverse transforms for one problem size.
///
/// The damping and the truncation ratio are tied together for a given
/// (size, eta); the factories take one of them and derive the other.
struct MethodParams {
  std::size_t size = 0;
  double damping_a = 0.0;
  int eta = 1;
  double mu = 0.0;
  int spread_width = kDefaultSpreadWidth;
  int refine_passes = 1;
  PhaseEvaluation phase = PhaseEvaluation::Direct;

  static MethodParams from_mu(std::size_t size, int eta, double mu,
                              int spread_width = kDefaultSpreadWidth, int refine_passes = 1);
  static MethodParams from_damping(std::size_t size, int eta, double damping_a,
                                   int spread_width = kDefaultSpreadWidth,
                                   int refine_passes = 1);

  std::size_t oversampled_size() const noexcept { return size * static_cast<std::size_t>(eta); }
};

}  // namespace lnfft
