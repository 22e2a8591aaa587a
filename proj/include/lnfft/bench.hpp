#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lnfft/baselines.hpp"
#include "lnfft/flops.hpp"
#include "lnfft/types.hpp"

namespace lnfft {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Method { GE, CG, NFFT, RNFFT };

std::string_view method_name(Method method) noexcept;
/// Accepts GE, CG, NFFT, R-NFFT (case-insensitive, "RNFFT" too).
std::optional<Method> parse_method(std::string_view name);

/// Stream seed of one Monte-Carlo trial.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return seed ^ trial;
}

struct Trial {
  NonuniformGrid grid;
  CVector amplitudes;
};

/// t_p = p/P + u_p with u_p uniform on [0, jitter_max/P], amplitudes
/// circular complex Gaussian of unit variance.
///
/// Stream: mt19937_64 seeded with `seed`; uniforms are (x >> 11)·2^-53;
/// Gaussians use Box-Muller. P jitters are drawn first, then P amplitudes
/// (real part, imaginary part).
Trial generate_trial(std::size_t size, std::uint64_t seed, double jitter_max);

/// ‖truth - estimate‖ / ‖truth‖. Errc::ZeroReference for a zero truth.
double relative_error(std::span<const Complex> truth, std::span<const Complex> estimate);
double to_db(double linear) noexcept;

/// Logarithmic sweep with `points` values from `lo` to `hi` inclusive.
std::vector<double> log_sweep(double lo, double hi, std::size_t points);

struct TrialConfig {
  std::string figure = "custom";
  std::vector<std::size_t> sizes{1024};
  std::vector<int> nfft_etas{1};
  std::vector<int> rnfft_etas{1};
  std::vector<double> mus = log_sweep(1e-18, 1e-4, 29);
  /// When non-empty, swept instead of `mus` (the row's mu is then derived).
  std::vector<double> dampings;
  int trials = 10;
  std::uint64_t seed = 20240601;
  std::vector<Method> methods{Method::GE, Method::CG, Method::NFFT};
  double jitter_max = 0.6;
  SystemType type = SystemType::Type4;
  int spread_width = kDefaultSpreadWidth;
  int refine_passes = 1;
  PhaseEvaluation phase = PhaseEvaluation::Direct;
  CgOptions cg;
  /// GE is solved numerically up to this size; above it only its analytic
  /// flop count is reported (status "flops-only").
  std::size_t ge_max_size = 1024;
};

struct ResultRow {
  std::string figure;
  std::size_t size = 0;
  int eta = 0;                 // 0 for GE and CG
  double mu = 0.0;             // NaN for GE and CG
  double damping_a = 0.0;      // NaN for GE and CG
  Method method = Method::NFFT;
  int trial = 0;
  double error_linear = 0.0;   // NaN unless status == "ok"
  double error_db = 0.0;
  FlopReport flops;
  std::size_t cg_iterations = 0;
  std::uint64_t seed = 0;
  bool selected = false;
  std::string status = "ok";
};

/// Runs every (P, trial, method[, η, μ]) combination of the config. Ground
/// truth is the generated amplitude vector; the right-hand side comes from
/// the direct sums. Library errors (invalid μ, overflow, non-convergence)
/// are recorded in `status` instead of aborting the sweep.
std::vector<ResultRow> run_sweep(const TrialConfig& config);

/// Marks, for each (P, η, method) of the NFFT-type methods, the rows of the
/// μ with the lowest mean error in dB over trials where every trial
/// succeeded. GE and CG rows are always selected.
void select_best_mu(std::vector<ResultRow>& rows);

/// Defaults behind each figure: fig1, fig2, fig3, fig6, fig7.
/// Errc::InvalidArgument for an unknown name.
TrialConfig figure_config(std::string_view figure);

/// CSV with a leading '#' metadata line; numbers use 17 significant digits.
void write_csv(std::ostream& out, const TrialConfig& config, std::span<const ResultRow> rows);

}  // namespace lnfft
