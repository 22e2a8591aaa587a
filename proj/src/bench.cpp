#include "lnfft/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <tuple>

#include "lnfft/error.hpp"
#include "lnfft/inverse.hpp"
#include "lnfft/nfft.hpp"

namespace lnfft {

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::GE: return "GE";
    case Method::CG: return "CG";
    case Method::NFFT: return "NFFT";
    case Method::RNFFT: return "R-NFFT";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (s == "GE") return Method::GE;
  if (s == "CG") return Method::CG;
  if (s == "NFFT") return Method::NFFT;
  if (s == "RNFFT") return Method::RNFFT;
  return std::nullopt;
}

namespace {

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Box-Muller pair of standard normals.
std::pair<double, double> gaussian_pair(std::mt19937_64& gen) {
  double u1 = uniform01(gen);
  while (u1 == 0.0) u1 = uniform01(gen);
  const double u2 = uniform01(gen);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

}  // namespace

Trial generate_trial(std::size_t size, std::uint64_t seed, double jitter_max) {
  if (size < 2) throw Error(Errc::InvalidArgument, "P must be >= 2");
  if (!(jitter_max >= 0.0 && jitter_max < 1.0))
    throw Error(Errc::InvalidArgument, "jitter_max must lie in [0, 1)");
  std::mt19937_64 gen(seed);
  const double n = static_cast<double>(size);
  std::vector<double> t(size);
  for (std::size_t p = 0; p < size; ++p)
    t[p] = static_cast<double>(p) / n + uniform01(gen) * jitter_max / n;
  CVector amps(size);
  const double scale = std::sqrt(0.5);
  for (auto& a : amps) {
    const auto [re, im] = gaussian_pair(gen);
    a = Complex(scale * re, scale * im);
  }
  return Trial{validate_grid(t), std::move(amps)};
}

double relative_error(std::span<const Complex> truth, std::span<const Complex> estimate) {
  if (truth.size() != estimate.size())
    throw Error(Errc::LengthMismatch, "truth and estimate differ in length");
  long double num = 0.0L;
  long double den = 0.0L;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    num += std::norm(truth[i] - estimate[i]);
    den += std::norm(truth[i]);
  }
  if (den == 0.0L) throw Error(Errc::ZeroReference, "reference vector has zero norm");
  return static_cast<double>(std::sqrt(num / den));
}

double to_db(double linear) noexcept { return 20.0 * std::log10(linear); }

std::vector<double> log_sweep(double lo, double hi, std::size_t points) {
  if (points == 0) return {};
  if (points == 1) return {lo};
  std::vector<double> out(points);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
  return out;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool wants(const TrialConfig& config, Method m) {
  return std::find(config.methods.begin(), config.methods.end(), m) != config.methods.end();
}

void set_error(ResultRow& row, std::span<const Complex> truth, std::span<const Complex> est) {
  row.error_linear = relative_error(truth, est);
  row.error_db = to_db(row.error_linear);
}

ResultRow base_row(const TrialConfig& config, std::size_t size, int trial, Method method,
                   std::uint64_t seed) {
  ResultRow row;
  row.figure = config.figure;
  row.size = size;
  row.mu = kNaN;
  row.damping_a = kNaN;
  row.method = method;
  row.trial = trial;
  row.error_linear = kNaN;
  row.error_db = kNaN;
  row.seed = seed;
  return row;
}

void run_inverse(const TrialConfig& config, const Trial& trial, std::span<const Complex> rhs,
                 std::size_t size, int trial_index, std::uint64_t seed,
                 std::vector<ResultRow>& rows) {
  const bool type4_system = config.type == SystemType::Type4;
  std::map<int, std::pair<bool, bool>> plan_for;  // eta -> (plain, refined)
  if (wants(config, Method::NFFT))
    for (int eta : config.nfft_etas) plan_for[eta].first = true;
  if (wants(config, Method::RNFFT))
    for (int eta : config.rnfft_etas) plan_for[eta].second = true;

  const bool by_damping = !config.dampings.empty();
  const auto& knobs = by_damping ? config.dampings : config.mus;
  for (const auto& [eta, which] : plan_for) {
    for (double knob : knobs) {
      const double mu = by_damping ? truncation_ratio(knob, size, eta) : knob;
      std::vector<Method> methods;
      if (which.first) methods.push_back(Method::NFFT);
      if (which.second) methods.push_back(Method::RNFFT);
      std::vector<ResultRow> out;
      for (Method m : methods) {
        auto row = base_row(config, size, trial_index, m, seed);
        row.eta = eta;
        row.mu = mu;
        out.push_back(std::move(row));
      }
      try {
        MethodParams params =
            by_damping ? MethodParams::from_damping(size, eta, knob, config.spread_width,
                                                    config.refine_passes)
                       : MethodParams::from_mu(size, eta, mu, config.spread_width,
                                               config.refine_passes);
        params.phase = config.phase;
        for (auto& row : out) row.damping_a = params.damping_a;
        FlopCounter build;
        const InversePlan plan(trial.grid, params, &build);
        for (auto& row : out) {
          try {
            FlopCounter flops = build;
            CVector est;
            if (row.method == Method::NFFT)
              est = type4_system ? type4(plan, rhs, &flops) : type5(plan, rhs, &flops);
            else
              est = type4_system ? refine_type4(plan, rhs, config.refine_passes, &flops)
                                 : refine_type5(plan, rhs, config.refine_passes, &flops);
            row.flops = flops.report();
            set_error(row, trial.amplitudes, est);
          } catch (const Error& e) {
            row.status = std::string(to_string(e.code()));
          }
        }
      } catch (const Error& e) {
        for (auto& row : out) row.status = std::string(to_string(e.code()));
      }
      for (auto& row : out) rows.push_back(std::move(row));
    }
  }
}

}  // namespace

std::vector<ResultRow> run_sweep(const TrialConfig& config) {
  if (config.trials < 1) throw Error(Errc::InvalidArgument, "trials must be >= 1");
  std::vector<ResultRow> rows;
  for (std::size_t size : config.sizes) {
    for (int t = 0; t < config.trials; ++t) {
      const std::uint64_t seed = trial_seed(config.seed, static_cast<std::uint64_t>(t));
      const Trial trial = generate_trial(size, seed, config.jitter_max);
      const CVector rhs = config.type == SystemType::Type4
                              ? nfft_type1_direct(trial.grid, trial.amplitudes, size)
                              : nfft_type2_direct(trial.amplitudes, trial.grid);

      if (wants(config, Method::GE)) {
        auto row = base_row(config, size, t, Method::GE, seed);
        row.selected = true;
        if (size <= config.ge_max_size) {
          try {
            FlopCounter flops;
            const CVector est = ge_solve(make_system(trial.grid, rhs, config.type), &flops);
            row.flops = flops.report();
            set_error(row, trial.amplitudes, est);
          } catch (const Error& e) {
            row.status = std::string(to_string(e.code()));
          }
        } else {
          FlopCounter flops;
          charge_ge(size, flops);
          row.flops = flops.report();
          row.status = "flops-only";
        }
        rows.push_back(std::move(row));
      }

      if (wants(config, Method::CG)) {
        auto row = base_row(config, size, t, Method::CG, seed);
        row.selected = true;
        try {
          FlopCounter flops;
          CgOptions opts = config.cg;
          opts.spread_width = config.spread_width;
          const CgResult res = cg_solve(trial.grid, rhs, config.type, opts, &flops);
          row.flops = flops.report();
          row.cg_iterations = res.iterations;
          set_error(row, trial.amplitudes, res.solution);
          if (!res.converged) row.status = "MaxIterations";
        } catch (const Error& e) {
          row.status = std::string(to_string(e.code()));
        }
        rows.push_back(std::move(row));
      }

      run_inverse(config, trial, rhs, size, t, seed, rows);
    }
  }
  select_best_mu(rows);
  return rows;
}

void select_best_mu(std::vector<ResultRow>& rows) {
  using Key = std::tuple<std::string, std::size_t, int, Method>;
  struct Stats {
    double sum = 0.0;
    int count = 0;
    bool failed = false;
  };
  std::map<Key, std::map<double, Stats>> groups;
  for (const auto& row : rows) {
    if (row.method == Method::GE || row.method == Method::CG) continue;
    auto& s = groups[{row.figure, row.size, row.eta, row.method}][row.mu];
    if (row.status == "ok") {
      s.sum += row.error_db;
      ++s.count;
    } else {
      s.failed = true;
    }
  }
  std::map<Key, double> best;
  for (const auto& [key, by_mu] : groups) {
    double best_mean = std::numeric_limits<double>::infinity();
    std::optional<double> best_mu;
    for (const auto& [mu, s] : by_mu) {
      if (s.failed || s.count == 0) continue;
      const double mean = s.sum / s.count;
      if (mean < best_mean) {
        best_mean = mean;
        best_mu = mu;
      }
    }
    if (best_mu) best[key] = *best_mu;
  }
  for (auto& row : rows) {
    if (row.method == Method::GE || row.method == Method::CG) continue;
    const auto it = best.find({row.figure, row.size, row.eta, row.method});
    row.selected = it != best.end() && it->second == row.mu;
  }
}

TrialConfig figure_config(std::string_view figure) {
  TrialConfig c;
  c.figure = std::string(figure);
  if (figure == "fig1") {
    c.nfft_etas = {1, 2, 3, 4, 6, 15, 20};
    c.methods = {Method::GE, Method::CG, Method::NFFT};
  } else if (figure == "fig2") {
    c.rnfft_etas = {1, 2};
    c.methods = {Method::GE, Method::CG, Method::RNFFT};
  } else if (figure == "fig3") {
    c.sizes = {64, 128, 256, 512, 1024, 2048, 4096, 8192};
    c.rnfft_etas = {1};
    c.methods = {Method::GE, Method::CG, Method::RNFFT};
  } else if (figure == "fig6") {
    // Flop counts do not depend on μ; one value valid for both η is enough.
    c.sizes = {64, 128, 256, 512, 1024, 2048, 4096, 8192};
    c.nfft_etas = {6};
    c.rnfft_etas = {1};
    c.mus = {1e-14};
    c.methods = {Method::GE, Method::CG, Method::NFFT, Method::RNFFT};
  } else if (figure == "fig7") {
    c.nfft_etas.clear();
    for (int eta = 1; eta <= 20; ++eta) c.nfft_etas.push_back(eta);
    c.mus = {1e-14};
    c.methods = {Method::GE, Method::CG, Method::NFFT};
  } else {
    throw Error(Errc::InvalidArgument, "unknown figure '" + std::string(figure) +
                                           "' (expected fig1, fig2, fig3, fig6 or fig7)");
  }
  return c;
}

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const TrialConfig& config, std::span<const ResultRow> rows) {
  out << "# lnfft " << kVersion << " seed=" << config.seed
      << " error_db=20*log10(relative_l2_error) type="
      << (config.type == SystemType::Type4 ? 4 : 5) << " jitter=" << num(config.jitter_max)
      << " spread=" << config.spread_width << " passes=" << config.refine_passes << " phase="
      << (config.phase == PhaseEvaluation::Direct ? "direct" : "reduced")
      << " cg_tol=" << num(config.cg.tol) << '\n';
  out << "figure,P,eta,mu,damping_a,method,trial,error_linear,error_db,total_flops,"
         "cg_iterations,seed,selected,status\n";
  for (const auto& r : rows) {
    out << r.figure << ',' << r.size << ',' << r.eta << ',' << num(r.mu) << ','
        << num(r.damping_a) << ',' << method_name(r.method) << ',' << r.trial << ','
        << num(r.error_linear) << ',' << num(r.error_db) << ',' << r.flops.total_flops << ','
        << r.cg_iterations << ',' << r.seed << ',' << (r.selected ? 1 : 0) << ',' << r.status
        << '\n';
  }
}

}  // namespace lnfft
