#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lnfft/bench.hpp"
#include "lnfft/error.hpp"
#include "lnfft/inverse.hpp"
#include "lnfft/io.hpp"
#include "lnfft/nfft.hpp"
#include "oracles.hpp"
#include "selfcheck.hpp"

using namespace lnfft;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

constexpr double kRoundTripThreshold = 1e-9;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::OutOfRange:
    case Errc::DuplicateNode:
    case Errc::NonPositiveDamping:
    case Errc::InvalidArgument:
    case Errc::NonFinite:
    case Errc::LengthMismatch:
    case Errc::SizeMismatch:
      return kExitParse;
    default:
      return kExitNumeric;
  }
}

struct MethodFlags {
  int eta = 2;
  std::optional<double> mu;
  std::optional<double> damping;
  int spread = kDefaultSpreadWidth;
  int passes = 1;
  bool reduced_phase = false;
};

void add_method_flags(CLI::App* cmd, MethodFlags& f) {
  cmd->add_option("--eta", f.eta, "Oversampling factor of the log-kernel series")
      ->check(CLI::PositiveNumber);
  auto* mu = cmd->add_option("--mu", f.mu, "Truncation ratio (default 1e-15)");
  auto* a = cmd->add_option("--a", f.damping, "Imaginary shift (damping) instead of --mu");
  mu->excludes(a);
  cmd->add_option("--spread", f.spread, "Gridding half-width m")->check(CLI::PositiveNumber);
  cmd->add_option("--passes", f.passes, "Refinement passes for types 4 and 5")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--reduced-phase", f.reduced_phase,
                "Reduce the kernel-sample phase constant in extended precision");
}

MethodParams make_params(const MethodFlags& f, std::size_t size) {
  MethodParams p = f.damping ? MethodParams::from_damping(size, f.eta, *f.damping, f.spread,
                                                          f.passes)
                             : MethodParams::from_mu(size, f.eta, f.mu.value_or(1e-15),
                                                     f.spread, f.passes);
  p.phase = f.reduced_phase ? PhaseEvaluation::Reduced : PhaseEvaluation::Direct;
  return p;
}

std::string default_output(const std::string& name) {
  if (const char* dir = std::getenv("LNFFT_OUTPUT_DIR"); dir && *dir)
    return std::string(dir) + "/" + name;
  return {};
}

struct TransformArgs {
  int type = 0;
  std::string grid;
  std::string data;
  std::string out;
  std::optional<std::size_t> modes;
  bool verify = false;
  MethodFlags method;
};

int cmd_transform(const TransformArgs& args) {
  const auto instants = read_reals_file(args.grid);
  const NonuniformGrid grid = validate_grid(instants);
  const CVector data = read_vector_file(args.data);
  require_finite(data, "data");

  CVector result;
  CVector round_trip;  // forward image of the result, compared with the input
  CVector reference;   // direct evaluation, compared with the result
  switch (args.type) {
    case 1: {
      if (data.size() != grid.size())
        throw Error(Errc::LengthMismatch, "type 1 needs one amplitude per instant");
      const std::size_t modes = args.modes.value_or(grid.size());
      result = nfft_type1(grid, data, modes, args.method.spread);
      if (args.verify) reference = nfft_type1_direct(grid, data, modes);
      break;
    }
    case 2:
      result = nfft_type2(data, grid, args.method.spread);
      if (args.verify) reference = nfft_type2_direct(data, grid);
      break;
    case 4: {
      const InversePlan plan(grid, make_params(args.method, grid.size()));
      result = refine_type4(plan, data, args.method.passes);
      if (args.verify) round_trip = nfft_type1_direct(grid, result, grid.size());
      break;
    }
    case 5: {
      const InversePlan plan(grid, make_params(args.method, grid.size()));
      result = refine_type5(plan, data, args.method.passes);
      if (args.verify) round_trip = nfft_type2_direct(result, grid);
      break;
    }
    default:
      throw Error(Errc::InvalidArgument, "--type must be 1, 2, 4 or 5");
  }

  if (args.out.empty() || args.out == "-")
    write_vector(std::cout, result);
  else
    write_vector_file(args.out, result);

  if (args.verify) {
    const bool inverse = args.type >= 4;
    const double r = inverse ? relative_error(data, round_trip) : relative_error(reference, result);
    std::fprintf(stderr, "%s residual: %.3e (threshold %.0e)\n",
                 inverse ? "round-trip" : "direct-sum", r, kRoundTripThreshold);
    if (!(r <= kRoundTripThreshold)) return kExitVerify;
  }
  return kExitOk;
}

struct BenchArgs {
  std::string figure;
  std::vector<std::size_t> sizes;
  std::vector<int> etas;
  std::vector<double> mus;
  std::vector<double> dampings;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> methods;
  std::optional<double> jitter;
  std::optional<int> spread;
  std::optional<int> passes;
  std::optional<int> type;
  std::optional<std::size_t> ge_max;
  bool reduced_phase = false;
  std::string out;
};

void print_summary(const std::vector<ResultRow>& rows) {
  struct Acc {
    double sum = 0.0;
    int n = 0;
    double mu = 0.0;
    double flops = 0.0;
  };
  std::map<std::tuple<std::size_t, std::string, int>, Acc> acc;
  for (const auto& r : rows) {
    if (!r.selected || r.status != "ok") continue;
    auto& a = acc[{r.size, std::string(method_name(r.method)), r.eta}];
    a.sum += r.error_db;
    a.flops += static_cast<double>(r.flops.total_flops);
    a.mu = r.mu;
    ++a.n;
  }
  for (const auto& [key, a] : acc) {
    const auto& [size, name, eta] = key;
    std::fprintf(stderr, "P=%-5zu %-7s", size, name.c_str());
    if (eta > 0) std::fprintf(stderr, " eta=%-2d best mu=%-9.3g", eta, a.mu);
    else std::fprintf(stderr, "%25s", "");
    std::fprintf(stderr, " mean error %8.1f dB  mean flops %.4g\n", a.sum / a.n, a.flops / a.n);
  }
}

int cmd_bench(const BenchArgs& args) {
  TrialConfig config = figure_config(args.figure);
  if (!args.sizes.empty()) config.sizes = args.sizes;
  if (!args.etas.empty()) config.nfft_etas = config.rnfft_etas = args.etas;
  if (!args.mus.empty()) config.mus = args.mus;
  if (!args.dampings.empty()) config.dampings = args.dampings;
  if (args.trials) config.trials = *args.trials;
  if (args.seed) config.seed = *args.seed;
  if (!args.methods.empty()) {
    config.methods.clear();
    for (const auto& m : args.methods) {
      const auto parsed = parse_method(m);
      if (!parsed) throw Error(Errc::Parse, "unknown method '" + m + "'");
      config.methods.push_back(*parsed);
    }
  }
  if (args.jitter) config.jitter_max = *args.jitter;
  if (args.spread) config.spread_width = *args.spread;
  if (args.passes) config.refine_passes = *args.passes;
  if (args.type) {
    if (*args.type != 4 && *args.type != 5) throw Error(Errc::InvalidArgument, "--type must be 4 or 5");
    config.type = *args.type == 4 ? SystemType::Type4 : SystemType::Type5;
  }
  if (args.ge_max) config.ge_max_size = *args.ge_max;
  if (args.reduced_phase) config.phase = PhaseEvaluation::Reduced;

  const auto rows = run_sweep(config);
  const std::string path = args.out.empty() ? default_output(args.figure + ".csv") : args.out;
  if (path.empty() || path == "-") {
    write_csv(std::cout, config, rows);
  } else {
    std::ofstream file(path);
    if (!file) throw Error(Errc::Parse, "cannot write '" + path + "'");
    write_csv(file, config, rows);
    std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(), path.c_str());
  }
  print_summary(rows);
  return kExitOk;
}

int cmd_verify(const std::string& level, const std::string& fault) {
  selfcheck::Options options;
  options.level = level == "full" ? selfcheck::Level::Full : selfcheck::Level::Quick;
  if (!fault.empty()) {
    if (fault != "damping") throw Error(Errc::Parse, "unknown fault '" + fault + "'");
    options.corrupt_damping = true;
  }
  const auto results = selfcheck::run(options);
  const selfcheck::CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    std::printf("%s  %-74s %10.3g <= %-8.3g %s\n", r.passed ? "ok  " : "FAIL", r.name.c_str(),
                r.measured, r.tolerance, r.detail.c_str());
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    std::printf("verify failed: %s\n", first_failure->name.c_str());
    return kExitVerify;
  }
  std::printf("verify %s: %zu checks passed\n", level.c_str(), results.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonuniform FFTs via the Lagrange interpolation formula"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "Apply one transform to vectors on disk");
  transform->add_option("--type", targs.type, "1, 2 (forward) or 4, 5 (inverse)")
      ->required()
      ->check(CLI::IsMember({1, 2, 4, 5}));
  transform->add_option("--grid", targs.grid, "Instants in [0,1), one per line")
      ->required()
      ->check(CLI::ExistingFile);
  transform->add_option("--data", targs.data, "Input vector, one 're im' pair per line")
      ->required()
      ->check(CLI::ExistingFile);
  transform->add_option("--out", targs.out, "Output vector file (stdout if omitted)");
  transform->add_option("--modes", targs.modes, "Number of output modes for type 1");
  transform->add_flag("--verify", targs.verify,
                      "Check the result against direct summation and report the residual");
  add_method_flags(transform, targs.method);

  BenchArgs bargs;
  auto* bench = app.add_subcommand("bench", "Monte-Carlo sweep behind one figure, as CSV");
  bench->add_option("figure", bargs.figure, "fig1, fig2, fig3, fig6 or fig7")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig6", "fig7"}));
  bench->add_option("--p", bargs.sizes, "Problem sizes")->delimiter(',');
  bench->add_option("--eta", bargs.etas, "Oversampling factors")->delimiter(',');
  auto* bmu = bench->add_option("--mu", bargs.mus, "Truncation ratios to sweep")->delimiter(',');
  auto* ba = bench->add_option("--a", bargs.dampings, "Dampings to sweep instead of --mu")
                 ->delimiter(',');
  bmu->excludes(ba);
  bench->add_option("--trials", bargs.trials, "Monte-Carlo trials per point")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bargs.seed, "Base seed");
  bench->add_option("--method", bargs.methods, "GE, CG, NFFT, R-NFFT")->delimiter(',');
  bench->add_option("--jitter", bargs.jitter, "Maximum jitter in units of 1/P")
      ->check(CLI::Range(0.0, 0.999999));
  bench->add_option("--spread", bargs.spread, "Gridding half-width m")->check(CLI::PositiveNumber);
  bench->add_option("--passes", bargs.passes, "Refinement passes")->check(CLI::NonNegativeNumber);
  bench->add_option("--type", bargs.type, "Inverse type, 4 or 5");
  bench->add_option("--ge-max", bargs.ge_max, "Largest P solved numerically by GE");
  bench->add_flag("--reduced-phase", bargs.reduced_phase,
                  "Reduce the kernel-sample phase constant in extended precision");
  bench->add_option("--out", bargs.out, "CSV path (default $LNFFT_OUTPUT_DIR/<figure>.csv or stdout)");

  std::string level = "quick";
  std::string fault;
  auto* verify = app.add_subcommand("verify", "Run the oracle self-checks at P <= 64");
  verify->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*transform) return cmd_transform(targs);
    if (*bench) return cmd_bench(bargs);
    if (*verify) return cmd_verify(level, fault);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.code());
  }
  return kExitOk;
}
