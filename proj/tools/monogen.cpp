// Command-line front end: run ensemble optimizations, build and export
// near-zonal bases, evaluate basis functions, and execute the verification
// suite.  All file output is deterministic (fixed key order, 17 significant
// digits); commands that write files also write a <out>.manifest.json run
// manifest.
//
// Exit codes: 0 success; 1 verification failure; 2 bad flags or malformed
// input; 3 optimizer produced no converged start; 4 singular Gram matrix.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mono/harmonics.hpp"
#include "mono/monogenics.hpp"
#include "mono/near_zonal.hpp"
#include "mono/qlinalg.hpp"
#include "mono/serialize.hpp"
#include "mono/sphere.hpp"
#include "mono/sphere_opt.hpp"
#include "mono/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// MONO_THREADS caps restart parallelism; 0 lets the library pick.
int thread_cap_from_env(int requested) {
  const char* env = std::getenv("MONO_THREADS");
  if (env == nullptr) return requested;
  const int cap = std::atoi(env);
  if (cap <= 0) return requested;
  if (requested <= 0) return cap;
  return std::min(requested, cap);
}

mono::BasisKind parse_kind(const std::string& kind) {
  return kind == "harmonic" ? mono::BasisKind::kHarmonic
                            : mono::BasisKind::kMonogenic;
}

void write_manifest(const std::string& command, const std::string& config_json,
                    const std::string& input_content,
                    const std::vector<std::string>& outputs,
                    double wall_time_seconds, bool pass) {
  mono::RunManifest manifest;
  manifest.command = command;
  manifest.config_json = config_json;
  manifest.content_hash =
      mono::sha1_hex(command + "\n" + config_json + "\n" + input_content);
  manifest.outputs = outputs;
  manifest.wall_time_seconds = wall_time_seconds;
  manifest.pass = pass;
  mono::write_file(outputs.front() + ".manifest.json",
                   mono::manifest_json(manifest));
}

struct OptimizeArgs {
  std::string kind = "harmonic";
  int k = 1;
  int starts = 1;
  std::uint64_t seed = 0;
  std::string out;
  int max_iters = 500;
  double tol = 1e-10;
  bool greedy = false;
  int threads = 0;
};

int run_optimize(const OptimizeArgs& args) {
  const auto start_time = Clock::now();

  mono::OptimizerConfig config;
  config.kind = parse_kind(args.kind);
  config.k = args.k;
  config.starts = args.starts;
  config.seed = args.seed;
  config.max_iters = args.max_iters;
  config.grad_tol = args.tol;
  config.greedy = args.greedy;
  config.threads = thread_cap_from_env(args.threads);

  const mono::MultiStartResult result = mono::optimize(config);
  if (result.converged_count == 0) {
    std::cerr << "optimize: no start converged within " << args.max_iters
              << " sweeps\n";
    return 3;
  }

  mono::write_file(args.out, mono::optimize_result_json(config, result));

  mono::JsonWriter cfg;
  cfg.begin_object();
  cfg.key("kind");
  cfg.value(std::string_view(args.kind));
  cfg.key("k");
  cfg.value(args.k);
  cfg.key("starts");
  cfg.value(args.starts);
  cfg.key("seed");
  cfg.value(args.seed);
  cfg.key("max_iters");
  cfg.value(args.max_iters);
  cfg.key("tol");
  cfg.value(args.tol);
  cfg.key("greedy");
  cfg.value(args.greedy);
  cfg.end_object();
  write_manifest("optimize", cfg.str(), "", {args.out},
                 seconds_since(start_time), true);

  std::cout << mono::format_double(result.best.objective) << "\n";
  return 0;
}

struct BasisArgs {
  std::string kind = "harmonic";
  int k = 1;
  std::string points_path;
  std::string out;
  std::string format = "cartesian";
};

int run_basis(const BasisArgs& args) {
  const auto start_time = Clock::now();
  const mono::BasisKind kind = parse_kind(args.kind);
  const mono::PointsFormat format = args.format == "spherical"
                                        ? mono::PointsFormat::kSpherical
                                        : mono::PointsFormat::kCartesian;

  const std::string input_content = mono::read_file(args.points_path);
  const std::vector<mono::Vec3> points =
      mono::parse_points_text(input_content, format);
  if (points.empty()) {
    std::cerr << "basis: points file '" << args.points_path << "' is empty\n";
    return 2;
  }

  std::string bundle;
  if (kind == mono::BasisKind::kHarmonic) {
    const mono::ZonalHarmonicBasis basis =
        mono::zonal_harmonic_basis(args.k, points);
    // Deviation of Z_t from its zonal term, in the Gram quadratic form
    // (real case: row/column symmetric).
    std::vector<double> deviations;
    const std::size_t n = basis.eta.size();
    for (std::size_t t = 0; t < n; ++t) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == t) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == t) continue;
          acc += basis.coefficients(i, t) * basis.gram(i, j) *
                 basis.coefficients(j, t);
        }
      }
      deviations.push_back(acc);
    }
    bundle = mono::harmonic_bundle_json(
        basis, mono::objective(kind, args.k, basis.eta), deviations);
  } else {
    const mono::NearZonalBasis basis = mono::build_near_zonal(args.k, points);
    std::vector<double> deviations;
    for (int t = 0; t <= args.k; ++t) {
      deviations.push_back(mono::zonality_deviation(basis, t));
    }
    bundle = mono::monogenic_bundle_json(
        basis, mono::objective(kind, args.k, basis.eta), deviations);
  }
  mono::write_file(args.out, bundle);

  mono::JsonWriter cfg;
  cfg.begin_object();
  cfg.key("kind");
  cfg.value(std::string_view(args.kind));
  cfg.key("k");
  cfg.value(args.k);
  cfg.key("points");
  cfg.value(std::string_view(args.points_path));
  cfg.key("format");
  cfg.value(std::string_view(args.format));
  cfg.end_object();
  write_manifest("basis", cfg.str(), input_content, {args.out},
                 seconds_since(start_time), true);
  return 0;
}

struct EvalArgs {
  std::string kind = "harmonic";
  int k = 1;
  int n = 0;
  double theta = 0.0;
  double phi = 0.0;
  bool normalized = false;
};

int run_eval(const EvalArgs& args) {
  const mono::SpherePoint p = mono::SpherePoint::from_angles(args.theta, args.phi);
  mono::JsonWriter w;
  w.begin_object();
  w.key("kind");
  w.value(std::string_view(args.kind));
  w.key("k");
  w.value(args.k);
  w.key("n");
  w.value(args.n);
  w.key("theta");
  w.value(args.theta);
  w.key("phi");
  w.value(args.phi);
  w.key("value");
  if (parse_kind(args.kind) == mono::BasisKind::kHarmonic) {
    if (args.n > 2 * args.k) {
      std::cerr << "eval: harmonic index n must satisfy 0 <= n <= 2k\n";
      return 2;
    }
    w.value(mono::eval_H(args.k, args.n, p));
  } else {
    if (args.n > args.k) {
      std::cerr << "eval: monogenic index n must satisfy 0 <= n <= k\n";
      return 2;
    }
    const mono::Multivector3 value =
        args.normalized ? mono::eval_F_normalized(args.k, args.n, p)
                        : mono::eval_F(args.k, args.n, p);
    mono::write_multivector(w, value);
  }
  w.end_object();
  std::cout << w.str() << "\n";
  return 0;
}

struct VerifyArgs {
  int k_max = 6;
  int quad_deg = 0;
  std::uint64_t seed = 12345;
  std::string json_path;
  bool inject_clifford_fault = false;
};

int run_verify(const VerifyArgs& args) {
  const auto start_time = Clock::now();

  mono::VerifyOptions options;
  options.k_max = args.k_max;
  options.quad_deg = args.quad_deg;
  options.seed = args.seed;
  options.inject_clifford_fault = args.inject_clifford_fault;

  const std::vector<mono::CheckResult> checks = mono::run_verification(options);

  std::vector<std::string> failed;
  for (const mono::CheckResult& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name
              << " (max_err " << mono::format_double(c.max_err) << ", tol "
              << mono::format_double(c.tolerance) << ")";
    if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << "\n";
    if (!c.pass) failed.push_back(c.name);
  }

  if (!args.json_path.empty()) {
    mono::JsonWriter w;
    w.begin_object();
    w.key("k_max");
    w.value(args.k_max);
    w.key("quad_deg");
    w.value(args.quad_deg);
    w.key("seed");
    w.value(args.seed);
    w.key("checks");
    w.begin_array();
    for (const mono::CheckResult& c : checks) {
      w.begin_object();
      w.key("name");
      w.value(std::string_view(c.name));
      w.key("pass");
      w.value(c.pass);
      w.key("max_err");
      w.value(c.max_err);
      w.key("tolerance");
      w.value(c.tolerance);
      w.key("detail");
      w.value(std::string_view(c.detail));
      w.end_object();
    }
    w.end_array();
    w.key("pass");
    w.value(failed.empty());
    w.end_object();
    mono::write_file(args.json_path, w.str());

    mono::JsonWriter cfg;
    cfg.begin_object();
    cfg.key("k_max");
    cfg.value(args.k_max);
    cfg.key("quad_deg");
    cfg.value(args.quad_deg);
    cfg.key("seed");
    cfg.value(args.seed);
    cfg.end_object();
    write_manifest("verify", cfg.str(), "", {args.json_path},
                   seconds_since(start_time), failed.empty());
  }

  if (!failed.empty()) {
    std::cerr << "verify: " << failed.size() << " check(s) failed:";
    for (const std::string& name : failed) std::cerr << " " << name;
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spherical harmonic / monogenic basis construction and verification"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"harmonic", "monogenic"};

  OptimizeArgs opt;
  CLI::App* cmd_optimize = app.add_subcommand(
      "optimize", "Multi-start projected gradient descent on S^2 ensembles");
  cmd_optimize->add_option("--kind", opt.kind, "Basis kind")
      ->required()
      ->check(CLI::IsMember(kinds));
  cmd_optimize->add_option("--k", opt.k, "Basis degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_optimize->add_option("--starts", opt.starts, "Number of random starts")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_optimize->add_option("--seed", opt.seed, "Random seed")->required();
  cmd_optimize->add_option("--out", opt.out, "Output JSON path")->required();
  cmd_optimize->add_option("--max-iters", opt.max_iters, "Max sweeps per start")
      ->check(CLI::PositiveNumber);
  cmd_optimize->add_option("--tol", opt.tol, "Stationarity tolerance")
      ->check(CLI::PositiveNumber);
  cmd_optimize->add_flag("--greedy", opt.greedy,
                         "Best-single-move sweeps instead of cyclic");
  cmd_optimize->add_option("--threads", opt.threads,
                           "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  BasisArgs basis;
  CLI::App* cmd_basis = app.add_subcommand(
      "basis", "Build an orthonormal (near-)zonal basis from a point file");
  cmd_basis->add_option("--kind", basis.kind, "Basis kind")
      ->required()
      ->check(CLI::IsMember(kinds));
  cmd_basis->add_option("--k", basis.k, "Basis degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_basis->add_option("--points", basis.points_path, "Points JSON file")
      ->required();
  cmd_basis->add_option("--out", basis.out, "Output JSON path")->required();
  cmd_basis->add_option("--format", basis.format, "Points file format")
      ->check(CLI::IsMember({"cartesian", "spherical"}));

  EvalArgs eval;
  CLI::App* cmd_eval = app.add_subcommand(
      "eval", "Evaluate one basis function at a sphere point");
  cmd_eval->add_option("--kind", eval.kind, "Basis kind")
      ->required()
      ->check(CLI::IsMember(kinds));
  cmd_eval->add_option("--k", eval.k, "Basis degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_eval->add_option("--n", eval.n, "Index within the degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_eval->add_option("--theta", eval.theta, "Azimuth")->required();
  cmd_eval->add_option("--phi", eval.phi, "Polar angle")->required();
  cmd_eval->add_flag("--normalized", eval.normalized,
                     "Unit L^2 norm (monogenic only)");

  VerifyArgs verify;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run the named verification checks");
  cmd_verify->add_option("--k-max", verify.k_max, "Largest degree exercised")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--quad-deg", verify.quad_deg,
                         "Quadrature degree override (<= 0: per-check)");
  cmd_verify->add_option("--seed", verify.seed, "Random seed");
  cmd_verify->add_option("--json", verify.json_path, "Write a JSON report");
  cmd_verify
      ->add_flag("--inject-clifford-fault", verify.inject_clifford_fault,
                 "Corrupt a local product table copy (mutation smoke test)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_optimize)) return run_optimize(opt);
    if (app.got_subcommand(cmd_basis)) return run_basis(basis);
    if (app.got_subcommand(cmd_eval)) return run_eval(eval);
    return run_verify(verify);
  } catch (const mono::SingularGramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
