// postsel: leakage bounds and coverage simulations for post-selection inference.
//
// Subcommands: audit, bound {gaussian, finite-message, transfer}, calibrate,
// sharpness, simulate [table1], exact-coverage. Structured output is JSON;
// simulate also offers a markdown table. Exit codes: 0 success, 1
// computational error, 2 input validation or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "postsel/audit.hpp"
#include "postsel/bounds.hpp"
#include "postsel/errors.hpp"
#include "postsel/json_io.hpp"
#include "postsel/sharpness.hpp"
#include "postsel/simulate.hpp"

namespace {

using nlohmann::json;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw postsel::ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  const std::string text = read_all(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw postsel::ValidationError("parse error in '" + path + "': " + e.what());
  }
}

std::string human(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_coverage_table(const std::vector<postsel::CoverageReport>& rows) {
  std::cout << "| Screening design | Empirical coverage | Monte Carlo s.e. | Exact coverage |\n";
  std::cout << "|---|---|---|---|\n";
  for (const auto& r : rows) {
    std::cout << "| " << r.design.name() << " | " << human(r.coverage) << " | "
              << human(r.mc_se) << " | "
              << (r.exact_coverage ? human(*r.exact_coverage) : std::string("-")) << " |\n";
  }
}

struct SimulateOptions {
  std::string design;
  double tau = 0.25;
  int coordinate = 1;
  int n = 400, p = 50, reps = 10000;
  double alpha = 0.05;
  std::uint64_t seed = 42;
  int threads = 0;
  std::string format = "markdown";
};

int run_simulate(const SimulateOptions& opt, bool is_table1) {
  if (is_table1) {
    const auto rows = postsel::table1(opt.seed, opt.reps, opt.threads);
    if (opt.format == "json") {
      json out{{"seed", opt.seed}, {"reps", opt.reps}, {"rows", json::array()}};
      for (const auto& r : rows) out["rows"].push_back(postsel::to_json(r));
      print_json(out);
    } else {
      print_coverage_table(rows);
    }
    return 0;
  }
  postsel::SimulationConfig cfg;
  cfg.n = opt.n;
  cfg.p = opt.p;
  cfg.alpha = opt.alpha;
  cfg.reps = opt.reps;
  cfg.seed = opt.seed;
  if (opt.design == "fixed") {
    cfg.design = postsel::ScreeningDesign::fixed_coordinate(opt.coordinate);
  } else if (opt.design == "same") {
    cfg.design = postsel::ScreeningDesign::same_sample();
  } else if (opt.design == "split") {
    cfg.design = postsel::ScreeningDesign::split_sample();
  } else if (opt.design == "noisy") {
    cfg.design = postsel::ScreeningDesign::noisy(opt.tau);
  } else {
    throw postsel::ValidationError("unknown design '" + opt.design + "'");
  }
  postsel::CoverageReport report = postsel::run_simulation(cfg, opt.threads);
  if (cfg.design.kind == postsel::ScreeningDesign::Kind::FixedCoordinate) {
    report.exact_coverage = 1.0 - cfg.alpha;
  } else if (cfg.design.kind == postsel::ScreeningDesign::Kind::SameSample) {
    report.exact_coverage = postsel::exact_same_sample_coverage(cfg.p, cfg.alpha);
  }
  if (opt.format == "json") {
    print_json(postsel::to_json(report));
  } else {
    print_coverage_table({report});
  }
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Information-leakage bounds and coverage simulations for post-selection inference"};
  app.require_subcommand(1);

  // audit
  auto* audit = app.add_subcommand("audit", "Exact leakage audit of a finite joint model");
  std::string audit_file;
  std::optional<double> alpha_override;
  audit->add_option("model", audit_file, "JointModel JSON file ('-' for stdin)")->required();
  audit->add_option("--alpha", alpha_override,
                    "Fixed-target level; must be >= the model's own fixed-target noncoverage");

  // bound group
  auto* bound = app.add_subcommand("bound", "Closed-form noncoverage bounds");
  bound->require_subcommand(1);

  auto* gauss = bound->add_subcommand("gaussian", "Gaussian noisy-screening bound");
  double g_alpha = 0.0, g_tau = 0.0, g_trace = 0.0;
  std::size_t g_q = 0;
  std::string g_sigma_file;
  gauss->add_option("--alpha", g_alpha, "Fixed-target level")->required();
  gauss->add_option("--tau", g_tau, "Noise standard deviation")->required();
  auto* g_sigma_opt = gauss->add_option("--sigma", g_sigma_file, "Covariance JSON file");
  auto* g_q_opt = gauss->add_option("--q", g_q, "Summary dimension (trace variant)");
  gauss->add_option("--trace", g_trace, "Trace cap v (trace variant)")->needs(g_q_opt);
  g_q_opt->excludes(g_sigma_opt);

  auto* fmsg = bound->add_subcommand("finite-message", "Finite-message screening bound");
  double f_alpha = 0.0, f_entropy = -1.0;
  std::uint64_t f_alphabet = 0;
  fmsg->add_option("--alpha", f_alpha, "Fixed-target level")->required();
  auto* f_ent_opt = fmsg->add_option("--entropy", f_entropy, "Message entropy in nats");
  fmsg->add_option("--alphabet", f_alphabet, "Message alphabet size")->excludes(f_ent_opt);

  auto* transfer = bound->add_subcommand("transfer", "Asymptotic validity transfer bound");
  double t_alpha = 0.0, t_r = 0.0, t_eta = 0.0;
  transfer->add_option("--alpha", t_alpha, "Fixed-target level")->required();
  transfer->add_option("--r", t_r, "Fixed-target slack r")->required();
  transfer->add_option("--eta", t_eta, "Mutual-information budget eta")->required();

  // calibrate
  auto* calibrate = app.add_subcommand("calibrate", "Noise scale for a target leakage epsilon");
  std::size_t c_q = 1;
  double c_trace = 0.0, c_epsilon = 0.0;
  std::string c_sigma_file;
  auto* c_sigma_opt = calibrate->add_option("--sigma", c_sigma_file, "Covariance JSON file");
  auto* c_q_opt = calibrate->add_option("--q", c_q, "Summary dimension")->excludes(c_sigma_opt);
  calibrate->add_option("--trace", c_trace, "Trace cap v")->needs(c_q_opt);
  calibrate->add_option("--epsilon", c_epsilon, "Target leakage term")->required();

  // sharpness
  auto* sharp = app.add_subcommand("sharpness", "Build and certify the bound-attaining instance");
  double s_alpha = 0.0, s_delta = 0.0;
  sharp->add_option("--alpha", s_alpha, "Fixed-target level, in (0, 1/2]")->required();
  sharp->add_option("--delta", s_delta, "Leakage delta, in [0, alpha]")->required();

  // simulate (+ table1)
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo coverage for a screening design");
  SimulateOptions sim;
  auto* table1_cmd = simulate->add_subcommand("table1", "Run all six designs");
  table1_cmd->add_option("--reps", sim.reps, "Replications per design");
  table1_cmd->add_option("--seed", sim.seed, "RNG seed");
  table1_cmd->add_option("--threads", sim.threads, "Worker threads (0 = auto)");
  table1_cmd->add_option("--format", sim.format, "markdown or json")
      ->check(CLI::IsMember({"markdown", "json"}));
  simulate->add_option("--design", sim.design, "fixed, same, split, or noisy")
      ->check(CLI::IsMember({"fixed", "same", "split", "noisy"}));
  simulate->add_option("--tau", sim.tau, "Noise scale for the noisy design");
  simulate->add_option("--j", sim.coordinate, "Coordinate for the fixed design (1-based)");
  simulate->add_option("--n", sim.n, "Sample size");
  simulate->add_option("--p", sim.p, "Number of coordinates");
  simulate->add_option("--alpha", sim.alpha, "Nominal level");
  simulate->add_option("--reps", sim.reps, "Replications");
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = auto)");
  simulate->add_option("--format", sim.format, "markdown or json")
      ->check(CLI::IsMember({"markdown", "json"}));

  // exact-coverage
  auto* exact = app.add_subcommand("exact-coverage", "Closed-form same-sample coverage");
  int e_p = 50;
  double e_alpha = 0.05;
  std::string e_format = "text";
  exact->add_option("--p", e_p, "Number of coordinates")->required();
  exact->add_option("--alpha", e_alpha, "Nominal level")->required();
  exact->add_option("--format", e_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  if (*audit) {
    json j = parse_json_file(audit_file);
    // accept either a bare JointModel or a wrapper carrying one under "model"
    if (j.contains("model") && !j.contains("joint")) j = j["model"];
    const postsel::JointModel model = postsel::joint_model_from_json(j);
    print_json(postsel::audit_model(model, alpha_override));
    return 0;
  }

  if (*gauss) {
    postsel::BoundReport report = [&] {
      if (!g_sigma_file.empty()) {
        const auto sigma = postsel::symmetric_matrix_from_json(parse_json_file(g_sigma_file));
        return postsel::gaussian_noncoverage_bound(
            g_alpha, postsel::CovarianceSpec::full(sigma), g_tau);
      }
      if (g_q_opt->count() == 0) {
        throw postsel::ValidationError("bound gaussian: provide --sigma or --q with --trace");
      }
      return postsel::gaussian_noncoverage_bound(
          g_alpha, postsel::CovarianceSpec::trace_bound(g_q, g_trace), g_tau);
    }();
    print_json(postsel::to_json(report));
    return 0;
  }

  if (*fmsg) {
    if (f_ent_opt->count() == 0 && f_alphabet == 0) {
      throw postsel::ValidationError("bound finite-message: provide --entropy or --alphabet");
    }
    const postsel::BoundReport report =
        f_ent_opt->count() > 0 ? postsel::finite_message_bound(f_alpha, f_entropy)
                               : postsel::finite_message_alphabet_bound(f_alpha, f_alphabet);
    print_json(postsel::to_json(report));
    return 0;
  }

  if (*transfer) {
    print_json(postsel::to_json(postsel::asymptotic_transfer(t_alpha, t_r, t_eta)));
    return 0;
  }

  if (*calibrate) {
    double tau;
    json inputs{{"epsilon", c_epsilon}};
    if (!c_sigma_file.empty()) {
      const auto sigma = postsel::symmetric_matrix_from_json(parse_json_file(c_sigma_file));
      tau = postsel::calibrate_tau(sigma, c_epsilon);
      inputs["q"] = sigma.dim();
      inputs["variant"] = "full";
    } else {
      if (c_q_opt->count() == 0 || c_trace <= 0.0) {
        throw postsel::ValidationError("calibrate: provide --sigma or --q with --trace");
      }
      tau = postsel::calibrate_tau(c_q, c_trace, c_epsilon);
      inputs["q"] = c_q;
      inputs["trace_cap"] = c_trace;
      inputs["variant"] = "trace";
    }
    print_json(json{{"tau", tau}, {"inputs", inputs}});
    return 0;
  }

  if (*sharp) {
    const auto instance = postsel::build_sharpness_instance(s_alpha, s_delta);
    const auto cert = postsel::certify_sharpness(instance);
    json out = postsel::to_json(instance);
    out["certification"] = postsel::to_json(cert);
    print_json(out);
    return 0;
  }

  if (*simulate) {
    if (*table1_cmd) return run_simulate(sim, true);
    if (sim.design.empty()) {
      throw postsel::ValidationError("simulate: --design is required (or use 'simulate table1')");
    }
    return run_simulate(sim, false);
  }

  if (*exact) {
    const double value = postsel::exact_same_sample_coverage(e_p, e_alpha);
    if (e_format == "json") {
      print_json(json{{"p", e_p}, {"alpha", e_alpha}, {"exact_coverage", value}});
    } else {
      std::cout << human(value) << "\n";
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const postsel::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const postsel::ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
