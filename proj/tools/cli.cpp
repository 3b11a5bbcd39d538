#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nzi/bounds.hpp"
#include "nzi/degree_profile.hpp"
#include "nzi/enumeration.hpp"
#include "nzi/error.hpp"
#include "nzi/graph.hpp"
#include "nzi/indices.hpp"
#include "nzi/json_io.hpp"
#include "nzi/spectral.hpp"

namespace nzi::cli {

namespace {

// Slack for rho^2 comparisons; power iteration stops on a 1e-10 change of
// the Rayleigh quotient.
constexpr double kSpectralSlack = 1e-7;

const std::vector<double> kDefaultSweepAlphas = {-1.0, 0.5, 2.0, 3.0};

struct RunConfig {
  std::string command;
  std::string input_path = "-";
  std::string format;  // empty: infer from the file extension
  std::vector<double> alpha;
  std::size_t n_max = 5;
  std::size_t n = 0;
  std::string source;
  double tolerance = 1e-9;
  std::string output = "json";
  bool dedup = false;
  bool allow_n8 = false;
  unsigned jobs = 1;
};

// Non-Error failures that map to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Alpha> validated_alphas(const std::vector<double>& values) {
  std::vector<Alpha> out;
  out.reserve(values.size());
  for (double v : values) out.emplace_back(v);
  return out;
}

Graph load_graph(const RunConfig& cfg, std::istream& in) {
  std::string text;
  if (cfg.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(cfg.input_path);
    if (!file) throw UsageError("cannot open input '" + cfg.input_path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  std::string format = cfg.format;
  if (format.empty()) {
    format = cfg.input_path.ends_with(".g6") || cfg.input_path.ends_with(".graph6") ? "graph6" : "edges";
  }
  if (format == "graph6") {
    // First non-empty line.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
    }
    return parse_graph6("");
  }
  return parse_edge_list(text);
}

Json inapplicable(const Error& e) {
  Json j;
  j["applicable"] = false;
  j["reason"] = std::string(to_string(e.code()));
  return j;
}

template <class F>
Json attempt(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Precondition) throw;
    return inapplicable(e);
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_compute(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto alphas = validated_alphas(cfg.alpha);
  const Graph g = load_graph(cfg, in);
  const DegreeProfile p = degree_profile(g);
  const auto diam = diameter(g);

  if (cfg.output == "csv") {
    out << "vertex,deg,nbr_deg,dist2_deg\n";
    for (std::size_t u = 0; u < g.order(); ++u) {
      out << u << ',' << p.deg[u] << ',' << p.nbr_deg[u] << ',' << p.dist2_deg[u] << '\n';
    }
    return kOk;
  }

  Json j;
  j["command"] = "compute";
  j["n"] = p.n;
  j["m"] = p.m;
  j["m1"] = p.m1;
  j["connected"] = diam.has_value();
  j["diameter"] = diam ? Json(*diam) : Json(nullptr);
  j["profile"] = to_json(p);
  Json per_alpha = Json::array();
  for (const auto& a : alphas) {
    Json e;
    e["alpha"] = round12(a.value());
    e["nm_alpha"] = round12(general_neighborhood_zagreb(p, a));
    e["theorem32"] = attempt([&] { return to_json(index_report(p, a)); });
    e["nm2_alpha"] = attempt([&] { return Json(round12(two_distance_index(p, a))); });
    e["theorem42"] = attempt([&] {
      const double direct = two_distance_index(p, a);
      const double part1 = nm2_via_theorem42(g, p, a, 1);
      const double part2 = nm2_via_theorem42(g, p, a, 2);
      Json t;
      t["direct"] = round12(direct);
      t["via_part1"] = round12(part1);
      t["via_part2"] = round12(part2);
      t["residual1"] = round12(std::abs(part1 - direct));
      t["residual2"] = round12(std::abs(part2 - direct));
      return t;
    });
    per_alpha.push_back(std::move(e));
  }
  j["alphas"] = std::move(per_alpha);
  emit(out, j);
  return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto alphas = validated_alphas(cfg.alpha);
  const Graph g = load_graph(cfg, in);
  const DegreeProfile p = degree_profile(g);

  Json j;
  j["command"] = "bounds";
  j["n"] = p.n;
  j["m"] = p.m;
  j["m1"] = p.m1;
  j["delta_min"] = p.delta_min;
  j["delta_max"] = p.delta_max;
  j["nbr_hist"] = histogram_json(p.nbr_hist);
  j["congruence"] = attempt([&] { return to_json(theorem35_classify(p)); });
  Json per_alpha = Json::array();
  for (const auto& a : alphas) {
    Json e;
    e["alpha"] = round12(a.value());
    e["corollary33_s"] = attempt([&] { return to_json(corollary33_bound_s(p, a, cfg.tolerance)); });
    e["corollary33_unit"] = attempt([&] { return to_json(corollary33_bound_unit(p, a, cfg.tolerance)); });
    e["theorem35"] = attempt([&] { return to_json(theorem35_bound(p, a, cfg.tolerance)); });
    per_alpha.push_back(std::move(e));
  }
  j["alphas"] = std::move(per_alpha);
  emit(out, j);
  return kOk;
}

int cmd_spectral(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const SpectralResult s = spectral_report(g);
  const double eq_tol = scaled_tolerance(s.rho_squared, cfg.tolerance);

  Json j;
  j["command"] = "spectral";
  const Json body = to_json(s);
  for (const auto& [key, value] : body.items()) j[key] = value;
  j["ylt_holds"] = s.rho_squared + kSpectralSlack >= s.bound_ylt;
  j["thm41_holds"] = s.rho_squared + kSpectralSlack >= s.bound_thm41;
  j["ylt_equality"] = std::abs(s.rho_squared - s.bound_ylt) <= eq_tol;
  j["thm41_equality"] = std::abs(s.rho_squared - s.bound_thm41) <= eq_tol;
  emit(out, j);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto alphas = validated_alphas(cfg.alpha.empty() ? kDefaultSweepAlphas : cfg.alpha);
  check_sweep_order(cfg.n_max, cfg.allow_n8);
  VerifyOptions opts;
  opts.rel_tol = cfg.tolerance;
  opts.jobs = cfg.jobs;
  opts.allow_n8 = cfg.allow_n8;
  opts.dedup = cfg.dedup;
  const VerificationReport report = verify_all(cfg.n_max, alphas, opts);

  Json j;
  j["command"] = "verify";
  const Json body = to_json(report);
  for (const auto& [key, value] : body.items()) j[key] = value;
  emit(out, j);
  err << "verify: " << report.graphs_checked << " graphs in " << report.elapsed_seconds << " s\n";
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_extremal(const RunConfig& cfg, std::ostream& out) {
  const BoundSource source = parse_bound_source(cfg.source);
  const auto alphas = validated_alphas(cfg.alpha);
  check_sweep_order(cfg.n, cfg.allow_n8);

  std::vector<ExtremalRecord> records;
  for (const auto& a : alphas) {
    auto found = find_equality_graphs(cfg.n, a, source, cfg.tolerance, cfg.allow_n8);
    records.insert(records.end(), found.begin(), found.end());
  }
  std::stable_sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
    return std::tie(x.graph, x.alpha) < std::tie(y.graph, y.alpha);
  });

  Json j;
  j["command"] = "extremal";
  j["n"] = cfg.n;
  j["source"] = std::string(to_string(source));
  Json list = Json::array();
  for (const auto& r : records) list.push_back(to_json(r));
  j["records"] = std::move(list);
  emit(out, j);
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Usage:
      return kUsage;
    case ErrorKind::Precondition:
      return kPrecondition;
    case ErrorKind::Numerical:
      return kNoConvergence;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Neighborhood-degree Zagreb indices, bounds, and spectral radius checks", "nzi"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input_path, "Graph file, or - for standard input");
    sub->add_option("--format", cfg.format, "Input format (default: graph6 for .g6 files, else edges)")
        ->check(CLI::IsMember({"edges", "graph6"}));
  };
  auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "Exponent; repeatable")->allow_extra_args(false);
  };
  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", cfg.tolerance, "Relative comparison tolerance")->check(CLI::PositiveNumber);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* compute = app.add_subcommand("compute", "Degree profiles, indices, and their reconstructions");
  add_input(compute);
  add_alpha(compute);
  add_tolerance(compute);
  add_output(compute);

  auto* bounds = app.add_subcommand("bounds", "Evaluate every applicable bound on the index");
  add_input(bounds);
  add_alpha(bounds);
  add_tolerance(bounds);
  add_output(bounds);

  auto* spectral = app.add_subcommand("spectral", "Spectral radius and its two lower bounds");
  add_input(spectral);
  add_tolerance(spectral);
  add_output(spectral);

  auto* verify = app.add_subcommand("verify", "Exhaustive check over all connected graphs up to --n-max");
  add_alpha(verify);
  add_tolerance(verify);
  add_output(verify);
  verify->add_option("--n-max", cfg.n_max, "Largest vertex count to sweep");
  verify->add_flag("--dedup", cfg.dedup, "One graph per isomorphism class");
  verify->add_flag("--allow-n8", cfg.allow_n8, "Permit n = 8 (268M edge masks)");
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* extremal = app.add_subcommand("extremal", "Graphs attaining a bound with equality");
  add_alpha(extremal);
  add_tolerance(extremal);
  add_output(extremal);
  extremal->add_option("--n", cfg.n, "Vertex count")->required();
  extremal->add_option("--source", cfg.source, "corollary33_s, corollary33_unit, theorem35 or theorem41")->required();
  extremal->add_flag("--allow-n8", cfg.allow_n8, "Permit n = 8");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if ((cfg.command == "compute" || cfg.command == "bounds" || cfg.command == "extremal") && cfg.alpha.empty()) {
    cfg.alpha = {2.0};
  }
  if (cfg.output == "csv" && cfg.command != "compute") {
    err << "error: --output csv is only available for compute\n";
    return kUsage;
  }

  try {
    if (cfg.command == "compute") return cmd_compute(cfg, in, out);
    if (cfg.command == "bounds") return cmd_bounds(cfg, in, out);
    if (cfg.command == "spectral") return cmd_spectral(cfg, in, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    return cmd_extremal(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace nzi::cli
