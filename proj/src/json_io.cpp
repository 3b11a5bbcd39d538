#include "nzi/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace nzi {

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json histogram_json(const Histogram& h) {
  Json out = Json::object();
  for (const auto& [value, count] : h) out[std::to_string(value)] = count;
  return out;
}

Json to_json(const DegreeProfile& p) {
  Json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["m1"] = p.m1;
  j["deg"] = p.deg;
  j["nbr_deg"] = p.nbr_deg;
  j["dist2_deg"] = p.dist2_deg;
  j["deg_hist"] = histogram_json(p.deg_hist);
  j["nbr_hist"] = histogram_json(p.nbr_hist);
  j["dist2_hist"] = histogram_json(p.dist2_hist);
  j["delta_min"] = p.delta_min;
  j["delta_max"] = p.delta_max;
  j["d2_min"] = p.d2_min;
  j["d2_max"] = p.d2_max;
  return j;
}

Json to_json(const IndexReport& r) {
  Json j;
  j["direct"] = round12(r.direct);
  j["via_part1"] = round12(r.via_part1);
  j["via_part2"] = round12(r.via_part2);
  j["residual1"] = round12(r.residual1);
  j["residual2"] = round12(r.residual2);
  j["s_alpha"] = round12(r.s_alpha);
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["source"] = std::string(to_string(r.source));
  j["part"] = r.part;
  j["regime"] = r.regime ? Json(std::string(to_string(*r.regime))) : Json(nullptr);
  j["direction"] = std::string(to_string(r.direction));
  j["bound"] = round12(r.bound);
  j["computed"] = round12(r.computed);
  j["slack"] = round12(r.slack);
  j["tolerance"] = round12(r.tolerance);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["tight"] = r.tight;
  return j;
}

Json to_json(const CongruenceData& c) {
  Json j;
  j["excess"] = c.excess;
  j["gap"] = c.gap;
  j["q"] = c.q;
  j["r"] = c.r;
  j["n_delta_max"] = c.n_delta_max;
  j["is_bi_degree_case"] = c.is_bi_degree_case;
  j["part2_hypothesis"] = c.part2_hypothesis;
  j["part2_constraints_hold"] = c.part2_constraints_hold ? Json(*c.part2_constraints_hold) : Json(nullptr);
  return j;
}

Json to_json(const SpectralResult& s) {
  Json j;
  j["rho"] = round12(s.rho);
  j["rho_squared"] = round12(s.rho_squared);
  j["iterations"] = s.iterations;
  j["residual"] = round12(s.residual);
  j["bound_ylt"] = round12(s.bound_ylt);
  j["bound_thm41"] = round12(s.bound_thm41);
  return j;
}

Json to_json(const VerificationFailure& f) {
  Json j;
  j["graph"] = f.graph;
  j["check"] = f.check;
  j["alpha"] = f.alpha ? Json(round12(*f.alpha)) : Json(nullptr);
  j["expected"] = round12(f.expected);
  j["got"] = round12(f.got);
  j["detail"] = f.detail;
  return j;
}

// elapsed_seconds is deliberately left out: reports must be byte-identical
// across runs. Callers print timing separately.
Json to_json(const VerificationReport& r) {
  Json j;
  j["n_range"] = {r.n_min, r.n_max};
  Json alphas = Json::array();
  for (double a : r.alpha_set) alphas.push_back(round12(a));
  j["alpha_set"] = alphas;
  j["graphs_checked"] = r.graphs_checked;
  Json per_n = Json::object();
  for (const auto& [n, c] : r.graphs_per_n) per_n[std::to_string(n)] = c;
  j["graphs_per_n"] = per_n;
  Json runs = Json::object();
  for (const auto& [name, c] : r.checks_run) runs[name] = c;
  j["checks_run"] = runs;
  Json skips = Json::object();
  for (const auto& [name, reasons] : r.skips) {
    Json by_reason = Json::object();
    for (const auto& [reason, c] : reasons) by_reason[reason] = c;
    skips[name] = by_reason;
  }
  j["skips"] = skips;
  j["failure_count"] = r.failure_count;
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  j["failures"] = failures;
  j["passed"] = r.passed();
  return j;
}

Json to_json(const ExtremalRecord& e) {
  Json j;
  j["graph"] = e.graph;
  j["bound_source"] = std::string(to_string(e.bound_source));
  j["alpha"] = round12(e.alpha);
  j["bound"] = round12(e.bound);
  j["computed"] = round12(e.computed);
  j["slack"] = round12(e.slack);
  j["tolerance"] = round12(e.tolerance);
  j["structural_match"] = e.structural_match;
  return j;
}

}  // namespace nzi
