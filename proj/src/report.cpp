#include "oddfactor/report.hpp"

#include <cmath>

namespace oddfactor {

using nlohmann::json;

double round_to(double value, int precision) {
  const double scale = std::pow(10.0, precision);
  const double r = std::round(value * scale) / scale;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

json to_json(const Spectrum& s, int precision) {
  json values = json::array();
  for (double v : s.values) values.push_back(round_to(v, precision));
  return {{"values", values}, {"tol", s.tol}};
}

json to_json(const ThresholdParams& p, int precision) {
  return {{"r", p.r},
          {"b", p.b},
          {"ceil_rb", p.ceil_rb},
          {"epsilon", p.epsilon},
          {"eta", p.eta},
          {"x", p.x},
          {"parity_case", to_string(p.parity_case)},
          {"rho", round_to(p.rho, precision)}};
}

json to_json(const FactorCertificate& c) {
  json edges = json::array();
  for (const auto& e : c.edges) edges.push_back({e.u, e.v});
  return {{"kind", "factor"}, {"edges", edges}};
}

json to_json(const AmahashiViolation& v) {
  json comps = json::array();
  for (const auto& c : v.odd_components) comps.push_back(std::vector<Vertex>(c.begin(), c.end()));
  return {{"kind", "violation"},
          {"S", std::vector<Vertex>(v.s.begin(), v.s.end())},
          {"o", v.o},
          {"bound", v.bound},
          {"odd_components", comps}};
}

json to_json(const TrialReport& t, int precision) {
  json out = {{"r", t.r},
              {"b", t.b},
              {"n", t.n},
              {"seed", t.seed},
              {"lambda3", round_to(t.lambda3, precision)},
              {"rho", round_to(t.rho, precision)},
              {"implication_applicable", t.implication_applicable},
              {"factor_found", t.factor_found}};
  if (t.certificate) out["certificate"] = to_json(*t.certificate);
  return out;
}

json to_json(const SharpnessResult& s, int precision) {
  json out = {{"params", to_json(s.params, precision)},
              {"degenerate", s.degenerate},
              {"pass", s.pass}};
  if (s.degenerate) return out;
  out["lambda1"] = round_to(s.lambda1, precision);
  out["order"] = s.order;
  out["twice_edges"] = s.twice_edges;
  out["low_degree_vertices"] = s.low_degree_vertices;
  out["structure_ok"] = s.structure_ok;
  out["equitable"] = s.equitable;
  if (s.quotient_lambda1) out["quotient_lambda1"] = round_to(*s.quotient_lambda1, precision);
  return out;
}

json to_json(const Case2Result& c, int precision) {
  json points = json::array();
  for (const auto& p : c.points)
    points.push_back({{"t", p.t},
                      {"m12", p.m12},
                      {"direct", round_to(p.direct, precision)},
                      {"factored", round_to(p.factored, precision)}});
  return {{"params", to_json(c.params, precision)}, {"points", points}, {"pass", c.pass}};
}

json to_json(const CampaignSummary& s, int precision) {
  json cex = json::array();
  for (const auto& c : s.counterexamples)
    cex.push_back({{"trial", c.trial},
                   {"report", to_json(c.report, precision)},
                   {"edge_list", c.edge_list}});
  return {{"trials", s.trials},
          {"applicable", s.applicable},
          {"found", s.found},
          {"inapplicable", s.inapplicable},
          {"counterexamples", cex}};
}

}  // namespace oddfactor
