#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <deque>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oddfactor/error.hpp"
#include "oddfactor/factor.hpp"
#include "oddfactor/graph.hpp"
#include "oddfactor/report.hpp"
#include "oddfactor/spectral.hpp"
#include "oddfactor/thresholds.hpp"
#include "oddfactor/verify.hpp"

namespace oddfactor::cli {

namespace {

using nlohmann::json;

int parse_int(std::string_view s, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorKind::InvalidArgument, "bad " + what + ": \"" + std::string(s) + "\"");
  return value;
}

// "K5", "C7", "E3", "M4" or "H:r=5,b=1".
Graph graph_from_spec(const std::string& spec) {
  if (spec.rfind("H:", 0) == 0) {
    int r = -1, b = -1;
    std::stringstream fields(spec.substr(2));
    std::string field;
    while (std::getline(fields, field, ',')) {
      if (field.rfind("r=", 0) == 0) r = parse_int(field.substr(2), "r in graph spec");
      else if (field.rfind("b=", 0) == 0) b = parse_int(field.substr(2), "b in graph spec");
      else throw Error(ErrorKind::InvalidArgument, "unknown field in graph spec: " + field);
    }
    return build_extremal(threshold_params(r, b));
  }
  if (spec.size() < 2) throw Error(ErrorKind::InvalidArgument, "bad graph spec: \"" + spec + "\"");
  const int k = parse_int(std::string_view(spec).substr(1), "size in graph spec");
  switch (spec[0]) {
    case 'K': return complete(k);
    case 'C': return cycle(k);
    case 'E': return empty(k);
    case 'M': return matching_complement(k);
    default: throw Error(ErrorKind::InvalidArgument, "bad graph spec: \"" + spec + "\"");
  }
}

struct Options {
  std::string input;
  std::string graph_spec;
  std::string output;
  std::string format;
  std::string b_policy = "all";
  int r = 0;
  int b = 1;
  int r_max = 60;
  int precision = kDefaultPrecision;
  double tol = kDefaultEigenTol;
  int max_n = kDefaultAmahashiMaxN;
  int max_edges = kDefaultFinderMaxEdges;
  CampaignConfig campaign;
  std::string campaign_policy = "all";
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  Graph load_graph(const Options& o) const {
    if (!o.graph_spec.empty()) return graph_from_spec(o.graph_spec);
    std::string text;
    if (o.input.empty() || o.input == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(o.input);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + o.input);
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    return parse_edge_list(text);
  }

  void emit(const Options& o, const std::string& text) const {
    if (o.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(o.output);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.output);
    file << text;
  }

  void emit_json(const Options& o, const json& j) const { emit(o, j.dump() + "\n"); }

  std::string fixed(double v, int precision) const {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << round_to(v, precision);
    return s.str();
  }

  int construct(const Options& o) const {
    Graph g = o.graph_spec.empty() ? build_extremal(threshold_params(o.r, o.b))
                                   : graph_from_spec(o.graph_spec);
    emit(o, o.format == "dot" ? to_dot(g) : serialize_edge_list(g));
    return kOk;
  }

  int spectrum(const Options& o) const {
    const Graph g = load_graph(o);
    const Spectrum s = adjacency_spectrum(g, o.tol);
    if (o.format == "text") {
      std::string text;
      for (double v : s.values) text += fixed(v, o.precision) + "\n";
      emit(o, text);
    } else {
      emit_json(o, to_json(s, o.precision));
    }
    return kOk;
  }

  int threshold(const Options& o) const {
    const auto p = threshold_params(o.r, o.b);
    const auto prior = prior_1factor_thresholds(o.r);
    const double lwy = lwy_threshold(o.r, o.b);
    if (o.format == "text") {
      std::ostringstream s;
      s << "r=" << p.r << " b=" << p.b << " ceil_rb=" << p.ceil_rb << " epsilon=" << p.epsilon
        << " eta=" << p.eta << " case=" << to_string(p.parity_case) << "\n"
        << "rho=" << fixed(p.rho, o.precision) << "\n"
        << "lwy=" << fixed(lwy, o.precision) << "\n"
        << "cgh=" << fixed(prior.cgh, o.precision) << "\n"
        << "bh=" << fixed(prior.bh, o.precision) << "\n";
      emit(o, s.str());
      return kOk;
    }
    json j = to_json(p, o.precision);
    j["lwy"] = round_to(lwy, o.precision);
    j["cgh"] = round_to(prior.cgh, o.precision);
    j["bh"] = round_to(prior.bh, o.precision);
    emit_json(o, j);
    return kOk;
  }

  int check(const Options& o) const {
    const Graph g = load_graph(o);
    if (auto v = check_amahashi(g, o.b, o.max_n)) {
      emit_json(o, to_json(*v));
      return kNoFactor;
    }
    emit_json(o, json{{"kind", "holds"}});
    return kOk;
  }

  int find_factor(const Options& o) const {
    const Graph g = load_graph(o);
    if (auto cert = find_odd_factor(g, o.b, {o.max_edges})) {
      if (!verify_certificate(g, o.b, *cert))
        throw Error(ErrorKind::Internal, "factor search returned an invalid certificate");
      emit_json(o, to_json(*cert));
      return kOk;
    }
    if (g.order() <= o.max_n) {
      auto v = check_amahashi(g, o.b, o.max_n);
      if (!v) throw Error(ErrorKind::Internal, "no factor found but every subset passes");
      emit_json(o, to_json(*v));
    } else {
      emit_json(o, json{{"kind", "none"}});
    }
    return kNoFactor;
  }

  int sharpness(const Options& o) const {
    const auto res = sharpness_check(o.r, o.b);
    emit_json(o, to_json(res, o.precision));
    if (res.degenerate) {
      err_ << "no extremal construction for r=" << o.r << ", b=" << o.b << " (eta="
           << res.params.eta << ")\n";
      return kUsage;
    }
    return res.pass ? kOk : kTheoremViolation;
  }

  int case2(const Options& o) const {
    const auto res = case2_polynomial_check(o.r, o.b);
    emit_json(o, to_json(res, o.precision));
    return res.pass ? kOk : kTheoremViolation;
  }

  int sweep(const Options& o) const {
    const auto rows = bound_sweep(o.r_max, policy(o.b_policy));
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& row : rows) {
        json j = {{"r", row.r},
                  {"b", row.b},
                  {"ceil_rb", row.ceil_rb},
                  {"epsilon", row.epsilon},
                  {"eta", row.eta},
                  {"rho", round_to(row.rho, o.precision)},
                  {"lwy", round_to(row.lwy, o.precision)},
                  {"rho_ge_lwy", row.rho_ge_lwy}};
        if (row.cgh) j["cgh"] = round_to(*row.cgh, o.precision);
        if (row.bh) j["bh"] = round_to(*row.bh, o.precision);
        if (row.lambda1_H) j["lambda1_H"] = round_to(*row.lambda1_H, o.precision);
        arr.push_back(j);
      }
      emit_json(o, arr);
    } else {
      emit(o, sweep_csv(rows, o.precision));
    }
    return kOk;
  }

  int campaign(Options o) const {
    o.campaign.b_policy = policy(o.campaign_policy);
    const auto summary = randomized_theorem_campaign(o.campaign);
    emit_json(o, to_json(summary, o.precision));
    if (!summary.counterexamples.empty()) {
      err_ << summary.counterexamples.size() << " counterexample(s) to the lambda_3 criterion\n";
      return kTheoremViolation;
    }
    return kOk;
  }

 private:
  static BPolicy policy(const std::string& name) {
    return name == "one" ? BPolicy::OnlyOne : BPolicy::AllOdd;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  Runner runner(in, out, err);
  std::function<int()> action;

  CLI::App app{"Odd [1,b]-factors in regular graphs: thresholds, constructions, and checks",
               "oddfactor"};
  app.require_subcommand(1);

  auto add_graph_input = [&](CLI::App* cmd) {
    auto* input = cmd->add_option("--input,-i", o.input, "Edge-list file (default: stdin)");
    cmd->add_option("--graph,-g", o.graph_spec, "Construction spec: K5, C7, E3, M4, H:r=5,b=1")
        ->excludes(input);
  };
  std::deque<std::string> format_slots;
  auto add_output = [&](CLI::App* cmd, std::vector<std::string> formats) {
    std::string* slot = &format_slots.emplace_back(formats.front());
    cmd->add_option("--format,-f", *slot, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--output,-o", o.output, "Write results to a file instead of stdout");
    cmd->add_option("--precision", o.precision, "Decimal places for floating output")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();
    return slot;
  };
  auto add_r_b = [&](CLI::App* cmd, bool r_required) {
    auto* r = cmd->add_option("--r", o.r, "Regularity r (>= 3)")->check(CLI::Range(3, 1000));
    if (r_required) r->required();
    cmd->add_option("--b", o.b, "Odd upper degree bound b")->capture_default_str();
  };

  auto* construct = app.add_subcommand("construct", "Emit H_{r,eta} or a standard graph");
  construct->add_option("--graph,-g", o.graph_spec, "Construction spec: K5, C7, E3, M4, H:r=5,b=1");
  add_r_b(construct, false);
  auto* construct_fmt = add_output(construct, {"text", "dot"});
  construct->callback([&, construct_fmt] {
    o.format = *construct_fmt;
    action = [&] {
      if (o.graph_spec.empty() && o.r == 0)
        throw CLI::ValidationError("construct", "give --graph or --r/--b");
      return runner.construct(o);
    };
  });

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum of a graph");
  add_graph_input(spectrum);
  spectrum->add_option("--tol", o.tol, "Eigensolver tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* spectrum_fmt = add_output(spectrum, {"json", "text"});
  spectrum->callback([&, spectrum_fmt] { o.format = *spectrum_fmt; action = [&] { return runner.spectrum(o); }; });

  auto* threshold = app.add_subcommand("threshold", "Print rho(r,b) and the earlier bounds");
  add_r_b(threshold, true);
  auto* threshold_fmt = add_output(threshold, {"json", "text"});
  threshold->callback([&, threshold_fmt] { o.format = *threshold_fmt; action = [&] { return runner.threshold(o); }; });

  auto* check = app.add_subcommand("check", "Exhaustive o(G-S) <= b|S| check");
  add_graph_input(check);
  check->add_option("--b", o.b, "Odd upper degree bound b")->capture_default_str();
  check->add_option("--max-n", o.max_n, "Largest order for subset enumeration")
      ->check(CLI::Range(0, 63))
      ->capture_default_str();
  auto* check_fmt = add_output(check, {"json"});
  check->callback([&, check_fmt] { o.format = *check_fmt; action = [&] { return runner.check(o); }; });

  auto* find = app.add_subcommand("find-factor", "Search for an odd [1,b]-factor");
  add_graph_input(find);
  find->add_option("--b", o.b, "Odd upper degree bound b")->capture_default_str();
  find->add_option("--max-edges", o.max_edges, "Edge-count guard for the search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  find->add_option("--max-n", o.max_n, "Largest order for the violation witness search")
      ->check(CLI::Range(0, 63))
      ->capture_default_str();
  auto* find_fmt = add_output(find, {"json"});
  find->callback([&, find_fmt] { o.format = *find_fmt; action = [&] { return runner.find_factor(o); }; });

  auto* verify = app.add_subcommand("verify", "Numerical checks of the lambda_3 criterion");
  verify->require_subcommand(1);

  auto* sharp = verify->add_subcommand("sharpness", "lambda_1(H_{r,eta}) against rho(r,b)");
  add_r_b(sharp, true);
  auto* sharp_fmt = add_output(sharp, {"json"});
  sharp->callback([&, sharp_fmt] { o.format = *sharp_fmt; action = [&] { return runner.sharpness(o); }; });

  auto* case2 = verify->add_subcommand("case2", "Sign of the odd-r quotient polynomial at rho");
  add_r_b(case2, true);
  auto* case2_fmt = add_output(case2, {"json"});
  case2->callback([&, case2_fmt] { o.format = *case2_fmt; action = [&] { return runner.case2(o); }; });

  auto* sweep = verify->add_subcommand("sweep", "Bound comparison over 3 <= r <= r_max");
  sweep->add_option("--r-max", o.r_max, "Largest r")->check(CLI::Range(3, 200))->capture_default_str();
  sweep->add_option("--b-policy", o.b_policy, "all: every odd b < r; one: b = 1")
      ->check(CLI::IsMember({"all", "one"}))
      ->capture_default_str();
  auto* sweep_fmt = add_output(sweep, {"csv", "json"});
  sweep->callback([&, sweep_fmt] { o.format = *sweep_fmt; action = [&] { return runner.sweep(o); }; });

  auto* camp = verify->add_subcommand("campaign", "Random regular graphs against the criterion");
  auto& c = o.campaign;
  camp->add_option("--trials", c.trials, "Number of trials")->check(CLI::NonNegativeNumber)->capture_default_str();
  camp->add_option("--n-min", c.n_min, "Smallest order (even values only)")->capture_default_str();
  camp->add_option("--n-max", c.n_max, "Largest order")->capture_default_str();
  camp->add_option("--r-min", c.r_min, "Smallest degree")->capture_default_str();
  camp->add_option("--r-max", c.r_max, "Largest degree")->capture_default_str();
  camp->add_option("--b-policy", o.campaign_policy, "all: every odd b < r; one: b = 1")
      ->check(CLI::IsMember({"all", "one"}))
      ->capture_default_str();
  camp->add_option("--seed", c.master_seed, "Master seed")->capture_default_str();
  camp->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  camp->add_option("--max-edges", c.finder.max_edges, "Edge-count guard for the search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* camp_fmt = add_output(camp, {"json"});
  camp->callback([&, camp_fmt] { o.format = *camp_fmt; action = [&] { return runner.campaign(o); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return action ? action() : kUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? kTheoremViolation : kUsage;
  }
}

}  // namespace oddfactor::cli
