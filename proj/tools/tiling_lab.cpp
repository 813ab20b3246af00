// Command-line entry point: invariants, degree-sequence checkers, extremal
// constructions, the exact tiling solver, the remainder balancer and the
// experiment runner.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tilinglab/balancer.hpp"
#include "tilinglab/constructions.hpp"
#include "tilinglab/experiments.hpp"
#include "tilinglab/graph_io.hpp"
#include "tilinglab/invariants.hpp"
#include "tilinglab/solver.hpp"
#include "tilinglab/thresholds.hpp"

using namespace tilinglab;

namespace {

void emit(const nlohmann::json& j, const std::string& format,
          const std::string& out_path) {
  std::string text;
  if (format == "csv" && j.contains("csv"))
    text = j["csv"].get<std::string>();
  else
    text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants, thresholds, constructions and exact tilings for "
               "perfect H-tilings"};
  app.set_config("--config", "", "plain key=value config file");
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  long long seed = 0;
  long long budget_ms = 0;
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write the report to a file");
  app.add_option("--seed", seed, "random seed for experiments");
  app.add_option("--budget-ms", budget_ms, "search budget in milliseconds");

  // describe
  auto* cmd_desc = app.add_subcommand("describe", "invariant report for H");
  std::string desc_graph;
  cmd_desc->add_option("--graph", desc_graph, "graph6, inline JSON, or @path")
      ->required();

  // check-degseq
  auto* cmd_chk = app.add_subcommand("check-degseq",
                                     "degree-sequence threshold checkers");
  std::string chk_condition, chk_graph, chk_degseq, chk_pattern;
  std::string chk_eta = "0", chk_sigma, chk_bound = "0";
  int chk_h = 0, chk_r = 0, chk_curve_n = 0;
  cmd_chk->add_option("--condition", chk_condition,
                      "main | ay | kothm | chvatal | bkt | mindeg")
      ->required()
      ->check(CLI::IsMember({"main", "ay", "kothm", "chvatal", "bkt",
                             "mindeg"}));
  cmd_chk->add_option("--graph", chk_graph, "host graph supplying the degrees");
  cmd_chk->add_option("--degseq", chk_degseq, "comma-separated degrees");
  cmd_chk->add_option("--pattern", chk_pattern, "H for the kothm dispatch");
  cmd_chk->add_option("--eta", chk_eta, "slack, exact rational p/q");
  cmd_chk->add_option("--h-order", chk_h, "|H| for the main condition");
  cmd_chk->add_option("--r", chk_r, "chi(H)");
  cmd_chk->add_option("--sigma", chk_sigma, "sigma parameter, rational");
  cmd_chk->add_option("--bound", chk_bound, "min-degree bound, rational");
  cmd_chk->add_option("--curve-n", chk_curve_n,
                      "also emit the threshold curve at this n");

  // construct
  auto* cmd_con = app.add_subcommand("construct", "extremal constructions");
  std::string con_kind, con_tsizes = "2,2,3", con_sigma, con_lambda = "0";
  std::string con_eta = "1/10", con_c, con_pattern;
  int con_n = 0, con_k = 1, con_r = 3, con_neck = 1, con_width = 2, con_s = 0;
  cmd_con->add_option("kind", con_kind,
                      "bottle | base-bottle | modified-bottle | prop22 | "
                      "prop23 | prop24")
      ->required()
      ->check(CLI::IsMember({"bottle", "base-bottle", "modified-bottle",
                             "prop22", "prop23", "prop24"}));
  cmd_con->add_option("--r", con_r, "parts");
  cmd_con->add_option("--neck", con_neck, "neck class size");
  cmd_con->add_option("--width", con_width, "width class size");
  cmd_con->add_option("--pattern", con_pattern, "H (base-bottle, prop24)");
  cmd_con->add_option("--sigma", con_sigma, "sigma, rational");
  cmd_con->add_option("--lambda", con_lambda, "lambda, rational");
  cmd_con->add_option("--s", con_s, "width s of the modified bottle");
  cmd_con->add_option("--t-sizes", con_tsizes, "class sizes of H (prop22)");
  cmd_con->add_option("--eta", con_eta, "slack, rational");
  cmd_con->add_option("--C", con_c, "scale override C (prop22 desk mode)");
  cmd_con->add_option("--k", con_k, "window start (prop23)");
  cmd_con->add_option("--n", con_n, "host order");

  // tile
  auto* cmd_tile = app.add_subcommand("tile", "exact tiling solver");
  std::string tile_mode = "perfect", tile_host, tile_pattern;
  cmd_tile->add_option("--mode", tile_mode, "perfect or max")
      ->check(CLI::IsMember({"perfect", "max"}));
  cmd_tile->add_option("--host", tile_host, "host graph G")->required();
  cmd_tile->add_option("--pattern", tile_pattern, "pattern graph H")
      ->required();

  // balance
  auto* cmd_bal = app.add_subcommand("balance", "remainder balancer");
  std::string bal_pattern;
  int bal_p = 1;
  cmd_bal->add_option("--pattern", bal_pattern, "H")->required();
  cmd_bal->add_option("--p", bal_p, "p-subset size (multipartite case)");

  // experiment
  auto* cmd_exp = app.add_subcommand("experiment", "experiment runner");
  std::string exp_id;
  std::vector<std::string> exp_params;
  int exp_threads = 0;
  cmd_exp->add_option("--id", exp_id, "experiment id")->required();
  cmd_exp->add_option("--param", exp_params, "key=value, repeatable");
  cmd_exp->add_option("--threads", exp_threads,
                      "worker count; 1 = serial reference path");

  // Global flags (--format, --seed, ...) remain usable after a subcommand.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_desc) {
      emit(describe(parse_graph_arg(desc_graph)), format, out_path);
      return 0;
    }

    if (*cmd_chk) {
      std::vector<int> dseq;
      if (!chk_degseq.empty())
        dseq = parse_int_list(chk_degseq);
      else if (!chk_graph.empty())
        dseq = parse_graph_arg(chk_graph).degree_sequence();
      else
        throw std::invalid_argument("need --graph or --degseq");
      Rat eta = Rat::parse(chk_eta);
      ThresholdVerdict verdict;
      if (chk_condition == "main") {
        if (chk_h == 0 || chk_r == 0 || chk_sigma.empty())
          throw std::invalid_argument("main needs --h-order, --r and --sigma");
        verdict = check_main(dseq, chk_h, chk_r, Rat::parse(chk_sigma), eta);
      } else if (chk_condition == "ay") {
        if (chk_r == 0) throw std::invalid_argument("ay needs --r");
        verdict = check_ay_degseq(dseq, chk_r, eta);
      } else if (chk_condition == "kothm") {
        if (chk_pattern.empty())
          throw std::invalid_argument("kothm needs --pattern");
        verdict = check_kothm_dispatch(dseq, parse_graph_arg(chk_pattern), eta);
      } else if (chk_condition == "chvatal") {
        verdict = check_chvatal(dseq);
      } else if (chk_condition == "bkt") {
        if (chk_r == 0) throw std::invalid_argument("bkt needs --r");
        verdict = check_bkt_conjecture(dseq, chk_r);
      } else {
        verdict = check_min_degree(dseq, Rat::parse(chk_bound));
      }
      nlohmann::json j = verdict.to_json();
      if (chk_curve_n > 0) {
        if (chk_h == 0 || chk_r == 0 || chk_sigma.empty())
          throw std::invalid_argument("curve needs --h-order, --r and --sigma");
        auto curve = threshold_curve(chk_h, chk_r, Rat::parse(chk_sigma), eta,
                                     chk_curve_n);
        auto arr = nlohmann::json::array();
        std::string csv = "i,bound\n";
        for (auto& [i, bound] : curve) {
          arr.push_back({{"i", i}, {"bound", bound.str()}});
          csv += std::to_string(i) + "," + bound.str() + "\n";
        }
        j["curve"] = std::move(arr);
        j["csv"] = csv;
      }
      emit(j, format, out_path);
      return 0;
    }

    if (*cmd_con) {
      nlohmann::json j;
      if (con_kind == "bottle") {
        BottleSpec spec{con_r, con_neck, con_width};
        Graph g = bottle_graph(spec);
        j["spec"] = {{"r", spec.r}, {"neck", spec.neck}, {"width", spec.width}};
        j["graph6"] = to_graph6(g);
        j["graph"] = graph_to_json(g);
      } else if (con_kind == "base-bottle") {
        Graph h = parse_graph_arg(con_pattern);
        Rat sigma = con_sigma.empty() ? Rat(sigma_min(h)) : Rat::parse(con_sigma);
        BottleSpec spec = base_bottle(h, sigma);
        Graph g = bottle_graph(spec);
        j["spec"] = {{"r", spec.r}, {"neck", spec.neck}, {"width", spec.width}};
        j["graph6"] = to_graph6(g);
      } else if (con_kind == "modified-bottle") {
        Graph h = parse_graph_arg(con_pattern);
        Rat sigma = con_sigma.empty() ? Rat(sigma_min(h)) : Rat::parse(con_sigma);
        BottleSpec spec = modified_bottle(h.order(), chromatic_number(h), sigma,
                                          Rat::parse(con_lambda), con_s);
        j["spec"] = {{"r", spec.r}, {"neck", spec.neck}, {"width", spec.width}};
        j["graph6"] = to_graph6(bottle_graph(spec));
      } else if (con_kind == "prop22") {
        auto t_sizes = parse_int_list(con_tsizes);
        int min_t = *std::min_element(t_sizes.begin(), t_sizes.end());
        Rat sigma = con_sigma.empty() ? Rat(min_t) : Rat::parse(con_sigma);
        std::optional<Rat> c;
        if (!con_c.empty()) c = Rat::parse(con_c);
        auto [g, cert] = prop22_graph(t_sizes, sigma, con_n, c);
        j["graph6"] = to_graph6(g);
        j["certificate"] = cert.to_json();
      } else if (con_kind == "prop23") {
        BottleSpec spec{con_r, con_neck, con_width};
        auto [g, cert] =
            prop23_graph(spec, Rat::parse(con_eta), con_k, con_n);
        j["graph6"] = to_graph6(g);
        j["certificate"] = cert.to_json();
      } else {  // prop24
        Graph h = parse_graph_arg(con_pattern);
        HcfReport rep = hcf_report(h);
        auto [g, cert] = prop24_graph(h.order(), rep.chi, rep.sigma,
                                      Rat::parse(con_eta), con_n);
        j["graph6"] = to_graph6(g);
        j["certificate"] = cert.to_json();
      }
      emit(j, format, out_path);
      return 0;
    }

    if (*cmd_tile) {
      Graph g = parse_graph_arg(tile_host);
      Graph h = parse_graph_arg(tile_pattern);
      SearchBudget budget;
      if (budget_ms > 0) budget.time_limit_ms = budget_ms;
      nlohmann::json j;
      if (tile_mode == "perfect") {
        auto cert = perfect_tiling(g, h, budget);
        j["mode"] = "perfect";
        j["found"] = cert.has_value();
        if (cert) j["certificate"] = cert->to_json();
      } else {
        auto result = max_tiling(g, h, budget);
        j["mode"] = "max";
        j["copies"] = result.tiling.copies.size();
        j["optimal"] = result.optimal;
        j["certificate"] = result.tiling.to_json();
        if (!result.optimal) {
          emit(j, format, out_path);
          return 4;  // budget exhausted without a proven optimum
        }
      }
      emit(j, format, out_path);
      return 0;
    }

    if (*cmd_bal) {
      Graph h = parse_graph_arg(bal_pattern);
      auto sol = balance_for(h, bal_p);
      emit(sol.to_json(), format, out_path);
      return 0;
    }

    if (*cmd_exp) {
      ExperimentSpec spec;
      spec.id = exp_id;
      spec.seed = seed;
      spec.budget_ms = budget_ms;
      spec.threads = exp_threads;
      for (const auto& kv : exp_params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("bad --param (want key=value): " + kv);
        spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      Report report = run_experiment(spec);
      nlohmann::json j = report.body;
      j["csv"] = report.csv();
      emit(j, format, out_path);
      return report.exit_code();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
