#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "copnum/copnum.hpp"

namespace {

using namespace copnum;
using nlohmann::json;

struct Source {
  std::string graph_path;
  std::string construction;  // sidon-undirected | sidon-directed | meyniel
  std::int64_t p = 5;
  std::int64_t n = 0;  // meyniel vertex count

  void add_to(CLI::App* app) {
    app->add_option("--graph", graph_path, "instance JSON: {\"factors\", \"S\", \"T\"} or {\"vertices\", \"arcs\"}");
    app->add_option("--construction", construction, "sidon-undirected | sidon-directed | meyniel")
        ->check(CLI::IsMember({"sidon-undirected", "sidon-directed", "meyniel"}));
    app->add_option("--p", p, "prime for constructions");
    app->add_option("--n", n, "vertex count for the meyniel construction");
  }

  bool general() const {
    if (construction == "meyniel") return true;
    if (graph_path.empty()) return false;
    return read_json().contains("vertices");
  }

  json read_json() const {
    std::ifstream in(graph_path);
    if (!in) throw Error(Errc::invalid_argument, "cannot open " + graph_path);
    try {
      return json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, e.what());
    }
  }

  GameInstance instance() const {
    if (construction == "sidon-undirected") return build_sidon(p, SidonKind::undirected_cubic);
    if (construction == "sidon-directed") return build_sidon(p, SidonKind::directed_quadratic);
    if (construction == "meyniel") throw Error(Errc::invalid_argument, "the meyniel graph is not a Cayley graph");
    if (graph_path.empty()) throw Error(Errc::invalid_argument, "give --graph or --construction");
    return instance_from_json(read_json());
  }

  GeneralGraph graph() const {
    if (construction == "meyniel") return meyniel_extremal(n ? n : p * p, p);
    const auto j = read_json();
    if (j.contains("vertices")) return GeneralGraph::from_json(j);
    return GeneralGraph::from_instance(instance_from_json(j));
  }
};

std::uint64_t arc_budget(std::uint64_t flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("COPNUM_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument, std::string("COPNUM_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultArcBudget;
}

std::string fixed(double x, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path);
  out << text;
}

void print_instance_summary(const GameInstance& inst) {
  std::cout << "order " << inst.n() << "\n"
            << "|S| " << inst.cop_moves().size() << "\n"
            << "|T| " << inst.robber_moves().size() << "\n"
            << "directed " << (inst.directed() ? "true" : "false") << "\n"
            << "boundary " << boundary_name(classify_boundary(inst)) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Cops and robbers on abelian Cayley graphs"};
  app.require_subcommand(1);
  int threads = 1;
  std::uint64_t seed = 0;
  app.add_option("--threads", threads, "worker threads (the solver runs single-threaded)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random seed");

  // group
  auto* group_cmd = app.add_subcommand("group", "group order, element orders, quotients");
  std::vector<std::int64_t> factors;
  std::vector<std::int64_t> quotient_by;
  group_cmd->add_option("--factors", factors, "cyclic factor orders")->required();
  group_cmd->add_option("--quotient-by", quotient_by, "coordinates of k for G/<k>");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "export a Cayley graph");
  Source graph_src;
  graph_src.add_to(graph_cmd);
  std::string format = "dot", out_path;
  graph_cmd->add_option("--format", format, "dot | json");
  graph_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "exact cop number by retrograde analysis");
  Source solve_src;
  solve_src.add_to(solve_cmd);
  int k = 0, max_k = 8;
  std::uint64_t budget_flag = 0;
  bool no_translation = false, solve_json = false;
  std::string dump_path;
  solve_cmd->add_option("--k", k, "solve for exactly k cops");
  solve_cmd->add_option("--max-k", max_k, "largest k tried when searching the cop number");
  solve_cmd->add_option("--budget", budget_flag, "arc budget (default: $COPNUM_BUDGET or 2e8)");
  solve_cmd->add_flag("--no-translation", no_translation, "keep the robber position in the state");
  solve_cmd->add_option("--dump", dump_path, "write the win table (binary) for --k");
  solve_cmd->add_flag("--json", solve_json, "one JSON line per solve");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds");
  std::string variant_name_arg = "undirected";
  std::int64_t bn = 0, bs = 0, bt = 0;
  std::uint64_t bucket = 2;
  std::string csv_path;
  bounds_cmd->add_option("--variant", variant_name_arg, "undirected | directed")
      ->check(CLI::IsMember({"undirected", "directed"}));
  bounds_cmd->add_option("--n", bn, "group order")->required();
  bounds_cmd->add_option("--s", bs, "|S|");
  bounds_cmd->add_option("--t", bt, "|T|");
  bounds_cmd->add_option("--bucket", bucket, "smallest prime factor bucket for the constants (2, 3, 5)");
  bounds_cmd->add_option("--csv", csv_path, "write the full (s, t) table for n as CSV");

  // strategy
  auto* strat_cmd = app.add_subcommand("strategy", "build a cop strategy and play it");
  Source strat_src;
  strat_src.add_to(strat_cmd);
  std::string flavor_arg = "frankl", adversary_arg = "greedy", transcript_path;
  std::uint64_t step_cap = 0, strat_budget = 0;
  bool show_plan = false;
  strat_cmd->add_option("--flavor", flavor_arg, "frankl | gstar")->check(CLI::IsMember({"frankl", "gstar"}));
  strat_cmd->add_option("--adversary", adversary_arg, "optimal | greedy | random")
      ->check(CLI::IsMember({"optimal", "greedy", "random"}));
  strat_cmd->add_option("--seed", seed, "seed for the random adversary");
  strat_cmd->add_option("--step-cap", step_cap, "round limit (default 4·n²·(cops+1))");
  strat_cmd->add_option("--transcript", transcript_path, "write the game transcript as JSON");
  strat_cmd->add_option("--budget", strat_budget, "arc budget for the optimal adversary");
  strat_cmd->add_flag("--plan", show_plan, "print the plan tree as JSON");

  // construct
  auto* cons_cmd = app.add_subcommand("construct", "build an extremal construction");
  std::string kind_arg = "sidon-undirected", cons_out;
  std::int64_t cons_p = 5, cons_n = 0;
  cons_cmd->add_option("--kind", kind_arg, "sidon-undirected | sidon-directed | meyniel")
      ->check(CLI::IsMember({"sidon-undirected", "sidon-directed", "meyniel"}));
  cons_cmd->add_option("--p", cons_p, "prime > 3");
  cons_cmd->add_option("--n", cons_n, "vertex count (meyniel)");
  cons_cmd->add_option("--out", cons_out, "write the graph JSON to a file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the numerical and brute-force checks");
  bool v_guards = false, v_constants = false, v_sweep = false;
  std::int64_t p_max = 31, n_max = 500;
  verify_cmd->add_flag("--guards", v_guards, "guard-count identities for primes up to --p-max");
  verify_cmd->add_flag("--constants", v_constants, "constants and their defining inequalities");
  verify_cmd->add_flag("--sweep", v_sweep, "recursion conditions for all n up to --n-max");
  verify_cmd->add_option("--p-max", p_max, "largest prime for --guards");
  verify_cmd->add_option("--n-max", n_max, "largest n for --sweep");

  // replay
  auto* replay_cmd = app.add_subcommand("replay", "re-validate a transcript");
  std::string replay_path;
  replay_cmd->add_option("--transcript", replay_path, "transcript JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*group_cmd) {
    const auto g = AbelianGroup::product(factors);
    std::uint64_t exponent = 1;
    for (Element e : g.elements()) exponent = std::lcm(exponent, element_order(g, e));
    std::cout << "order " << g.order() << "\nexponent " << exponent << "\n";
    if (!quotient_by.empty()) {
      const QuotientMap q(g, g.element(quotient_by));
      std::cout << "quotient order " << q.target().order() << "\n";
    }
    return 0;
  }

  if (*graph_cmd) {
    const auto f = parse_graph_format(format);
    const auto text = export_graph(graph_src.instance(), f);
    if (out_path.empty())
      std::cout << text;
    else
      write_file(out_path, text);
    return 0;
  }

  if (*solve_cmd) {
    SolveOptions opt;
    opt.arc_budget = arc_budget(budget_flag);
    opt.translation = !no_translation;
    std::shared_ptr<const Arena> arena;
    if (solve_src.general()) {
      arena = std::make_shared<const Arena>(Arena::from_graph(solve_src.graph()));
    } else {
      const auto inst = solve_src.instance();
      if (!solve_json) print_instance_summary(inst);
      arena = std::make_shared<const Arena>(Arena::from_instance(inst));
    }
    auto report = [&](const SolveResult& r) {
      if (solve_json)
        std::cout << json{{"k", r.k}, {"winner", winner_name(r.winner)}, {"states", r.states}}.dump() << "\n";
      else
        std::cout << "k " << r.k << " " << winner_name(r.winner) << " (" << r.states << " states)\n";
    };
    if (k > 0) {
      const auto r = solve_fixed_cops(arena, k, opt);
      report(r);
      if (!dump_path.empty()) {
        std::ofstream out(dump_path, std::ios::binary);
        r.write_table(out);
      }
      return 0;
    }
    for (int kk = 1; kk <= max_k; ++kk) {
      const auto r = solve_fixed_cops(arena, kk, opt);
      report(r);
      if (r.winner == Winner::cops) {
        if (solve_json)
          std::cout << json{{"cop_number", kk}}.dump() << "\n";
        else
          std::cout << "cop_number " << kk << "\n";
        return 0;
      }
    }
    std::cout << "cop_number > " << max_k << " (NotFoundBelow " << max_k << ")\n";
    return 0;
  }

  if (*bounds_cmd) {
    const auto v = variant_name_arg == "directed" ? bounds::Variant::directed : bounds::Variant::undirected;
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out) throw Error(Errc::invalid_argument, "cannot write " + csv_path);
      bounds::write_bound_csv(out, bn, v, bucket);
    }
    if (bs == 0 && bt == 0 && !csv_path.empty()) return 0;
    const auto r = bounds::make_report(bn, bs, bt, v, bucket);
    std::cout << "variant " << bounds::variant_name(v) << "\n"
              << "n " << r.n << " s " << r.s << " t " << r.t << "\n"
              << "smallest prime factor " << r.smallest_prime_factor << "\n"
              << "c = " << fixed(r.c, 7) << "  d = " << fixed(r.d, 7) << "\n";
    if (r.h) std::cout << "h = " << fixed(*r.h) << "\n";
    if (r.iterations) std::cout << "iterations = " << *r.iterations << "\n";
    std::cout << "g* = " << fixed(r.g_star) << "\n";
    if (r.printed_small_case) std::cout << "g* (printed small case) = " << fixed(*r.printed_small_case) << "\n";
    std::cout << "d*sqrt(n) + " << r.additive << " = " << fixed(r.headline_bound) << "\n";
    return 0;
  }

  if (*strat_cmd) {
    const auto inst = strat_src.instance();
    const auto plan = build_plan(inst, parse_flavor(flavor_arg));
    std::unique_ptr<Adversary> adversary;
    if (adversary_arg == "greedy") {
      adversary = std::make_unique<GreedyAdversary>();
    } else if (adversary_arg == "random") {
      adversary = std::make_unique<RandomAdversary>(seed);
    } else {
      SolveOptions opt;
      opt.arc_budget = arc_budget(strat_budget);
      adversary = std::make_unique<OptimalAdversary>(
          std::make_shared<const SolveResult>(solve_fixed_cops(inst, plan->cop_count, opt)));
    }
    ExecuteOptions eo;
    eo.step_cap = step_cap;
    const auto tr = execute_game(plan, *adversary, eo);
    if (show_plan) std::cout << plan_to_json(*plan).dump(2) << "\n";
    const std::size_t s = inst.cop_moves().size();
    std::cout << "plan cop_count " << plan->cop_count << "\n"
              << "frankl bound " << (inst.directed() ? s + 1 : (s + 2) / 2) << "\n"
              << "cops moved " << tr.cops_moved << "\n"
              << "guard replies " << tr.stats.guard_replies << "\n"
              << "outcome " << outcome_name(tr.outcome) << " at half-move " << tr.turn << "\n";
    if (!transcript_path.empty()) write_file(transcript_path, transcript_to_json(tr).dump() + "\n");
    return tr.outcome == Outcome::captured ? 0 : 1;
  }

  if (*cons_cmd) {
    json j;
    if (kind_arg == "meyniel") {
      const auto g = meyniel_extremal(cons_n ? cons_n : cons_p * cons_p, cons_p);
      j = g.to_json();
      std::cout << "vertices " << g.vertices << "\narcs " << g.arcs.size() << "\nstrongly connected "
                << (g.strongly_connected() ? "true" : "false") << "\n";
    } else {
      const auto kind = kind_arg == "sidon-directed" ? SidonKind::directed_quadratic : SidonKind::undirected_cubic;
      const auto inst = build_sidon(cons_p, kind);
      j = instance_to_json(inst);
      print_instance_summary(inst);
    }
    if (!cons_out.empty()) write_file(cons_out, j.dump() + "\n");
    return 0;
  }

  if (*verify_cmd) {
    bool ok = true;
    if (!v_guards && !v_constants && !v_sweep) v_guards = v_constants = v_sweep = true;
    if (v_guards) {
      const auto rep = verify_guard_bounds(p_max);
      for (const auto& row : rep.rows)
        std::cout << json{{"p", row.p}, {"max_undirected", row.max_undirected}, {"max_directed", row.max_directed}}.dump()
                  << "\n";
      std::cout << "guard counts: " << (rep.pass ? "PASS" : "FAIL") << "\n";
      ok &= rep.pass;
    }
    if (v_constants) {
      bool pass = true;
      for (auto v : {bounds::Variant::undirected, bounds::Variant::directed})
        for (std::uint64_t p : {2, 3, 5}) {
          const auto c = bounds::theorem_constants(v, p);
          const auto sl = bounds::constraint_slack(v, c.c, c.d, p);
          pass &= sl.recursion >= -1e-12 && sl.quotient >= -1e-12;
          std::cout << json{{"variant", bounds::variant_name(v)}, {"p", p}, {"c", c.c}, {"d", c.d},
                            {"slack_recursion", sl.recursion}, {"slack_quotient", sl.quotient}}
                           .dump()
                    << "\n";
        }
      std::cout << "constants: " << (pass ? "PASS" : "FAIL") << "\n";
      ok &= pass;
    }
    if (v_sweep) {
      for (auto v : {bounds::Variant::undirected, bounds::Variant::directed}) {
        const auto rep = bounds::verify_constant_inequalities(v, n_max);
        std::cout << "sweep " << bounds::variant_name(v) << ": " << (rep.pass() ? "PASS" : "FAIL") << " ("
                  << rep.checks_bound + rep.checks_quotient + rep.checks_shrink << " checks)\n";
        ok &= rep.pass();
      }
    }
    return ok ? 0 : 1;
  }

  if (*replay_cmd) {
    std::ifstream in(replay_path);
    if (!in) throw Error(Errc::invalid_argument, "cannot open " + replay_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, e.what());
    }
    const auto rep = replay_transcript(j);
    if (!rep.ok) {
      std::cout << "replay FAILED: " << rep.message << "\n";
      return 1;
    }
    std::cout << "replay ok: " << rep.moves << " half-moves, " << outcome_name(rep.outcome) << " at half-move "
              << rep.turn << "\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
