// lietoric: decide whether an ideal can be made toric by a linear change of
// coordinates.
//
// Exit codes: 0 toric (or a successful report), 1 definitively not toric,
// 2 gave up (InputNotHandled), 3 usage or parse error.

#include "lietoric/gaussian.hpp"
#include "lietoric/parse.hpp"
#include "lietoric/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace lietoric;

namespace {

constexpr int kUsage = 3;

Ideal<Rational> load_ideal(const std::string& path, const GroebnerOptions& gopt) {
  try {
    auto f = load_ideal_file(path);
    return Ideal<Rational>(f.ring, f.gens, gopt);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " +
                             e.what());
  }
}

int exit_code(const ToricVerdict& v) {
  if (v.status == ToricStatus::Toric) return 0;
  if (v.definitely_not_toric()) return 1;
  return 2;
}

Graph load_graph_spec(const std::string& spec) {
  if (std::filesystem::exists(spec)) return load_graph_file(spec);
  return parse_inline_graph(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a polynomial ideal over Q becomes binomial and prime after a linear "
               "(or affine-linear) change of coordinates."};
  app.require_subcommand(1);

  std::string path;
  bool affine = false, assume_prime = false, as_json = false;
  std::uint64_t seed = 1;
  int max_retries = 16;
  long pair_budget = 200000;

  auto* check = app.add_subcommand("check", "run the full decision pipeline on an ideal file");
  check->add_option("file", path, "ideal file")->required();
  check->add_flag("--affine", affine, "allow affine-linear changes of coordinates");
  check->add_flag("--assume-prime", assume_prime, "input is known to be prime: accept when dim torus = dim variety");
  check->add_option("--seed", seed, "seed for the randomized steps");
  check->add_option("--max-retries", max_retries, "retry budget of each randomized step")->check(CLI::PositiveNumber);
  check->add_option("--pair-budget", pair_budget, "Groebner pair budget")->check(CLI::PositiveNumber);
  check->add_flag("--json", as_json, "print a single JSON object");

  auto* lie = app.add_subcommand("lie", "print the stabilizer Lie algebra");
  lie->add_option("file", path, "ideal file")->required();
  lie->add_flag("--json", as_json, "print a single JSON object");

  auto* torus = app.add_subcommand("torus", "print a Cartan subalgebra and its toral part");
  torus->add_option("file", path, "ideal file")->required();
  torus->add_option("--seed", seed, "seed for the randomized steps");
  torus->add_option("--max-retries", max_retries, "retry budget")->check(CLI::PositiveNumber);
  torus->add_flag("--json", as_json, "print a single JSON object");

  std::vector<std::string> graphs;
  bool ci = false, do_screen = false, saturate = false;
  int jobs = 1;
  std::string out_path;
  auto* graph = app.add_subcommand("graph", "Gaussian graphical models: CI ideals and screening");
  graph->add_option("graphs", graphs, "graph files or inline specs (4:12,13,14 or diamond, paw, cycle, claw, path, table)")
      ->required();
  auto* ci_flag = graph->add_flag("--ci", ci, "write the conditional-independence ideal file");
  auto* screen_flag = graph->add_flag("--screen", do_screen, "print the screening table row");
  ci_flag->excludes(screen_flag);
  graph->add_flag("--saturate", saturate, "saturate at the principal minors first");
  graph->add_option("--jobs", jobs, "rows computed in parallel")->check(CLI::PositiveNumber);
  graph->add_option("--seed", seed, "master seed");
  graph->add_option("-o,--output", out_path, "write the ideal file here (--ci, single graph)");
  graph->add_option("--pair-budget", pair_budget, "Groebner pair budget")->check(CLI::PositiveNumber);
  graph->add_flag("--json", as_json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    GroebnerOptions gopt;
    gopt.pair_budget = static_cast<size_t>(pair_budget);

    if (*check) {
      auto I = load_ideal(path, gopt);
      ToricOptions opt;
      opt.seed = seed;
      opt.max_retries = max_retries;
      opt.assume_prime = assume_prime;
      opt.groebner = gopt;
      if (!affine && !I.is_homogeneous()) {
        std::cerr << path << ": generators are not homogeneous; use --affine\n";
        return kUsage;
      }
      auto v = affine ? decide_toric_affine(I, opt) : decide_toric(I, opt);
      if (as_json) std::cout << verdict_json(v).dump(2) << "\n";
      else std::cout << verdict_text(v);
      return exit_code(v);
    }

    if (*lie || *torus) {
      auto I = load_ideal(path, gopt);
      LieAlgebraBasis g = I.is_homogeneous() ? stabilizer_lie_algebra(I) : affine_stabilizer_lie_algebra(I).algebra;
      if (!I.is_homogeneous()) std::cerr << "note: input is not homogeneous; using the affine stabilizer\n";
      if (*lie) {
        if (as_json) std::cout << lie_json(g).dump(2) << "\n";
        else std::cout << lie_text(g);
      } else {
        auto t = torus_report(g, seed, max_retries);
        if (as_json) std::cout << torus_json(t).dump(2) << "\n";
        else std::cout << torus_text(t);
      }
      return 0;
    }

    if (*graph) {
      if (!ci && !do_screen) {
        std::cerr << "graph: choose --ci or --screen\n";
        return kUsage;
      }
      std::vector<Graph> gs;
      for (const auto& s : graphs) {
        if (s == "table") {
          for (auto& g : four_vertex_table()) gs.push_back(g);
        } else {
          gs.push_back(load_graph_spec(s));
        }
      }
      for (const auto& g : gs) {
        if (g.edges.empty()) std::cerr << "warning: graph " << (g.name.empty() ? "?" : g.name) << " has no edges\n";
        else if (!g.connected()) std::cerr << "warning: graph " << g.name << " is not connected\n";
      }
      if (ci) {
        if (!out_path.empty() && gs.size() != 1) {
          std::cerr << "graph --ci: -o needs exactly one graph\n";
          return kUsage;
        }
        std::string text;
        for (const auto& g : gs) {
          Ideal<Rational> I = ci_ideal(g, gopt);
          if (saturate) I = vanishing_ideal_candidate(I, g);
          std::vector<Poly<Rational>> gens = saturate ? I.groebner() : I.generators();
          text += "# graph " + g.name + " on " + std::to_string(g.p) + " vertices, edges " + g.edge_string() + "\n";
          if (gens.empty()) {
            text += "# complete graph: the ideal is zero\n";
            gens.push_back(Poly<Rational>(I.ring()));
          }
          text += format_ideal_file({I.ring(), gens});
        }
        if (out_path.empty()) {
          std::cout << text;
        } else {
          std::ofstream f(out_path);
          if (!f) throw std::runtime_error("cannot write " + out_path);
          f << text;
        }
        return 0;
      }
      ScreenOptions so;
      so.saturate = saturate;
      so.toric.seed = seed;
      so.toric.groebner = gopt;
      auto rows = screen_all(gs, so, jobs);
      if (as_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(screen_json(r));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << screen_table(rows);
      }
      return 0;
    }
  } catch (const SaturationError& e) {
    std::cerr << "gave up: " << e.what() << "\n";
    return 2;
  } catch (const GroebnerBudgetExceeded& e) {
    std::cerr << "gave up: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
