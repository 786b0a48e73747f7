// Command-line front end: ideal and graph utilities, formula predictions,
// verification sweeps and CAS export.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "powedge/betti.hpp"
#include "powedge/digraph.hpp"
#include "powedge/formula.hpp"
#include "powedge/harness.hpp"

namespace {

using namespace powedge;

struct Globals {
  std::uint32_t field = 32003;
  std::uint64_t seed = 1;
  std::size_t max_gens = kDefaultGeneratorCap;
  std::string format = "table";
  std::string out;
  unsigned threads = 1;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("POWEDGE_MAX_GENS")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("POWEDGE_MAX_GENS must be a positive integer");
    }
  }
  return kDefaultGeneratorCap;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Writes to --out when given, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw std::runtime_error("cannot write " + g.out);
  out << text;
}

BettiOptions betti_options(const Globals& g) {
  BettiOptions o;
  o.max_generators = g.max_gens;
  o.threads = g.threads;
  return o;
}

WeightedDigraph read_graph(const std::string& path) {
  try {
    return digraph_from_json(nlohmann::json::parse(read_input(path)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

std::string table_output(const Globals& g, const BettiTable& t) {
  if (g.format == "json") return to_json(t).dump() + "\n";
  if (g.format == "csv") {
    std::ostringstream out;
    out << "i,j,beta\n";
    for (const auto& [key, beta] : t.entries()) out << key.first << ',' << key.second << ',' << beta << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << format_betti_diagram(t);
  if (!t.empty())
    out << "reg " << regularity(t) << "  pd " << projective_dimension(t) << "  depth "
        << depth_of_ideal(t, t.ring_size()) << '\n';
  return out.str();
}

std::string ideal_output(const Globals& g, const MonomialIdeal& ideal) {
  if (g.format == "json") {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& m : ideal.generators()) gens.push_back(format_monomial(m));
    return nlohmann::json{{"ring", ideal.context()->names()}, {"generators", gens}}.dump() + "\n";
  }
  return format_ideal(ideal);
}

std::string reports_output(const Globals& g, const SweepResult& result, const RunManifest& manifest) {
  std::ostringstream out;
  if (g.format == "json") {
    out << to_json(manifest).dump() << '\n';
    for (const auto& r : result.reports) out << to_json(r).dump() << '\n';
    return out.str();
  }
  if (g.format == "csv") {
    out << "key,status,quantity,expected,actual,holds\n";
    for (const auto& r : result.reports) {
      for (const auto* list : {&r.comparisons, &r.reference_checks})
        for (const auto& c : *list)
          out << r.key << ',' << to_string(r.status) << ',' << c.quantity << ',' << c.expected << ',' << c.actual
              << ',' << (c.holds() ? "true" : "false") << '\n';
    }
    return out.str();
  }
  for (const auto& r : result.reports) {
    out << r.key << "  " << to_string(r.status);
    for (const auto* list : {&r.comparisons, &r.reference_checks})
      for (const auto& c : *list)
        out << "  " << c.quantity << " actual=" << c.actual
            << (c.relation == Comparison::Relation::Equal ? " expected=" : " bound=") << c.expected
            << (c.holds() ? "" : " FAIL");
    out << '\n';
  }
  const auto counts = count_statuses(result.reports);
  out << "generated " << result.generated << "  completed " << result.completed << "  skipped " << result.skipped
      << "\nMATCH " << counts.match << "  MISMATCH " << counts.mismatch << "  HYPOTHESIS_VIOLATED_MATCH "
      << counts.violated_match << "  HYPOTHESIS_VIOLATED_MISMATCH " << counts.violated_mismatch
      << "  reference deviations " << counts.reference_failures << '\n';
  return out.str();
}

// Reports go to stdout in the chosen format; --out appends JSONL records.
int finish_verify(const Globals& g, const SweepResult& result, RunManifest manifest) {
  std::cout << reports_output(g, result, manifest);
  if (!g.out.empty()) persist(result.reports, manifest, g.out);
  return exit_code(result.reports);
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  try {
    g.max_gens = default_cap();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Betti numbers, regularity and projective dimension of powers of weighted edge ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  app.add_option("--field", g.field, "coefficient field characteristic: 0 or a prime")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for generated instances")->capture_default_str();
  app.add_option("--max-gens", g.max_gens, "generator cap for Taylor enumeration (env POWEDGE_MAX_GENS)")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "output path (verify: JSONL records are appended)");
  app.add_option("--threads", g.threads, "worker threads")->capture_default_str();

  std::function<int()> action;

  // ideal ...
  auto* ideal = app.add_subcommand("ideal", "monomial ideal operations");
  ideal->require_subcommand(1);
  std::string ideal_file = "-";
  unsigned power_t = 1;
  bool quotient = false;
  std::string colon_by;

  auto* betti = ideal->add_subcommand("betti", "graded Betti table of I^t");
  betti->add_option("file", ideal_file, "ideal text file, - for stdin");
  betti->add_option("--power", power_t, "exponent t")->check(CLI::PositiveNumber);
  betti->add_flag("--quotient", quotient, "report S/I instead of I");
  betti->callback([&] {
    action = [&] {
      const auto i = power(parse_ideal(read_input(ideal_file)), power_t);
      auto t = betti_table(i, FieldSpec::of(g.field), betti_options(g));
      if (quotient) t = quotient_view(t);
      emit(g, table_output(g, t));
      return 0;
    };
  });

  auto* pow = ideal->add_subcommand("power", "minimal generators of I^t");
  pow->add_option("file", ideal_file, "ideal text file, - for stdin");
  pow->add_option("--t", power_t, "exponent t")->required()->check(CLI::PositiveNumber);
  pow->callback([&] {
    action = [&] {
      emit(g, ideal_output(g, power(parse_ideal(read_input(ideal_file)), power_t)));
      return 0;
    };
  });

  auto* polar = ideal->add_subcommand("polarize", "squarefree polarization");
  polar->add_option("file", ideal_file, "ideal text file, - for stdin");
  polar->callback([&] {
    action = [&] {
      emit(g, ideal_output(g, polarize(parse_ideal(read_input(ideal_file)))));
      return 0;
    };
  });

  auto* colon = ideal->add_subcommand("colon", "colon ideal (I : m)");
  colon->add_option("file", ideal_file, "ideal text file, - for stdin");
  colon->add_option("--by", colon_by, "monomial, e.g. x2*x3^2")->required();
  colon->callback([&] {
    action = [&] {
      const auto i = parse_ideal(read_input(ideal_file));
      emit(g, ideal_output(g, colon_by_monomial(i, parse_monomial(i.context(), colon_by))));
      return 0;
    };
  });

  // graph ...
  auto* graph = app.add_subcommand("graph", "vertex-weighted digraphs");
  graph->require_subcommand(1);
  std::string family = "forest";
  unsigned edges = 3, max_weight = 4;
  std::string graph_file = "-";

  auto* gen = graph->add_subcommand("gen", "seeded random graph satisfying the family's hypothesis");
  gen->add_option("--family", family, "path|star-out|star-in|broom|forest")->capture_default_str();
  gen->add_option("--edges", edges, "edge count")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--max-weight", max_weight, "largest vertex weight")->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->callback([&] {
    action = [&] {
      const auto f = parse_gen_family(family);
      if (!f) throw std::invalid_argument("unknown family '" + family + "'");
      emit(g, to_json(generate_family(*f, edges, max_weight, g.seed)).dump(2) + "\n");
      return 0;
    };
  });

  auto* edge = graph->add_subcommand("edge-ideal", "edge ideal of a digraph JSON file");
  edge->add_option("file", graph_file, "digraph JSON, - for stdin");
  edge->callback([&] {
    action = [&] {
      const auto d = read_graph(graph_file);
      if (g.format == "json") {
        nlohmann::json j = nlohmann::json::parse(ideal_output(g, edge_ideal(d)));
        const auto tag = classify(d);
        j["family"] = to_string(tag.family);
        j["rooted_forest"] = tag.rooted_forest;
        j["weight_condition_ok"] = tag.weight_condition_ok;
        j["normalized_sources"] = d.normalized_sources();
        emit(g, j.dump() + "\n");
      } else {
        emit(g, format_ideal(edge_ideal(d)));
      }
      return 0;
    };
  });

  // predict
  auto* predict = app.add_subcommand("predict", "closed-form prediction for a digraph");
  std::string theorem = "reg-power";
  unsigned predict_t = 1;
  predict->add_option("--theorem", theorem, "reg-power|pd-power|depth|regseq|lem11|reg-family")
      ->check(CLI::IsMember({"reg-power", "pd-power", "depth", "regseq", "lem11", "reg-family"}))
      ->capture_default_str();
  predict->add_option("--t", predict_t, "power t")->check(CLI::PositiveNumber)->capture_default_str();
  predict->add_option("file", graph_file, "digraph JSON, - for stdin");
  predict->callback([&] {
    action = [&] {
      const auto d = read_graph(graph_file);
      Prediction p;
      if (theorem == "reg-power") p = predict_reg_power_forest(d, predict_t);
      else if (theorem == "pd-power") p = predict_pd_power_forest(d, predict_t);
      else if (theorem == "depth") p = predict_depth(d);
      else if (theorem == "regseq") p = predict_reg_regseq_power(edge_ideal(d), predict_t);
      else if (theorem == "lem11") p = lem11_bound(d).bound;
      else p = predict_reg_power_family(d, predict_t);
      emit(g, nlohmann::json{{"quantity", to_string(p.quantity)},
                             {"value", p.value},
                             {"hypothesis_ok", p.hypothesis_ok},
                             {"provenance", p.provenance}}
                      .dump() +
                  "\n");
      return 0;
    };
  });

  // verify ...
  auto* verify = app.add_subcommand("verify", "verification runs");
  verify->require_subcommand(1);
  SweepParams sp;
  std::string sweep_name;
  auto add_sweep_options = [&](CLI::App* cmd, const std::vector<std::string>& names) {
    cmd->add_option("--name", sweep_name, "sweep name")->required()->check(CLI::IsMember(names));
    cmd->add_option("--trials", sp.trials, "random instances")->capture_default_str();
    cmd->add_option("--max-edges", sp.max_edges, "edge bound for forests")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-power", sp.max_power, "largest t attempted")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-weight", sp.max_weight, "largest vertex weight")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-vertices", sp.max_vertices, "vertex bound for lines and stars")->capture_default_str();
    cmd->add_flag("--include-violations", sp.include_violations, "add hypothesis-violating variants");
  };
  auto sweep_setup = [&] {
    sp.seed = g.seed;
    sp.field = FieldSpec::of(g.field);
    sp.betti = betti_options(g);
    sp.betti.threads = 1;
    sp.workers = g.threads;
  };
  auto manifest_for = [&](const std::string& command) {
    auto m = make_manifest(command, g.seed, FieldSpec::of(g.field), g.max_gens);
    m.params = to_json(sp);
    return m;
  };

  auto* vthm = verify->add_subcommand("theorem", "theorem sweep");
  add_sweep_options(vthm, {"forest", "line", "star", "regseq"});
  vthm->callback([&] {
    action = [&] {
      sweep_setup();
      const auto result = sweep_theorem(*parse_theorem_sweep(sweep_name), sp);
      return finish_verify(g, result, manifest_for("verify theorem " + sweep_name));
    };
  });

  auto* vlem = verify->add_subcommand("lemma", "structural-lemma sweep");
  add_sweep_options(vlem, {"betti-splitting", "leaf-lemmas", "lem11-bound", "additivity", "monomial-shift",
                           "polarization", "regseq-intersection"});
  vlem->callback([&] {
    action = [&] {
      sweep_setup();
      const auto result = sweep_lemma(*parse_lemma_sweep(sweep_name), sp);
      return finish_verify(g, result, manifest_for("verify lemma " + sweep_name));
    };
  });

  auto* vpaper = verify->add_subcommand("paper-examples", "published CoCoA computations for the example graphs");
  vpaper->callback([&] {
    action = [&] {
      const auto result = run_paper_examples(FieldSpec::of(g.field), betti_options(g));
      auto m = make_manifest("verify paper-examples", g.seed, FieldSpec::of(g.field), g.max_gens);
      return finish_verify(g, result, m);
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "script for an external computer algebra system");
  std::string dialect;
  exp->add_option("--dialect", dialect, "macaulay2|cocoa5")->required();
  exp->add_option("--power", power_t, "export I^t")->check(CLI::PositiveNumber);
  exp->add_option("file", ideal_file, "ideal text file, - for stdin");
  exp->callback([&] {
    action = [&] {
      const auto i = power(parse_ideal(read_input(ideal_file)), power_t);
      emit(g, export_script(i, dialect, FieldSpec::of(g.field)));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action ? action() : 0;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
