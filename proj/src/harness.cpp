#include "powedge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "powedge/rng.hpp"
#include "powedge/splitting.hpp"

#ifndef POWEDGE_VERSION
#define POWEDGE_VERSION "0.0.0"
#endif

namespace powedge {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Match: return "MATCH";
    case Status::Mismatch: return "MISMATCH";
    case Status::HypothesisViolatedMatch: return "HYPOTHESIS_VIOLATED_MATCH";
    case Status::HypothesisViolatedMismatch: return "HYPOTHESIS_VIOLATED_MISMATCH";
  }
  return "MISMATCH";
}

void VerificationReport::finalize() {
  const bool all = std::all_of(comparisons.begin(), comparisons.end(), [](const auto& c) { return c.holds(); });
  if (hypothesis_ok) {
    status = all ? Status::Match : Status::Mismatch;
  } else {
    status = all ? Status::HypothesisViolatedMatch : Status::HypothesisViolatedMismatch;
  }
}

bool VerificationReport::passed() const {
  return status != Status::Mismatch &&
         std::all_of(reference_checks.begin(), reference_checks.end(), [](const auto& c) { return c.holds(); });
}

namespace {

nlohmann::json comparison_json(const Comparison& c) {
  return {{"quantity", c.quantity},
          {"expected", c.expected},
          {"actual", c.actual},
          {"relation", c.relation == Comparison::Relation::Equal ? "eq" : "le"},
          {"holds", c.holds()}};
}

nlohmann::json prediction_json(const Prediction& p) {
  return {{"quantity", to_string(p.quantity)},
          {"value", p.value},
          {"hypothesis_ok", p.hypothesis_ok},
          {"provenance", p.provenance}};
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["key"] = r.key;
  j["kind"] = r.kind;
  j["instance"] = r.instance;
  j["predictions"] = nlohmann::json::array();
  for (const auto& p : r.predictions) j["predictions"].push_back(prediction_json(p));
  if (r.computed) {
    j["computed"] = {{"reg", r.computed->reg},
                     {"pd", r.computed->pd},
                     {"depth", r.computed->depth},
                     {"generators", r.computed->generators},
                     {"betti_digest", r.computed->digest}};
  } else {
    j["computed"] = nullptr;
  }
  j["comparisons"] = nlohmann::json::array();
  for (const auto& c : r.comparisons) j["comparisons"].push_back(comparison_json(c));
  j["reference_checks"] = nlohmann::json::array();
  for (const auto& c : r.reference_checks) j["reference_checks"].push_back(comparison_json(c));
  j["hypothesis_ok"] = r.hypothesis_ok;
  j["flags"] = r.flags;
  j["status"] = to_string(r.status);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string table_digest(const BettiTable& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [key, beta] : t.entries()) {
    feed(key.first);
    feed(key.second);
    feed(beta);
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

ComputedValues computed_values(const BettiTable& t, std::size_t generators) {
  return {regularity(t), projective_dimension(t), depth_of_ideal(t, t.ring_size()), generators, table_digest(t)};
}

std::string tool_version() { return POWEDGE_VERSION; }

nlohmann::json to_json(const RunManifest& m) {
  return {{"manifest",
           {{"seed", m.seed},
            {"max_generators", m.max_generators},
            {"field", m.field.characteristic},
            {"version", m.version},
            {"timestamp", m.timestamp},
            {"command", m.command},
            {"params", m.params}}}};
}

RunManifest make_manifest(std::string command, std::uint64_t seed, FieldSpec field, std::size_t max_generators) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream ts;
  ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  RunManifest m;
  m.seed = seed;
  m.max_generators = max_generators;
  m.field = field;
  m.version = tool_version();
  m.timestamp = ts.str();
  m.command = std::move(command);
  return m;
}

nlohmann::json to_json(const SweepParams& p) {
  return {{"trials", p.trials},
          {"seed", p.seed},
          {"max_edges", p.max_edges},
          {"max_power", p.max_power},
          {"max_weight", p.max_weight},
          {"max_vertices", p.max_vertices},
          {"include_violations", p.include_violations},
          {"field", p.field.characteristic},
          {"max_generators", p.betti.max_generators}};
}

void SweepResult::append(SweepResult other) {
  reports.insert(reports.end(), std::make_move_iterator(other.reports.begin()),
                 std::make_move_iterator(other.reports.end()));
  generated += other.generated;
  completed += other.completed;
  skipped += other.skipped;
}

std::optional<TheoremSweep> parse_theorem_sweep(std::string_view name) {
  if (name == "forest") return TheoremSweep::Forest;
  if (name == "line") return TheoremSweep::Line;
  if (name == "star") return TheoremSweep::Star;
  if (name == "regseq") return TheoremSweep::Regseq;
  return std::nullopt;
}

std::optional<LemmaSweep> parse_lemma_sweep(std::string_view name) {
  if (name == "betti-splitting") return LemmaSweep::BettiSplitting;
  if (name == "leaf-lemmas") return LemmaSweep::LeafLemmas;
  if (name == "lem11-bound") return LemmaSweep::Lem11Bound;
  if (name == "additivity") return LemmaSweep::Additivity;
  if (name == "monomial-shift") return LemmaSweep::MonomialShift;
  if (name == "polarization") return LemmaSweep::Polarization;
  if (name == "regseq-intersection") return LemmaSweep::RegseqIntersection;
  return std::nullopt;
}

std::string_view to_string(TheoremSweep s) {
  switch (s) {
    case TheoremSweep::Forest: return "forest";
    case TheoremSweep::Line: return "line";
    case TheoremSweep::Star: return "star";
    case TheoremSweep::Regseq: return "regseq";
  }
  return "forest";
}

std::string_view to_string(LemmaSweep s) {
  switch (s) {
    case LemmaSweep::BettiSplitting: return "betti-splitting";
    case LemmaSweep::LeafLemmas: return "leaf-lemmas";
    case LemmaSweep::Lem11Bound: return "lem11-bound";
    case LemmaSweep::Additivity: return "additivity";
    case LemmaSweep::MonomialShift: return "monomial-shift";
    case LemmaSweep::Polarization: return "polarization";
    case LemmaSweep::RegseqIntersection: return "regseq-intersection";
  }
  return "betti-splitting";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string pad(std::uint64_t v, int width = 4) {
  std::ostringstream out;
  out << std::setw(width) << std::setfill('0') << v;
  return out.str();
}

struct Task {
  std::string key;
  std::function<SweepResult()> run;
};

SweepResult run_tasks(const std::vector<Task>& tasks, unsigned workers) {
  std::vector<SweepResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) out[k] = tasks[k].run();
  };
  const unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  SweepResult merged;
  for (auto& r : out) merged.append(std::move(r));
  std::stable_sort(merged.reports.begin(), merged.reports.end(),
                   [](const auto& a, const auto& b) { return a.key < b.key; });
  return merged;
}

nlohmann::json ideal_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) gens.push_back(format_monomial(g));
  return {{"ring", ideal.context()->names()}, {"generators", std::move(gens)}};
}

nlohmann::json graph_instance(const WeightedDigraph& g, unsigned t, std::uint64_t seed) {
  return {{"graph", to_json(g)}, {"t", t}, {"seed", seed}, {"family", to_string(classify(g).family)}};
}

std::vector<std::string> graph_flags(const WeightedDigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_leaf(v) && !g.is_source(v) && g.weight(v) == 1) return {"weight1-target-leaf"};
  return {};
}

Comparison compare(std::string quantity, long long expected, long long actual,
                   Comparison::Relation rel = Comparison::Relation::Equal) {
  return {std::move(quantity), expected, actual, rel};
}

Comparison identity(std::string quantity, bool holds) { return {std::move(quantity), 1, holds ? 1 : 0}; }

// Copy of g with the first internal non-source vertex set to weight 1.
std::optional<WeightedDigraph> violate(const WeightedDigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 2 && !g.is_source(v)) {
      auto vs = g.vertices();
      vs[v].weight = 1;
      return WeightedDigraph(std::move(vs), g.edges());
    }
  }
  return std::nullopt;
}

struct Instance {
  std::string key;
  WeightedDigraph graph;
  std::uint64_t seed;
};

std::vector<Instance> forest_instances(const SweepParams& p) {
  std::vector<Instance> out;
  const auto graphs = sweep_forests(p);
  for (unsigned k = 0; k < graphs.size(); ++k) {
    const auto seed = derive_seed(p.seed, k);
    out.push_back({"forest/" + pad(k), graphs[k], seed});
    if (p.include_violations)
      if (auto v = violate(graphs[k])) out.push_back({"forest/" + pad(k) + "v", std::move(*v), seed});
  }
  return out;
}

// Calls `body(t, I^t)` for t = 1..max_power, counting cap skips.
template <class Body>
SweepResult over_powers(const MonomialIdeal& base, const SweepParams& p, unsigned t_min, Body body) {
  SweepResult r;
  MonomialIdeal it = base;
  for (unsigned t = 1; t <= p.max_power; ++t) {
    if (t > 1) it = product(it, base);
    if (t < t_min) continue;
    ++r.generated;
    if (it.size() > p.betti.max_generators) {
      ++r.skipped;
      continue;
    }
    ++r.completed;
    body(t, it, r);
  }
  return r;
}

SweepResult forest_task(const Instance& in, const SweepParams& p) {
  std::optional<long long> reg_base;
  return over_powers(edge_ideal(in.graph), p, 1, [&](unsigned t, const MonomialIdeal& it, SweepResult& r) {
    const auto start = Clock::now();
    const auto table = betti_table(it, p.field, p.betti);
    VerificationReport rep;
    rep.key = in.key + "/t" + std::to_string(t);
    rep.kind = "theorem:forest";
    rep.instance = graph_instance(in.graph, t, in.seed);
    rep.computed = computed_values(table, it.size());
    const auto reg = predict_reg_power_forest(in.graph, t);
    const auto pd = predict_pd_power_forest(in.graph, t);
    rep.predictions = {reg, pd};
    rep.comparisons = {compare("REG_POWER", reg.value, rep.computed->reg),
                       compare("PD_POWER", pd.value, rep.computed->pd)};
    if (t == 1) {
      reg_base = rep.computed->reg;
      const auto depth = predict_depth(in.graph);
      rep.predictions.push_back(depth);
      rep.comparisons.push_back(compare("DEPTH", depth.value, rep.computed->depth));
    } else if (reg_base) {
      const auto rec = predict_reg_recursion(in.graph, t, *reg_base);
      rep.predictions.push_back(rec);
      rep.comparisons.push_back(compare("REG_RECURSION", rec.value, rep.computed->reg));
    }
    rep.hypothesis_ok = reg.hypothesis_ok;
    rep.flags = graph_flags(in.graph);
    rep.elapsed_ms = ms_since(start);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  });
}

SweepResult family_task(const Instance& in, const SweepParams& p, const std::string& kind) {
  return over_powers(edge_ideal(in.graph), p, 1, [&](unsigned t, const MonomialIdeal& it, SweepResult& r) {
    const auto start = Clock::now();
    const auto table = betti_table(it, p.field, p.betti);
    VerificationReport rep;
    rep.key = in.key + "/t" + std::to_string(t);
    rep.kind = kind;
    rep.instance = graph_instance(in.graph, t, in.seed);
    rep.computed = computed_values(table, it.size());
    const auto reg = predict_reg_power_family(in.graph, t);
    rep.predictions = {reg};
    rep.comparisons = {compare("REG_POWER", reg.value, rep.computed->reg)};
    rep.hypothesis_ok = reg.hypothesis_ok;
    rep.flags = graph_flags(in.graph);
    rep.elapsed_ms = ms_since(start);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  });
}

std::string weights_label(const std::vector<unsigned>& w) {
  std::string s = "w";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "-" : "") + std::to_string(w[i]);
  return s;
}

// Every weight vector with w[i] in [lo[i], hi[i]].
std::vector<std::vector<unsigned>> weight_grid(const std::vector<unsigned>& lo, const std::vector<unsigned>& hi) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> w = lo;
  while (true) {
    out.push_back(w);
    std::size_t i = w.size();
    while (i > 0) {
      --i;
      if (w[i] < hi[i]) {
        ++w[i];
        break;
      }
      w[i] = lo[i];
      if (i == 0) return out;
    }
    if (w.empty()) return out;
  }
}

std::vector<Instance> line_instances(const SweepParams& p, unsigned n_min, unsigned n_max) {
  std::vector<Instance> out;
  const unsigned internal_lo = p.include_violations ? 1 : 2;
  for (unsigned n = n_min; n <= n_max; ++n) {
    std::vector<unsigned> lo(n, 1), hi(n, p.max_weight);
    hi[0] = 1;
    for (unsigned i = 1; i + 1 < n; ++i) lo[i] = internal_lo;
    for (auto& w : weight_grid(lo, hi))
      out.push_back({"line/n" + std::to_string(n) + "/" + weights_label(w), make_line(w), 0});
  }
  return out;
}

std::vector<Instance> star_instances(const SweepParams& p) {
  std::vector<Instance> out;
  const unsigned center_lo = p.include_violations ? 1 : 2;
  for (unsigned n = 3; n <= p.max_vertices; ++n) {
    std::vector<unsigned> lo(n, 1), hi(n, p.max_weight);
    hi[0] = 1;
    for (auto& w : weight_grid(lo, hi))
      out.push_back({"star-out/n" + std::to_string(n) + "/" + weights_label(w), make_star_out(w), 0});
    std::vector<unsigned> in_lo(n, 1), in_hi(n, 1);
    in_hi[0] = p.max_weight;
    for (auto& w : weight_grid(in_lo, in_hi))
      out.push_back({"star-in/n" + std::to_string(n) + "/" + weights_label(w), make_star_in(w), 0});
  }
  for (unsigned n = 4; n <= p.max_vertices; ++n) {
    std::vector<unsigned> lo(n, 1), hi(n, p.max_weight);
    hi[0] = 1;
    lo[1] = center_lo;
    for (auto& w : weight_grid(lo, hi))
      out.push_back({"broom/n" + std::to_string(n) + "/" + weights_label(w), make_broom(w), 0});
  }
  return out;
}

struct RegseqInstance {
  std::string key;
  MonomialIdeal ideal;
  std::uint64_t seed;
};

// Degree multisets from {1..4}^r, r <= 4, each as pure powers of distinct
// variables and as seeded two-variable splits u_i = y_i^a z_i^(d_i - a).
std::vector<RegseqInstance> regseq_instances(const SweepParams& p) {
  std::vector<RegseqInstance> out;
  std::uint64_t index = 0;
  for (unsigned r = 1; r <= 4; ++r) {
    std::vector<unsigned> lo(r, 1), hi(r, 4);
    for (const auto& d : weight_grid(lo, hi)) {
      if (!std::is_sorted(d.begin(), d.end())) continue;
      std::vector<std::string> names;
      for (unsigned i = 1; i <= r; ++i) {
        names.push_back("y" + std::to_string(i));
        names.push_back("z" + std::to_string(i));
      }
      const auto ctx = make_context(names);
      for (unsigned variant = 0; variant < 2; ++variant) {
        const auto seed = derive_seed(p.seed, index++);
        Rng rng(seed);
        std::vector<Monomial> gens;
        for (unsigned i = 0; i < r; ++i) {
          std::vector<Exponent> e(2 * r, 0);
          const unsigned a = variant == 0 ? d[i] : rng.in_range(1, d[i]);
          e[2 * i] = a;
          e[2 * i + 1] = d[i] - a;
          gens.emplace_back(ctx, std::move(e));
        }
        std::string key = "regseq/r" + std::to_string(r) + "/d";
        for (auto x : d) key += std::to_string(x);
        key += variant == 0 ? "/pure" : "/split";
        out.push_back({key, minimalize(ctx, std::move(gens)), seed});
      }
    }
  }
  return out;
}

nlohmann::json ideal_instance(const MonomialIdeal& ideal, unsigned t, std::uint64_t seed) {
  return {{"ideal", ideal_json(ideal)}, {"t", t}, {"seed", seed}};
}

SweepResult regseq_task(const RegseqInstance& in, const SweepParams& p) {
  return over_powers(in.ideal, p, 1, [&](unsigned t, const MonomialIdeal& it, SweepResult& r) {
    const auto start = Clock::now();
    const auto table = betti_table(it, p.field, p.betti);
    VerificationReport rep;
    rep.key = in.key + "/t" + std::to_string(t);
    rep.kind = "theorem:regseq";
    rep.instance = ideal_instance(in.ideal, t, in.seed);
    rep.computed = computed_values(table, it.size());
    const auto reg = predict_reg_regseq_power(in.ideal, t);
    rep.predictions = {reg};
    rep.comparisons = {compare("REG_REGSEQ_POWER", reg.value, rep.computed->reg)};
    rep.hypothesis_ok = reg.hypothesis_ok;
    rep.elapsed_ms = ms_since(start);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  });
}

template <class Fn>
std::vector<Task> instance_tasks(const std::vector<Instance>& instances, Fn fn) {
  std::vector<Task> tasks;
  for (const auto& in : instances) tasks.push_back({in.key, [in, fn] { return fn(in); }});
  return tasks;
}

VerificationReport lemma_report(const std::string& key, const std::string& kind, nlohmann::json instance) {
  VerificationReport rep;
  rep.key = key;
  rep.kind = kind;
  rep.instance = std::move(instance);
  return rep;
}

SweepResult polarization_task(const Instance& in, const SweepParams& p) {
  return over_powers(edge_ideal(in.graph), p, 1, [&](unsigned t, const MonomialIdeal& it, SweepResult& r) {
    const auto start = Clock::now();
    auto rep = lemma_report(in.key + "/t" + std::to_string(t), "lemma:polarization",
                            graph_instance(in.graph, t, in.seed));
    const auto table = betti_table(it, p.field, p.betti);
    const auto polar = betti_table(polarize(it), p.field, p.betti);
    rep.computed = computed_values(table, it.size());
    rep.comparisons = {identity("POLARIZATION_BETTI", table.same_entries(polar))};
    rep.elapsed_ms = ms_since(start);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  });
}

SweepResult leaf_task(const Instance& in, const SweepParams& p) {
  SweepResult r;
  for (unsigned t = 1; t <= p.max_power; ++t) {
    ++r.generated;
    ++r.completed;
    const auto start = Clock::now();
    auto rep = lemma_report(in.key + "/t" + std::to_string(t), "lemma:leaf-lemmas",
                            graph_instance(in.graph, t, in.seed));
    for (const auto& leaf : target_leaves(in.graph)) {
      const auto lr = check_leaf_lemmas(in.graph, leaf, t);
      rep.comparisons.push_back(identity("LEAF_SUM[" + leaf + "]", lr.sum_identity));
      if (lr.colon_identity) rep.comparisons.push_back(identity("LEAF_COLON[" + leaf + "]", *lr.colon_identity));
      if (lr.colon_sum_identity)
        rep.comparisons.push_back(identity("LEAF_COLON_SUM[" + leaf + "]", *lr.colon_sum_identity));
    }
    rep.flags = graph_flags(in.graph);
    rep.elapsed_ms = ms_since(start);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  }
  return r;
}

SweepResult splitting_task(const Instance& in, const SweepParams& p) {
  return over_powers(edge_ideal(in.graph), p, 1, [&](unsigned t, const MonomialIdeal& it, SweepResult& r) {
    const auto whole = betti_table(it, p.field, p.betti);
    for (auto v : it.support()) {
      std::optional<SplittingInstance> s;
      try {
        s = variable_split(it, v);
      } catch (const DegenerateSplit&) {
        continue;
      }
      ++r.generated;
      if (s->j_cap_k.size() > p.betti.max_generators) {
        ++r.skipped;
        continue;
      }
      ++r.completed;
      const auto start = Clock::now();
      const auto& name = it.context()->name(v);
      auto inst = graph_instance(in.graph, t, in.seed);
      inst["split_variable"] = name;
      auto rep = lemma_report(in.key + "/t" + std::to_string(t) + "/" + name, "lemma:betti-splitting", inst);
      SplittingTables tables{whole, betti_table(s->j, p.field, p.betti), betti_table(s->k, p.field, p.betti),
                             betti_table(s->j_cap_k, p.field, p.betti)};
      const auto verdict = is_betti_splitting(tables);
      const auto cons = check_splitting_consequences(tables);
      rep.computed = computed_values(whole, it.size());
      rep.hypothesis_ok = has_linear_resolution(tables.j);
      rep.comparisons = {
          identity("SPLIT_IDENTITY", verdict.holds),
          compare("REG_MAX_FORMULA", std::max({cons.reg_j, cons.reg_k, cons.reg_j_cap_k - 1}), cons.reg_whole),
          compare("PD_MAX_FORMULA", std::max({cons.pd_j, cons.pd_k, cons.pd_j_cap_k + 1}), cons.pd_whole)};
      if (verdict.witness) {
        rep.instance["witness"] = {{"i", verdict.witness->i},
                                   {"j", verdict.witness->j},
                                   {"whole", verdict.witness->whole},
                                   {"parts", verdict.witness->parts}};
      }
      if (!rep.hypothesis_ok) rep.flags.push_back("nonlinear-J");
      rep.elapsed_ms = ms_since(start);
      rep.finalize();
      r.reports.push_back(std::move(rep));
    }
    // over_powers counted the power itself; only the splits are items here.
    --r.generated;
    --r.completed;
  });
}

SweepResult additivity_task(const Instance& a, const Instance& b, const SweepParams& p) {
  SweepResult r;
  const auto ia = edge_ideal(a.graph);
  const auto ib = edge_ideal(b.graph);
  for (unsigned t = 1; t <= p.max_power; ++t) {
    ++r.generated;
    const auto pa = power(ia, t);
    const auto pb = power(ib, t);
    if (pa.size() + pb.size() > p.betti.max_generators) {
      ++r.skipped;
      continue;
    }
    ++r.completed;
    const auto start = Clock::now();
    auto rep = lemma_report(a.key + "+" + b.key.substr(b.key.find('/') + 1) + "/t" + std::to_string(t),
                            "lemma:additivity",
                            {{"first", to_json(a.graph)}, {"second", to_json(b.graph)}, {"t", t}, {"seed", a.seed}});
    const auto ar = check_disjoint_additivity(pa, pb, p.field, p.betti);
    rep.comparisons = {compare("QUOTIENT_REG_ADDITIVE", ar.reg_a + ar.reg_b, ar.reg_sum),
                       compare("QUOTIENT_PD_ADDITIVE", ar.pd_a + ar.pd_b, ar.pd_sum)};
    rep.elapsed_ms = ms_since(start);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  }
  return r;
}

SweepResult shift_task(const Instance& in, const SweepParams& p) {
  auto names = in.graph.context()->names();
  names.push_back("u1");
  names.push_back("u2");
  const auto ctx = make_context(names);
  Rng rng(derive_seed(in.seed, 0x5417));
  std::vector<Exponent> e(ctx->size(), 0);
  e[ctx->size() - 2] = rng.in_range(1, 3);
  e[ctx->size() - 1] = rng.in_range(0, 2);
  const Monomial u(ctx, std::move(e));
  const auto base = extend_context(edge_ideal(in.graph), ctx);
  return over_powers(base, p, 1, [&](unsigned t, const MonomialIdeal& it, SweepResult& r) {
    const auto start = Clock::now();
    auto inst = graph_instance(in.graph, t, in.seed);
    inst["u"] = format_monomial(u);
    auto rep = lemma_report(in.key + "/t" + std::to_string(t), "lemma:monomial-shift", inst);
    const auto sr = check_monomial_shift(it, u, p.field, p.betti);
    rep.comparisons = {compare("REG_SHIFT", sr.reg_ideal + sr.shift_degree, sr.reg_shifted)};
    rep.elapsed_ms = ms_since(start);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  });
}

SweepResult lem11_task(const Instance& in, const SweepParams& p) {
  SweepResult r;
  ++r.generated;
  const auto li = lem11_bound(in.graph);
  if (li.ideal.size() > p.betti.max_generators) {
    ++r.skipped;
    return r;
  }
  ++r.completed;
  const auto start = Clock::now();
  auto inst = graph_instance(in.graph, 2, in.seed);
  inst["ideal"] = ideal_json(li.ideal);
  auto rep = lemma_report(in.key, "lemma:lem11-bound", inst);
  const auto table = betti_table(li.ideal, p.field, p.betti);
  rep.computed = computed_values(table, li.ideal.size());
  rep.predictions = {li.bound};
  rep.comparisons = {compare("LEM11_UPPER_BOUND", li.bound.value, rep.computed->reg, Comparison::Relation::AtMost)};
  rep.hypothesis_ok = li.bound.hypothesis_ok;
  rep.elapsed_ms = ms_since(start);
  rep.finalize();
  r.reports.push_back(std::move(rep));
  return r;
}

SweepResult regseq_intersection_task(const RegseqInstance& in, const SweepParams& p) {
  SweepResult r;
  if (in.ideal.size() < 2) return r;
  for (unsigned t = 2; t <= std::max(2U, p.max_power); ++t) {
    ++r.generated;
    ++r.completed;
    const auto start = Clock::now();
    auto rep = lemma_report(in.key + "/t" + std::to_string(t), "lemma:regseq-intersection",
                            ideal_instance(in.ideal, t, in.seed));
    rep.comparisons = {identity("REGSEQ_INTERSECTION", check_regseq_intersection(in.ideal, t))};
    rep.elapsed_ms = ms_since(start);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  }
  return r;
}

}  // namespace

std::vector<WeightedDigraph> sweep_forests(const SweepParams& p) {
  std::vector<WeightedDigraph> out;
  for (unsigned k = 0; k < p.trials; ++k)
    out.push_back(generate_forest(1 + k % std::max(1U, p.max_edges), p.max_weight, derive_seed(p.seed, k)));
  return out;
}

SweepResult sweep_theorem(TheoremSweep which, const SweepParams& p) {
  std::vector<Task> tasks;
  switch (which) {
    case TheoremSweep::Forest:
      tasks = instance_tasks(forest_instances(p), [p](const Instance& in) { return forest_task(in, p); });
      break;
    case TheoremSweep::Line:
      tasks = instance_tasks(line_instances(p, 2, p.max_vertices),
                             [p](const Instance& in) { return family_task(in, p, "theorem:line"); });
      break;
    case TheoremSweep::Star:
      tasks = instance_tasks(star_instances(p), [p](const Instance& in) { return family_task(in, p, "theorem:star"); });
      break;
    case TheoremSweep::Regseq:
      for (auto& in : regseq_instances(p)) tasks.push_back({in.key, [in, p] { return regseq_task(in, p); }});
      break;
  }
  return run_tasks(tasks, p.workers);
}

SweepResult sweep_lemma(LemmaSweep which, const SweepParams& p) {
  std::vector<Task> tasks;
  switch (which) {
    case LemmaSweep::Polarization:
      tasks = instance_tasks(forest_instances(p), [p](const Instance& in) { return polarization_task(in, p); });
      break;
    case LemmaSweep::LeafLemmas:
      tasks = instance_tasks(forest_instances(p), [p](const Instance& in) { return leaf_task(in, p); });
      break;
    case LemmaSweep::BettiSplitting:
      tasks = instance_tasks(forest_instances(p), [p](const Instance& in) { return splitting_task(in, p); });
      break;
    case LemmaSweep::MonomialShift:
      tasks = instance_tasks(forest_instances(p), [p](const Instance& in) { return shift_task(in, p); });
      break;
    case LemmaSweep::Additivity: {
      const auto ins = forest_instances(p);
      for (std::size_t k = 0; k + 1 < ins.size(); ++k) {
        const auto& a = ins[k];
        const auto& b = ins[k + 1];
        tasks.push_back({a.key, [a, b, p] { return additivity_task(a, b, p); }});
      }
      break;
    }
    case LemmaSweep::Lem11Bound:
      tasks = instance_tasks(line_instances(p, 3, std::max(3U, p.max_vertices)),
                             [p](const Instance& in) { return lem11_task(in, p); });
      break;
    case LemmaSweep::RegseqIntersection:
      for (auto& in : regseq_instances(p))
        tasks.push_back({in.key, [in, p] { return regseq_intersection_task(in, p); }});
      break;
  }
  return run_tasks(tasks, p.workers);
}

std::vector<std::pair<std::string, WeightedDigraph>> paper_example_graphs() {
  auto named = [](std::vector<unsigned> w, std::vector<std::pair<std::string, std::string>> e) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < w.size(); ++i) vs.push_back({"x" + std::to_string(i + 1), w[i]});
    return WeightedDigraph::from_names(std::move(vs), e);
  };
  return {
      {"a", named({1, 5, 1, 8}, {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}})},
      {"b", named({1, 5, 1, 8, 1, 2}, {{"x1", "x2"}, {"x3", "x2"}, {"x3", "x4"}, {"x5", "x4"}, {"x5", "x6"}})},
      {"c", named({1, 2, 1, 2, 1, 2, 1, 2},
                  {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x5", "x6"}, {"x6", "x7"}, {"x7", "x8"}})},
  };
}

SweepResult run_paper_examples(FieldSpec field, const BettiOptions& options) {
  struct Quoted {
    std::string key;
    std::string graph;
    std::optional<long long> reg, pd;
  };
  // Published CoCoA values for I(D)^2.
  const std::vector<Quoted> quoted = {
      {"paper/1-a", "a", 18, std::nullopt},
      {"paper/2-b-reg", "b", 17, std::nullopt},
      {"paper/3-c", "c", 8, 4},
      {"paper/4-b-pd", "b", std::nullopt, 3},
  };
  const auto graphs = paper_example_graphs();
  std::map<std::string, std::pair<BettiTable, std::size_t>> tables;
  std::map<std::string, double> elapsed;
  for (const auto& [name, g] : graphs) {
    const auto start = Clock::now();
    const auto i2 = power(edge_ideal(g), 2);
    tables[name] = {betti_table(i2, field, options), i2.size()};
    elapsed[name] = ms_since(start);
  }

  SweepResult r;
  for (const auto& q : quoted) {
    const auto& g = std::find_if(graphs.begin(), graphs.end(), [&](const auto& x) { return x.first == q.graph; })->second;
    const auto& [table, gens] = tables.at(q.graph);
    ++r.generated;
    ++r.completed;
    VerificationReport rep;
    rep.key = q.key;
    rep.kind = "paper-example";
    rep.instance = graph_instance(g, 2, 0);
    rep.instance["example"] = q.graph;
    rep.computed = computed_values(table, gens);
    const auto reg = predict_reg_power_forest(g, 2);
    const auto pd = predict_pd_power_forest(g, 2);
    if (q.pd) {
      rep.predictions.push_back(pd);
      rep.comparisons.push_back(compare("PD_POWER", pd.value, rep.computed->pd));
      rep.reference_checks.push_back(compare("PD_POWER_COCOA", *q.pd, rep.computed->pd));
    }
    if (q.reg) {
      rep.predictions.push_back(reg);
      rep.comparisons.push_back(compare("REG_POWER", reg.value, rep.computed->reg));
      rep.reference_checks.push_back(compare("REG_POWER_COCOA", *q.reg, rep.computed->reg));
    }
    rep.hypothesis_ok = reg.hypothesis_ok;
    rep.flags = graph_flags(g);
    rep.elapsed_ms = elapsed.at(q.graph);
    rep.finalize();
    r.reports.push_back(std::move(rep));
  }
  return r;
}

namespace {

void require_identifier(const std::string& name) {
  const bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0])) &&
                  std::all_of(name.begin(), name.end(), [](char c) {
                    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                  });
  if (!ok) throw std::invalid_argument("export_script: variable name '" + name + "' is not a plain identifier");
}

std::string generator_list(const MonomialIdeal& ideal) {
  std::string s;
  for (const auto& g : ideal.generators()) {
    if (!s.empty()) s += ", ";
    s += format_monomial(g);
  }
  return s;
}

std::string joined_names(const MonomialIdeal& ideal) {
  std::string s;
  for (const auto& n : ideal.context()->names()) {
    require_identifier(n);
    if (!s.empty()) s += ",";
    s += n;
  }
  return s;
}

}  // namespace

std::string export_script(const MonomialIdeal& ideal, std::string_view dialect, FieldSpec field) {
  if (ideal.is_zero() || ideal.is_improper()) throw std::invalid_argument("export_script: ideal must be proper and nonzero");
  const std::string p = std::to_string(field.characteristic);
  std::ostringstream out;
  if (dialect == "macaulay2") {
    out << "R = " << (field.characteristic == 0 ? "QQ" : "ZZ/" + p) << "[" << joined_names(ideal) << "];\n"
        << "I = ideal(" << generator_list(ideal) << ");\n"
        << "print betti res module I;\n"
        << "print regularity module I;\n"
        << "print pdim module I;\n";
  } else if (dialect == "cocoa5") {
    out << "use R ::= " << (field.characteristic == 0 ? "QQ" : "ZZ/(" + p + ")") << "[" << joined_names(ideal)
        << "];\n"
        << "I := ideal(" << generator_list(ideal) << ");\n"
        << "PrintLn BettiDiagram(I);\n"
        << "PrintLn CastelnuovoMumfordRegularity(I);\n"
        << "PrintLn len(Res(I)) - 1;\n";
  } else {
    throw std::invalid_argument("export_script: unknown dialect '" + std::string(dialect) + "'");
  }
  return out.str();
}

std::size_t persist(const std::vector<VerificationReport>& reports, const RunManifest& manifest,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("persist: cannot open " + path.string());
  out << to_json(manifest).dump() << '\n';
  if (!out) throw std::runtime_error("persist: write failed for the manifest line");
  for (std::size_t k = 0; k < reports.size(); ++k) {
    out << to_json(reports[k]).dump() << '\n';
    if (!out) throw std::runtime_error("persist: write failed at record " + std::to_string(k));
  }
  out.flush();
  if (!out) throw std::runtime_error("persist: flush failed after record " + std::to_string(reports.size()));
  return reports.size();
}

StatusCounts count_statuses(const std::vector<VerificationReport>& reports) {
  StatusCounts c;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Match: ++c.match; break;
      case Status::Mismatch: ++c.mismatch; break;
      case Status::HypothesisViolatedMatch: ++c.violated_match; break;
      case Status::HypothesisViolatedMismatch: ++c.violated_mismatch; break;
    }
    for (const auto& chk : r.reference_checks)
      if (!chk.holds()) ++c.reference_failures;
  }
  return c;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }) ? 0 : 1;
}

}  // namespace powedge
