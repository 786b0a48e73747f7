#pragma once

// Verification runs: the published example computations, seeded theorem sweeps and
// structural-lemma sweeps, plus export and JSONL persistence.
//
// Every run is a list of pure tasks keyed by an instance key; reports are
// sorted by key before they leave this module, so output does not depend on
// scheduling.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "powedge/betti.hpp"
#include "powedge/digraph.hpp"
#include "powedge/formula.hpp"

namespace powedge {

enum class Status { Match, Mismatch, HypothesisViolatedMatch, HypothesisViolatedMismatch };

std::string_view to_string(Status s);

/// One compared quantity. Identities are encoded as expected 1, actual 0/1.
struct Comparison {
  enum class Relation { Equal, AtMost };

  std::string quantity;
  long long expected = 0;
  long long actual = 0;
  Relation relation = Relation::Equal;

  bool holds() const { return relation == Relation::Equal ? actual == expected : actual <= expected; }
};

struct ComputedValues {
  long long reg = 0;
  long long pd = 0;
  long long depth = 0;
  std::size_t generators = 0;
  std::string digest;  ///< hex FNV-1a over the table entries
};

struct VerificationReport {
  std::string key;
  std::string kind;
  nlohmann::json instance;  ///< graph or ideal, t, seed
  std::vector<Prediction> predictions;
  std::optional<ComputedValues> computed;
  std::vector<Comparison> comparisons;
  /// Checks against externally published values; any failure is an oracle failure.
  std::vector<Comparison> reference_checks;
  bool hypothesis_ok = true;
  std::vector<std::string> flags;
  Status status = Status::Match;
  double elapsed_ms = 0;

  /// Sets `status` from hypothesis_ok and the comparisons.
  void finalize();
  /// False for MISMATCH and for any failed reference check.
  bool passed() const;
};

nlohmann::json to_json(const VerificationReport& r);

std::string table_digest(const BettiTable& t);
ComputedValues computed_values(const BettiTable& t, std::size_t generators);

struct RunManifest {
  std::uint64_t seed = 0;
  std::size_t max_generators = kDefaultGeneratorCap;
  FieldSpec field;
  std::string version;
  std::string timestamp;
  std::string command;
  nlohmann::json params = nlohmann::json::object();
};

nlohmann::json to_json(const RunManifest& m);
/// Manifest with the build version and the current UTC time.
RunManifest make_manifest(std::string command, std::uint64_t seed, FieldSpec field, std::size_t max_generators);
std::string tool_version();

struct SweepParams {
  unsigned trials = 200;
  std::uint64_t seed = 1;
  unsigned max_edges = 5;
  unsigned max_power = 2;
  unsigned max_weight = 4;
  /// Vertex bound for the exhaustive line and star families.
  unsigned max_vertices = 5;
  /// Also emit hypothesis-violating variants; they never count as failures.
  bool include_violations = false;
  FieldSpec field;
  BettiOptions betti;
  unsigned workers = 1;
};

nlohmann::json to_json(const SweepParams& p);

struct SweepResult {
  std::vector<VerificationReport> reports;
  std::size_t generated = 0;
  std::size_t completed = 0;
  std::size_t skipped = 0;  ///< over the generator cap

  void append(SweepResult other);
};

enum class TheoremSweep { Forest, Line, Star, Regseq };
enum class LemmaSweep {
  BettiSplitting,
  LeafLemmas,
  Lem11Bound,
  Additivity,
  MonomialShift,
  Polarization,
  RegseqIntersection
};

std::optional<TheoremSweep> parse_theorem_sweep(std::string_view name);
std::optional<LemmaSweep> parse_lemma_sweep(std::string_view name);
std::string_view to_string(TheoremSweep s);
std::string_view to_string(LemmaSweep s);

/// Graphs of the forest sweep: trial k has 1 + (k mod max_edges) edges and
/// seed derive_seed(seed, k).
std::vector<WeightedDigraph> sweep_forests(const SweepParams& p);

SweepResult sweep_theorem(TheoremSweep which, const SweepParams& p);
SweepResult sweep_lemma(LemmaSweep which, const SweepParams& p);

/// The three published counterexample graphs at t = 2, one record per quoted
/// computation (four in total).
SweepResult run_paper_examples(FieldSpec field = {}, const BettiOptions& options = {});

/// The three counterexample graphs, keyed "a", "b", "c".
std::vector<std::pair<std::string, WeightedDigraph>> paper_example_graphs();

/// Script for an external CAS that builds the ring and ideal and prints the
/// Betti table, reg and pd. Dialects: "macaulay2", "cocoa5".
std::string export_script(const MonomialIdeal& ideal, std::string_view dialect, FieldSpec field = {});

/// Appends a manifest line and one line per report. Returns the record count.
std::size_t persist(const std::vector<VerificationReport>& reports, const RunManifest& manifest,
                    const std::filesystem::path& path);

struct StatusCounts {
  std::size_t match = 0, mismatch = 0, violated_match = 0, violated_mismatch = 0, reference_failures = 0;
};

StatusCounts count_statuses(const std::vector<VerificationReport>& reports);
/// Nonzero iff a MATCH-eligible report mismatches or a reference check fails.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace powedge
