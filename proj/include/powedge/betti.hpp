#pragma once

// Graded Betti numbers of monomial ideals from the homology of the Taylor
// complex tensored with the residue field.
//
// Tensoring with k splits the Taylor complex into one finite complex per
// multidegree b: the subsets sigma of G(I) with lcm(sigma) = b, with the
// differential deleting one generator at a time whenever the lcm does not
// drop. beta_{i,|b|} collects dim H_i of those complexes, where a subset of
// size i+1 sits in homological degree i.
//
// Before taking ranks each bucket is shrunk by an algebraic Morse matching:
// for a generator g0 dividing b, sigma is paired with sigma + g0. What is
// left is the set of critical subsets (those containing g0 whose lcm drops
// without it) and the Morse differential is the restriction of the Taylor
// differential to them.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "powedge/monomial.hpp"

namespace powedge {

/// Characteristic 0 (exact rationals) or a prime below 2^31.
struct FieldSpec {
  std::uint32_t characteristic = 32003;

  /// Throws std::invalid_argument for anything but 0 or a prime.
  static FieldSpec of(std::uint32_t characteristic);
  bool operator==(const FieldSpec&) const = default;
};

inline constexpr std::size_t kDefaultGeneratorCap = 22;

struct BettiOptions {
  std::size_t max_generators = kDefaultGeneratorCap;
  /// Worker threads for bucket homology; results do not depend on it.
  unsigned threads = 1;
  /// Off means plain rank computations on every Taylor face.
  bool morse_reduction = true;
};

class BettiTable {
 public:
  /// (i, j) -> beta_{i,j}; absent keys are zero, stored values are positive.
  using Entries = std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t>;

  BettiTable() = default;
  BettiTable(std::size_t ring_size, std::uint32_t characteristic, Entries entries, bool quotient = false);

  std::size_t ring_size() const noexcept { return ring_size_; }
  std::uint32_t characteristic() const noexcept { return characteristic_; }
  /// Table of S/I rather than of I (see quotient_view).
  bool is_quotient() const noexcept { return quotient_; }
  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::uint64_t at(unsigned i, std::uint64_t j) const;
  /// Sum over j of beta_{i,j}.
  std::uint64_t total(unsigned i) const;

  /// Compares entries only; the characteristic is metadata.
  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }
  bool operator==(const BettiTable&) const = default;

 private:
  std::size_t ring_size_ = 0;
  std::uint32_t characteristic_ = 0;
  Entries entries_;
  bool quotient_ = false;
};

BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field = {}, const BettiOptions& options = {});

/// max { j - i : beta_{i,j} != 0 }. Throws on an empty table.
long long regularity(const BettiTable& t);
/// max { i : beta_{i,j} != 0 }. Throws on an empty table.
long long projective_dimension(const BettiTable& t);
/// Auslander-Buchsbaum: n - pd.
long long depth_of_ideal(const BettiTable& t, std::size_t n);
/// All generators in one degree d and every beta_{i,j} on the line j = i + d.
bool has_linear_resolution(const BettiTable& t);
/// Table of S/I: shift i -> i+1 and add beta_{0,0} = 1.
BettiTable quotient_view(const BettiTable& t);

/// {"field":p,"entries":[{"i":..,"j":..,"beta":..}],"reg":R,"pd":P,"depth":D}
nlohmann::json to_json(const BettiTable& t);
/// Macaulay2-style diagram: rows j - i, columns i.
std::string format_betti_diagram(const BettiTable& t);

}  // namespace powedge
