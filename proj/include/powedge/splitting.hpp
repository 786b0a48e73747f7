#pragma once

// Structural identities checked exactly: Betti splittings I = J + K, the
// leaf colon/sum lemmas for edge ideals, and a few Betti-level invariances
// (disjoint-support additivity, monomial shifts, polarization).
//
// Ideal identities are compared through canonical minimal generators. Betti
// tables enter only where the claim is about Betti numbers.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "powedge/betti.hpp"
#include "powedge/digraph.hpp"

namespace powedge {

class DegenerateSplit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SplittingInstance {
  MonomialIdeal whole;
  MonomialIdeal j;
  MonomialIdeal k;
  MonomialIdeal j_cap_k;
  std::optional<std::size_t> split_variable;
};

/// J = generators of I divisible by the variable, K = the rest.
/// Throws DegenerateSplit when either side is empty.
SplittingInstance variable_split(const MonomialIdeal& ideal, std::size_t variable);

struct SplitWitness {
  unsigned i = 0;
  std::uint64_t j = 0;
  std::uint64_t whole = 0;  ///< beta_{i,j}(I)
  std::uint64_t parts = 0;  ///< beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J cap K)
};

struct SplittingTables {
  BettiTable whole, j, k, j_cap_k;
};

SplittingTables splitting_tables(const SplittingInstance& s, FieldSpec field, const BettiOptions& options = {});

struct SplittingVerdict {
  bool holds = true;
  std::optional<SplitWitness> witness;  ///< first failing (i,j) in lexicographic order
};

SplittingVerdict is_betti_splitting(const SplittingTables& tables);
/// Throws CapExceeded if any of the four ideals is over the generator cap.
SplittingVerdict is_betti_splitting(const SplittingInstance& s, FieldSpec field, const BettiOptions& options = {});

struct SplittingConsequences {
  long long reg_whole = 0, reg_j = 0, reg_k = 0, reg_j_cap_k = 0;
  long long pd_whole = 0, pd_j = 0, pd_k = 0, pd_j_cap_k = 0;
  bool reg_formula_holds = false;  ///< reg I = max{reg J, reg K, reg(J cap K) - 1}
  bool pd_formula_holds = false;   ///< pd I = max{pd J, pd K, pd(J cap K) + 1}
  bool both_hold() const { return reg_formula_holds && pd_formula_holds; }
};

SplittingConsequences check_splitting_consequences(const SplittingTables& tables);
SplittingConsequences check_splitting_consequences(const SplittingInstance& s, FieldSpec field,
                                                   const BettiOptions& options = {});

struct LeafLemmaReport {
  std::string leaf;
  std::string parent;
  unsigned t = 1;
  /// (I^t, z^w) = (I(D \ z)^t, z^w)
  bool sum_identity = false;
  /// (I^t : y z^w) = I^{t-1}; absent for t = 1
  std::optional<bool> colon_identity;
  /// ((I^t : z^w), y) = (I(D \ y)^t, y); absent for t = 1
  std::optional<bool> colon_sum_identity;

  bool all_hold() const {
    return sum_identity && colon_identity.value_or(true) && colon_sum_identity.value_or(true);
  }
};

/// Throws std::invalid_argument unless `leaf` has degree 1 and exactly one
/// in-neighbor, or if t = 0.
LeafLemmaReport check_leaf_lemmas(const WeightedDigraph& d, const std::string& leaf, unsigned t);

/// Vertex names that qualify as z for check_leaf_lemmas.
std::vector<std::string> target_leaves(const WeightedDigraph& d);

/// Copy of `ideal` in a fresh context whose variable names carry `prefix`.
MonomialIdeal rename_variables(const MonomialIdeal& ideal, const std::string& prefix);

struct AdditivityReport {
  long long reg_a = 0, reg_b = 0, reg_sum = 0;  ///< quotient regularities
  long long pd_a = 0, pd_b = 0, pd_sum = 0;     ///< quotient projective dimensions
  bool reg_additive() const { return reg_sum == reg_a + reg_b; }
  bool pd_additive() const { return pd_sum == pd_a + pd_b; }
};

/// Places `a` and `b` on disjoint variable sets and compares reg/pd of
/// S/(a + b) with the sums over the two factors.
AdditivityReport check_disjoint_additivity(const MonomialIdeal& a, const MonomialIdeal& b, FieldSpec field,
                                           const BettiOptions& options = {});

struct ShiftReport {
  long long reg_ideal = 0;
  long long reg_shifted = 0;
  long long shift_degree = 0;
  bool holds() const { return reg_shifted == reg_ideal + shift_degree; }
};

/// reg(uI) against reg(I) + deg u. Throws std::invalid_argument unless u is
/// a non-unit monomial whose support misses supp(I).
ShiftReport check_monomial_shift(const MonomialIdeal& ideal, const Monomial& u, FieldSpec field,
                                 const BettiOptions& options = {});

/// Tables of I and of its polarization agree entrywise.
bool polarization_preserves_betti(const MonomialIdeal& ideal, FieldSpec field, const BettiOptions& options = {});

/// u_r I^{t-1} cap J^t = u_r J^t with J = (u_1..u_{r-1}) and I = (u_1..u_r),
/// for monomials with pairwise disjoint supports. Requires r >= 2 and t >= 2.
bool check_regseq_intersection(const MonomialIdeal& sequence, unsigned t);

}  // namespace powedge
