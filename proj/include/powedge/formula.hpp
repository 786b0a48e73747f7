#pragma once

// Closed-form predictions of reg/pd/depth for the digraph families with
// known formulas. Predictions are evaluated from graph data alone and are
// always returned; `hypothesis_ok` records whether the instance satisfies the
// hypotheses under which the formula is a theorem.

#include <span>
#include <string>
#include <string_view>

#include "powedge/digraph.hpp"

namespace powedge {

enum class Quantity { RegPower, PdPower, RegBase, PdBase, Depth, RegRegseqPower, Lem11UpperBound };

std::string_view to_string(Quantity q);

struct Prediction {
  Quantity quantity = Quantity::RegPower;
  long long value = 0;
  bool hypothesis_ok = false;
  std::string provenance;
};

/// reg(I(D)^t) = sum w - |E| + 1 + (t-1)(w+1), w the maximal weight.
/// Hypothesis: rooted forest with w(x) >= 2 whenever d(x) != 1.
Prediction predict_reg_power_forest(const WeightedDigraph& d, unsigned t);
/// pd(I(D)^t) = |E| - 1 under the same hypothesis.
Prediction predict_pd_power_forest(const WeightedDigraph& d, unsigned t);
/// t = 1 predictors: reg(I(D)) = sum w - |E| + 1 and pd(I(D)) = |E| - 1.
Prediction predict_reg_base(const WeightedDigraph& d);
Prediction predict_pd_base(const WeightedDigraph& d);
/// reg(I(D)^t) = reg_base + (t-1)(w+1).
Prediction predict_reg_recursion(const WeightedDigraph& d, unsigned t, long long reg_base);
/// depth(I(D)) = n - |E| + 1.
Prediction predict_depth(const WeightedDigraph& d);

/// Same value as predict_reg_power_forest, but with the hypothesis of the
/// theorem that covers the graph's family: oriented lines need internal
/// weights >= 2, the two stars need nothing, the broom needs w(center) >= 2.
/// Other graphs fall back to the forest hypothesis.
Prediction predict_reg_power_family(const WeightedDigraph& d, unsigned t);

/// reg(I^t) = sum d_i - (r-1) + (t-1) max d_i for a regular sequence of
/// degrees d_1..d_r. Throws on an empty list.
Prediction predict_reg_regseq_power(std::span<const unsigned> degrees, unsigned t);
/// Degrees taken from G(I); the hypothesis holds when the generators have
/// pairwise disjoint supports (then they form a regular sequence).
Prediction predict_reg_regseq_power(const MonomialIdeal& ideal, unsigned t);

struct Lem11Instance {
  Prediction bound;
  /// G(I(P)^2) without the squares of the edge generators.
  MonomialIdeal ideal;
};

/// Upper bound sum w - (n-1) + 1 + (w+1) on reg(I_n) for an oriented line
/// with n >= 3 vertices. Throws std::invalid_argument for other graphs.
Lem11Instance lem11_bound(const WeightedDigraph& line);

/// Vertices of an oriented line from its source to its sink.
std::vector<std::size_t> line_order(const WeightedDigraph& line);

}  // namespace powedge
