#include "powedge/formula.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace powedge {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::RegPower: return "REG_POWER";
    case Quantity::PdPower: return "PD_POWER";
    case Quantity::RegBase: return "REG_BASE";
    case Quantity::PdBase: return "PD_BASE";
    case Quantity::Depth: return "DEPTH";
    case Quantity::RegRegseqPower: return "REG_REGSEQ_POWER";
    case Quantity::Lem11UpperBound: return "LEM11_UPPER_BOUND";
  }
  return "REG_POWER";
}

namespace {

void require_power(unsigned t) {
  if (t == 0) throw std::invalid_argument("power t must be at least 1");
}

bool forest_hypothesis(const WeightedDigraph& d) {
  const auto tag = classify(d);
  return tag.rooted_forest && tag.weight_condition_ok;
}

long long base_regularity(const WeightedDigraph& d) {
  return static_cast<long long>(d.weight_sum()) - static_cast<long long>(d.edge_count()) + 1;
}

long long linear_term(const WeightedDigraph& d, unsigned t) {
  return static_cast<long long>(t - 1) * (static_cast<long long>(d.max_weight()) + 1);
}

}  // namespace

Prediction predict_reg_power_forest(const WeightedDigraph& d, unsigned t) {
  require_power(t);
  return {Quantity::RegPower, base_regularity(d) + linear_term(d, t), forest_hypothesis(d),
          "rooted-forest-regularity"};
}

Prediction predict_pd_power_forest(const WeightedDigraph& d, unsigned t) {
  require_power(t);
  return {Quantity::PdPower, static_cast<long long>(d.edge_count()) - 1, forest_hypothesis(d),
          "rooted-forest-projective-dimension"};
}

Prediction predict_reg_base(const WeightedDigraph& d) {
  return {Quantity::RegBase, base_regularity(d), forest_hypothesis(d), "rooted-forest-regularity-base"};
}

Prediction predict_pd_base(const WeightedDigraph& d) {
  return {Quantity::PdBase, static_cast<long long>(d.edge_count()) - 1, forest_hypothesis(d),
          "rooted-forest-projective-dimension-base"};
}

Prediction predict_reg_recursion(const WeightedDigraph& d, unsigned t, long long reg_base) {
  require_power(t);
  return {Quantity::RegPower, reg_base + linear_term(d, t), forest_hypothesis(d), "rooted-forest-regularity-recursion"};
}

Prediction predict_depth(const WeightedDigraph& d) {
  return {Quantity::Depth, static_cast<long long>(d.vertex_count()) - static_cast<long long>(d.edge_count()) + 1,
          forest_hypothesis(d), "rooted-forest-depth"};
}

Prediction predict_reg_power_family(const WeightedDigraph& d, unsigned t) {
  Prediction p = predict_reg_power_forest(d, t);
  const auto tag = classify(d);
  switch (tag.family) {
    case Family::OrientedLine:
      p.hypothesis_ok = tag.weight_condition_ok;
      p.provenance = "oriented-line-regularity";
      break;
    case Family::StarOut:
    case Family::StarIn:
      p.hypothesis_ok = true;
      p.provenance = "oriented-star-regularity";
      break;
    case Family::Broom: {
      std::size_t center = 0;
      for (std::size_t v = 0; v < d.vertex_count(); ++v)
        if (d.in_degree(v) == 1 && d.out_degree(v) + 2 == d.vertex_count()) center = v;
      p.hypothesis_ok = d.weight(center) >= 2;
      p.provenance = "oriented-star-regularity";
      break;
    }
    case Family::RootedForest:
    case Family::Other:
      break;
  }
  return p;
}

Prediction predict_reg_regseq_power(std::span<const unsigned> degrees, unsigned t) {
  require_power(t);
  if (degrees.empty()) throw std::invalid_argument("regular sequence needs at least one degree");
  const long long r = static_cast<long long>(degrees.size());
  const long long total = std::accumulate(degrees.begin(), degrees.end(), 0LL);
  const long long top = *std::max_element(degrees.begin(), degrees.end());
  return {Quantity::RegRegseqPower, total - (r - 1) + static_cast<long long>(t - 1) * top, true,
          "regular-sequence-power-regularity"};
}

Prediction predict_reg_regseq_power(const MonomialIdeal& ideal, unsigned t) {
  std::vector<unsigned> degrees;
  for (auto deg : ideal.degrees()) degrees.push_back(static_cast<unsigned>(deg));
  Prediction p = predict_reg_regseq_power(degrees, t);
  std::set<std::size_t> seen;
  for (const auto& g : ideal.generators()) {
    for (auto v : g.support()) {
      if (!seen.insert(v).second) p.hypothesis_ok = false;
    }
  }
  return p;
}

std::vector<std::size_t> line_order(const WeightedDigraph& line) {
  if (classify(line).family != Family::OrientedLine) throw std::invalid_argument("graph is not an oriented line");
  std::vector<std::size_t> next(line.vertex_count(), line.vertex_count());
  for (const auto& [u, v] : line.edges()) next[u] = v;
  std::size_t v = 0;
  while (!line.is_source(v)) ++v;
  std::vector<std::size_t> order;
  for (; v < line.vertex_count(); v = next[v]) order.push_back(v);
  return order;
}

Lem11Instance lem11_bound(const WeightedDigraph& line) {
  const auto order = line_order(line);
  const std::size_t n = order.size();
  if (n < 3) throw std::invalid_argument("lem11_bound needs an oriented line with at least 3 vertices");

  const MonomialIdeal base = edge_ideal(line);
  std::vector<Monomial> squares;
  for (const auto& g : base.generators()) squares.push_back(g * g);
  std::vector<Monomial> kept;
  const MonomialIdeal square = power(base, 2);
  for (const auto& g : square.generators())
    if (std::find(squares.begin(), squares.end(), g) == squares.end()) kept.push_back(g);

  bool internal_ok = true;
  for (std::size_t k = 1; k + 1 < n; ++k) internal_ok = internal_ok && line.weight(order[k]) >= 2;

  const long long value = static_cast<long long>(line.weight_sum()) - static_cast<long long>(n - 1) + 1 +
                          (static_cast<long long>(line.max_weight()) + 1);
  return {Prediction{Quantity::Lem11UpperBound, value, internal_ok, "line-square-subideal-bound"},
          minimalize(line.context(), std::move(kept))};
}

}  // namespace powedge
