#include "powedge/splitting.hpp"

#include <algorithm>
#include <set>

namespace powedge {

SplittingInstance variable_split(const MonomialIdeal& ideal, std::size_t variable) {
  if (variable >= ideal.context()->size()) throw std::out_of_range("variable_split: variable index out of range");
  std::vector<Monomial> j, k;
  for (const auto& g : ideal.generators()) (g.exponent(variable) > 0 ? j : k).push_back(g);
  if (j.empty() || k.empty())
    throw DegenerateSplit("variable_split: " + std::string(j.empty() ? "J" : "K") + " is empty for variable " +
                          ideal.context()->name(variable));
  auto jj = minimalize(ideal.context(), std::move(j));
  auto kk = minimalize(ideal.context(), std::move(k));
  auto cap = intersect(jj, kk);
  return {ideal, std::move(jj), std::move(kk), std::move(cap), variable};
}

SplittingTables splitting_tables(const SplittingInstance& s, FieldSpec field, const BettiOptions& options) {
  // Check every cap before the expensive work starts.
  for (const auto* ideal : {&s.whole, &s.j, &s.k, &s.j_cap_k})
    if (ideal->size() > options.max_generators) throw CapExceeded(ideal->size(), options.max_generators);
  return {betti_table(s.whole, field, options), betti_table(s.j, field, options), betti_table(s.k, field, options),
          betti_table(s.j_cap_k, field, options)};
}

SplittingVerdict is_betti_splitting(const SplittingTables& t) {
  std::set<std::pair<unsigned, std::uint64_t>> keys;
  for (const auto* table : {&t.whole, &t.j, &t.k})
    for (const auto& [key, beta] : table->entries()) keys.insert(key);
  for (const auto& [key, beta] : t.j_cap_k.entries()) keys.insert({key.first + 1, key.second});

  for (const auto& [i, j] : keys) {
    const std::uint64_t whole = t.whole.at(i, j);
    const std::uint64_t parts = t.j.at(i, j) + t.k.at(i, j) + (i > 0 ? t.j_cap_k.at(i - 1, j) : 0);
    if (whole != parts) return {false, SplitWitness{i, j, whole, parts}};
  }
  return {};
}

SplittingVerdict is_betti_splitting(const SplittingInstance& s, FieldSpec field, const BettiOptions& options) {
  return is_betti_splitting(splitting_tables(s, field, options));
}

SplittingConsequences check_splitting_consequences(const SplittingTables& t) {
  SplittingConsequences c;
  c.reg_whole = regularity(t.whole);
  c.reg_j = regularity(t.j);
  c.reg_k = regularity(t.k);
  c.reg_j_cap_k = regularity(t.j_cap_k);
  c.pd_whole = projective_dimension(t.whole);
  c.pd_j = projective_dimension(t.j);
  c.pd_k = projective_dimension(t.k);
  c.pd_j_cap_k = projective_dimension(t.j_cap_k);
  c.reg_formula_holds = c.reg_whole == std::max({c.reg_j, c.reg_k, c.reg_j_cap_k - 1});
  c.pd_formula_holds = c.pd_whole == std::max({c.pd_j, c.pd_k, c.pd_j_cap_k + 1});
  return c;
}

SplittingConsequences check_splitting_consequences(const SplittingInstance& s, FieldSpec field,
                                                   const BettiOptions& options) {
  return check_splitting_consequences(splitting_tables(s, field, options));
}

std::vector<std::string> target_leaves(const WeightedDigraph& d) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    if (d.is_leaf(v) && d.in_degree(v) == 1) out.push_back(d.name(v));
  return out;
}

LeafLemmaReport check_leaf_lemmas(const WeightedDigraph& d, const std::string& leaf, unsigned t) {
  if (t == 0) throw std::invalid_argument("check_leaf_lemmas: t must be at least 1");
  const std::size_t z = d.require_vertex(leaf);
  const auto nb = neighborhoods(d, z);
  if (!d.is_leaf(z) || nb.in.size() != 1)
    throw std::invalid_argument("check_leaf_lemmas: " + leaf + " is not a leaf with a unique in-neighbor");
  const std::size_t y = nb.in.front();

  const auto& ctx = d.context();
  const MonomialIdeal it = power(edge_ideal(d), t);
  const Monomial zw = Monomial::variable(ctx, z, d.weight(z));
  const Monomial yv = Monomial::variable(ctx, y);

  LeafLemmaReport r;
  r.leaf = leaf;
  r.parent = d.name(y);
  r.t = t;

  const MonomialIdeal without_z = power(edge_ideal(delete_vertices(d, {leaf}), ctx), t);
  r.sum_identity = with_generator(it, zw) == with_generator(without_z, zw);

  if (t >= 2) {
    r.colon_identity = colon_by_monomial(it, yv * zw) == power(edge_ideal(d), t - 1);
    const MonomialIdeal without_y = power(edge_ideal(delete_vertices(d, {d.name(y)}), ctx), t);
    r.colon_sum_identity = with_generator(colon_by_monomial(it, zw), yv) == with_generator(without_y, yv);
  }
  return r;
}

MonomialIdeal rename_variables(const MonomialIdeal& ideal, const std::string& prefix) {
  std::vector<std::string> names;
  for (const auto& n : ideal.context()->names()) names.push_back(prefix + n);
  auto ctx = make_context(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators())
    gens.emplace_back(ctx, std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
  return minimalize(std::move(ctx), std::move(gens));
}

namespace {

// Same generators over a context that contains every variable name of `ideal`.
MonomialIdeal embed(const MonomialIdeal& ideal, const ContextPtr& ctx) {
  const auto& from = *ideal.context();
  std::vector<std::size_t> slot(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto idx = ctx->index_of(from.name(i));
    if (!idx) throw ContextMismatch();
    slot[i] = *idx;
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(ctx->size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) e[slot[i]] = g.exponent(i);
    gens.emplace_back(ctx, std::move(e));
  }
  return minimalize(ctx, std::move(gens));
}

}  // namespace

AdditivityReport check_disjoint_additivity(const MonomialIdeal& a, const MonomialIdeal& b, FieldSpec field,
                                           const BettiOptions& options) {
  const auto ra = rename_variables(a, "a.");
  const auto rb = rename_variables(b, "b.");
  auto names = ra.context()->names();
  names.insert(names.end(), rb.context()->names().begin(), rb.context()->names().end());
  const auto ctx = make_context(std::move(names));
  const auto whole = sum(embed(ra, ctx), embed(rb, ctx));

  const auto qa = quotient_view(betti_table(a, field, options));
  const auto qb = quotient_view(betti_table(b, field, options));
  const auto qs = quotient_view(betti_table(whole, field, options));
  AdditivityReport r;
  r.reg_a = regularity(qa);
  r.reg_b = regularity(qb);
  r.reg_sum = regularity(qs);
  r.pd_a = projective_dimension(qa);
  r.pd_b = projective_dimension(qb);
  r.pd_sum = projective_dimension(qs);
  return r;
}

ShiftReport check_monomial_shift(const MonomialIdeal& ideal, const Monomial& u, FieldSpec field,
                                 const BettiOptions& options) {
  if (!same_context(ideal.context(), u.context())) throw ContextMismatch();
  if (u.is_unit()) throw std::invalid_argument("check_monomial_shift: u must not be the unit");
  const auto supp = ideal.support();
  for (auto v : u.support())
    if (supp.count(v)) throw std::invalid_argument("check_monomial_shift: u shares a variable with the ideal");
  ShiftReport r;
  r.reg_ideal = regularity(betti_table(ideal, field, options));
  r.reg_shifted = regularity(betti_table(product(u, ideal), field, options));
  r.shift_degree = static_cast<long long>(u.degree());
  return r;
}

bool polarization_preserves_betti(const MonomialIdeal& ideal, FieldSpec field, const BettiOptions& options) {
  return betti_table(ideal, field, options).same_entries(betti_table(polarize(ideal), field, options));
}

bool check_regseq_intersection(const MonomialIdeal& sequence, unsigned t) {
  if (sequence.size() < 2 || t < 2)
    throw std::invalid_argument("check_regseq_intersection: needs r >= 2 generators and t >= 2");
  std::set<std::size_t> seen;
  for (const auto& g : sequence.generators())
    for (auto v : g.support())
      if (!seen.insert(v).second)
        throw std::invalid_argument("check_regseq_intersection: supports are not pairwise disjoint");

  const auto& gens = sequence.generators();
  const Monomial& last = gens.back();
  const auto j = minimalize(sequence.context(), std::vector<Monomial>(gens.begin(), gens.end() - 1));
  const auto jt = power(j, t);
  return intersect(product(last, power(sequence, t - 1)), jt) == product(last, jt);
}

}  // namespace powedge
