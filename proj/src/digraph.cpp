#include "powedge/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "powedge/rng.hpp"

namespace powedge {

WeightedDigraph::WeightedDigraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw ParseError("digraph needs at least one vertex");
  in_deg_.assign(n, 0);
  out_deg_.assign(n, 0);
  std::set<Edge> seen;
  for (const auto& [u, v] : edges_) {
    if (u >= n || v >= n) throw ParseError("edge endpoint is not a declared vertex");
    if (u == v) throw ParseError("self-loop at '" + vertices_[u].name + "'");
    if (!seen.insert({u, v}).second)
      throw ParseError("duplicate edge " + vertices_[u].name + "->" + vertices_[v].name);
    ++out_deg_[u];
    ++in_deg_[v];
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (vertices_[v].weight == 0) throw ParseError("weight of '" + vertices_[v].name + "' must be positive");
    if (in_deg_[v] == 0 && vertices_[v].weight != 1) {
      vertices_[v].weight = 1;
      normalized_.push_back(vertices_[v].name);
    }
    names.push_back(vertices_[v].name);
  }
  ctx_ = make_context(std::move(names));  // rejects duplicate names
}

WeightedDigraph WeightedDigraph::from_names(std::vector<Vertex> vertices,
                                            const std::vector<std::pair<std::string, std::string>>& edges) {
  auto lookup = [&](const std::string& name) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].name == name) return i;
    throw ParseError("edge endpoint '" + name + "' is not a declared vertex");
  };
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (const auto& [u, v] : edges) e.emplace_back(lookup(u), lookup(v));
  return WeightedDigraph(std::move(vertices), std::move(e));
}

std::optional<std::size_t> WeightedDigraph::index_of(std::string_view name) const {
  return ctx_->index_of(name);
}

std::size_t WeightedDigraph::require_vertex(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
  return *idx;
}

unsigned WeightedDigraph::max_weight() const {
  unsigned w = 0;
  for (const auto& v : vertices_) w = std::max(w, v.weight);
  return w;
}

std::uint64_t WeightedDigraph::weight_sum() const {
  std::uint64_t s = 0;
  for (const auto& v : vertices_) s += v.weight;
  return s;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::RootedForest: return "ROOTED_FOREST";
    case Family::OrientedLine: return "ORIENTED_LINE";
    case Family::StarOut: return "STAR_OUT";
    case Family::StarIn: return "STAR_IN";
    case Family::Broom: return "BROOM";
    case Family::Other: return "OTHER";
  }
  return "OTHER";
}

namespace {

/// Union-find over the underlying undirected graph; false on any cycle.
bool underlying_acyclic(const WeightedDigraph& d, std::size_t* components) {
  std::vector<std::size_t> parent(d.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = d.vertex_count();
  for (const auto& [u, v] : d.edges()) {
    auto a = find(u);
    auto b = find(v);
    if (a == b) return false;
    parent[a] = b;
    --comps;
  }
  if (components) *components = comps;
  return true;
}

bool is_line(const WeightedDigraph& d) {
  std::size_t comps = 0;
  if (d.edge_count() == 0 || !underlying_acyclic(d, &comps) || comps != 1) return false;
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    if (d.in_degree(v) > 1 || d.out_degree(v) > 1) return false;
  return true;
}

bool is_tree_shape(const WeightedDigraph& d) {
  std::size_t comps = 0;
  return underlying_acyclic(d, &comps) && comps == 1;
}

bool is_star_out(const WeightedDigraph& d) {
  const auto n = d.vertex_count();
  if (n < 3 || !is_tree_shape(d)) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (d.out_degree(v) == n - 1) return true;
  return false;
}

bool is_star_in(const WeightedDigraph& d) {
  const auto n = d.vertex_count();
  if (n < 3 || !is_tree_shape(d)) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (d.in_degree(v) == n - 1) return true;
  return false;
}

// {x1x2, x2x3, ..., x2xn}: a center with one in-edge from a source and n-2 out-edges.
bool is_broom(const WeightedDigraph& d) {
  const auto n = d.vertex_count();
  if (n < 4 || !is_tree_shape(d)) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (d.in_degree(v) == 1 && d.out_degree(v) == n - 2) return true;
  return false;
}

}  // namespace

bool weight_condition_ok(const WeightedDigraph& d) {
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    const auto deg = d.degree(v);
    if (deg == 1) continue;
    if (deg == 0) return false;
    if (d.is_source(v)) continue;
    if (d.weight(v) < 2) return false;
  }
  return true;
}

FamilyTag classify(const WeightedDigraph& d) {
  FamilyTag tag;
  tag.weight_condition_ok = weight_condition_ok(d);
  tag.rooted_forest = underlying_acyclic(d, nullptr);
  for (std::size_t v = 0; tag.rooted_forest && v < d.vertex_count(); ++v)
    if (d.in_degree(v) > 1) tag.rooted_forest = false;

  if (is_line(d))
    tag.family = Family::OrientedLine;
  else if (is_star_out(d))
    tag.family = Family::StarOut;
  else if (is_star_in(d))
    tag.family = Family::StarIn;
  else if (is_broom(d))
    tag.family = Family::Broom;
  else if (tag.rooted_forest)
    tag.family = Family::RootedForest;
  else
    tag.family = Family::Other;
  return tag;
}

MonomialIdeal edge_ideal(const WeightedDigraph& d) { return edge_ideal(d, d.context()); }

MonomialIdeal edge_ideal(const WeightedDigraph& d, const ContextPtr& ctx) {
  std::vector<std::size_t> slot(d.vertex_count());
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    auto idx = ctx->index_of(d.name(v));
    if (!idx) throw ContextMismatch();
    slot[v] = *idx;
  }
  std::vector<Monomial> gens;
  gens.reserve(d.edge_count());
  for (const auto& [u, v] : d.edges()) {
    std::vector<Exponent> e(ctx->size(), 0);
    e[slot[u]] += 1;
    e[slot[v]] += d.weight(v);
    gens.emplace_back(ctx, std::move(e));
  }
  return minimalize(ctx, std::move(gens));
}

WeightedDigraph delete_vertices(const WeightedDigraph& d, const std::vector<std::string>& removed) {
  std::vector<bool> gone(d.vertex_count(), false);
  for (const auto& name : removed) gone[d.require_vertex(name)] = true;
  std::vector<std::size_t> remap(d.vertex_count(), 0);
  std::vector<Vertex> vs;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (gone[v]) continue;
    remap[v] = vs.size();
    vs.push_back(d.vertices()[v]);
  }
  if (vs.empty()) throw std::invalid_argument("delete_vertices: no vertices left");
  std::vector<Edge> es;
  for (const auto& [u, v] : d.edges())
    if (!gone[u] && !gone[v]) es.emplace_back(remap[u], remap[v]);
  // The constructor resets new sources to weight 1, as the induced-subgraph definition requires.
  return WeightedDigraph(std::move(vs), std::move(es));
}

Neighborhoods neighborhoods(const WeightedDigraph& d, std::size_t vertex) {
  if (vertex >= d.vertex_count()) throw std::invalid_argument("unknown vertex index");
  Neighborhoods nb;
  for (const auto& [u, v] : d.edges()) {
    if (v == vertex) nb.in.push_back(u);
    if (u == vertex) nb.out.push_back(v);
  }
  std::sort(nb.in.begin(), nb.in.end());
  std::sort(nb.out.begin(), nb.out.end());
  return nb;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Vertex> named_vertices(const std::vector<unsigned>& weights) {
  std::vector<Vertex> vs;
  vs.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) vs.push_back({"x" + std::to_string(i + 1), weights[i]});
  return vs;
}

void require_at_least(const std::vector<unsigned>& weights, std::size_t n, const char* what) {
  if (weights.size() < n) throw std::invalid_argument(std::string(what) + ": too few vertices");
}

}  // namespace

WeightedDigraph make_line(const std::vector<unsigned>& weights) {
  require_at_least(weights, 2, "make_line");
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) es.emplace_back(i, i + 1);
  return WeightedDigraph(named_vertices(weights), std::move(es));
}

WeightedDigraph make_star_out(const std::vector<unsigned>& weights) {
  require_at_least(weights, 2, "make_star_out");
  std::vector<Edge> es;
  for (std::size_t i = 1; i < weights.size(); ++i) es.emplace_back(0, i);
  return WeightedDigraph(named_vertices(weights), std::move(es));
}

WeightedDigraph make_star_in(const std::vector<unsigned>& weights) {
  require_at_least(weights, 2, "make_star_in");
  std::vector<Edge> es;
  for (std::size_t i = 1; i < weights.size(); ++i) es.emplace_back(i, 0);
  return WeightedDigraph(named_vertices(weights), std::move(es));
}

WeightedDigraph make_broom(const std::vector<unsigned>& weights) {
  require_at_least(weights, 3, "make_broom");
  std::vector<Edge> es{{0, 1}};
  for (std::size_t i = 2; i < weights.size(); ++i) es.emplace_back(1, i);
  return WeightedDigraph(named_vertices(weights), std::move(es));
}

std::optional<GenFamily> parse_gen_family(std::string_view s) {
  if (s == "path") return GenFamily::Path;
  if (s == "star-out") return GenFamily::StarOut;
  if (s == "star-in") return GenFamily::StarIn;
  if (s == "broom") return GenFamily::Broom;
  if (s == "forest") return GenFamily::Forest;
  return std::nullopt;
}

namespace {

void check_bounds(unsigned edge_count, unsigned max_weight) {
  if (edge_count < 1) throw std::invalid_argument("edge count must be at least 1");
  if (max_weight < 2) throw std::invalid_argument("max weight must be at least 2");
}

/// Weights compatible with the forest hypothesis, drawn in vertex order.
std::vector<unsigned> draw_weights(const std::vector<std::size_t>& in_deg, const std::vector<std::size_t>& deg,
                                   unsigned max_weight, Rng& rng) {
  std::vector<unsigned> w(deg.size(), 1);
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (in_deg[v] == 0) continue;
    w[v] = deg[v] == 1 ? rng.in_range(1, max_weight) : rng.in_range(2, max_weight);
  }
  return w;
}

WeightedDigraph assemble(std::size_t n, std::vector<Edge> es, unsigned max_weight, Rng& rng) {
  std::vector<std::size_t> in_deg(n, 0), deg(n, 0);
  for (const auto& [u, v] : es) {
    ++in_deg[v];
    ++deg[u];
    ++deg[v];
  }
  return WeightedDigraph(named_vertices(draw_weights(in_deg, deg, max_weight, rng)), std::move(es));
}

}  // namespace

WeightedDigraph generate_forest(unsigned edge_count, unsigned max_weight, std::uint64_t seed) {
  check_bounds(edge_count, max_weight);
  Rng rng(seed);
  std::size_t n = 2;
  std::vector<Edge> es{{0, 1}};
  for (unsigned k = 1; k < edge_count; ++k) {
    if (rng.below(4) == 0) {
      // new component: a fresh root with one child
      es.emplace_back(n, n + 1);
      n += 2;
    } else {
      es.emplace_back(rng.below(n), n);
      ++n;
    }
  }
  return assemble(n, std::move(es), max_weight, rng);
}

WeightedDigraph generate_family(GenFamily family, unsigned edge_count, unsigned max_weight, std::uint64_t seed) {
  check_bounds(edge_count, max_weight);
  if (family == GenFamily::Forest) return generate_forest(edge_count, max_weight, seed);
  Rng rng(seed);
  const std::size_t n = edge_count + 1;
  std::vector<Edge> es;
  switch (family) {
    case GenFamily::Path:
      for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
      break;
    case GenFamily::StarOut:
      for (std::size_t i = 1; i < n; ++i) es.emplace_back(0, i);
      break;
    case GenFamily::StarIn:
      for (std::size_t i = 1; i < n; ++i) es.emplace_back(i, 0);
      break;
    case GenFamily::Broom:
      es.emplace_back(0, 1);
      for (std::size_t i = 2; i < n; ++i) es.emplace_back(1, i);
      break;
    case GenFamily::Forest:
      break;
  }
  return assemble(n, std::move(es), max_weight, rng);
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const WeightedDigraph& d) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : d.vertices()) vs.push_back({{"name", v.name}, {"weight", v.weight}});
  nlohmann::json es = nlohmann::json::array();
  for (const auto& [u, v] : d.edges()) es.push_back({d.name(u), d.name(v)});
  return {{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

WeightedDigraph digraph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Vertex> vs;
    for (const auto& v : j.at("vertices")) {
      const auto w = v.value("weight", 1LL);
      if (w < 1) throw ParseError("weight must be a positive integer");
      vs.push_back({v.at("name").get<std::string>(), static_cast<unsigned>(w)});
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a [from, to] pair");
      es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return WeightedDigraph::from_names(std::move(vs), es);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("digraph JSON: ") + ex.what());
  }
}

}  // namespace powedge
