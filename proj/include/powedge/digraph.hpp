#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "powedge/monomial.hpp"

namespace powedge {

struct Vertex {
  std::string name;
  unsigned weight = 1;

  bool operator==(const Vertex&) const = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Vertex-weighted digraph. Construction rejects self-loops, duplicate edges
/// and dangling endpoints, and resets every source vertex to weight 1.
class WeightedDigraph {
 public:
  WeightedDigraph(std::vector<Vertex> vertices, std::vector<Edge> edges);
  static WeightedDigraph from_names(std::vector<Vertex> vertices,
                                    const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& name(std::size_t v) const { return vertices_.at(v).name; }
  unsigned weight(std::size_t v) const { return vertices_.at(v).weight; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_vertex(std::string_view name) const;

  std::size_t in_degree(std::size_t v) const { return in_deg_.at(v); }
  std::size_t out_degree(std::size_t v) const { return out_deg_.at(v); }
  std::size_t degree(std::size_t v) const { return in_deg_.at(v) + out_deg_.at(v); }
  bool is_source(std::size_t v) const { return in_deg_.at(v) == 0; }
  bool is_leaf(std::size_t v) const { return degree(v) == 1; }

  /// Names of vertices whose weight was reset to 1 on construction.
  const std::vector<std::string>& normalized_sources() const noexcept { return normalized_; }
  /// The polynomial ring's variables: one per vertex, in vertex order.
  const ContextPtr& context() const noexcept { return ctx_; }

  unsigned max_weight() const;
  std::uint64_t weight_sum() const;

  bool operator==(const WeightedDigraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> in_deg_;
  std::vector<std::size_t> out_deg_;
  std::vector<std::string> normalized_;
  ContextPtr ctx_;
};

enum class Family { RootedForest, OrientedLine, StarOut, StarIn, Broom, Other };

std::string_view to_string(Family f);

struct FamilyTag {
  Family family = Family::Other;
  /// Lines, out-stars and brooms are also rooted forests.
  bool rooted_forest = false;
  /// w(x) >= 2 whenever d(x) != 1; sources of positive degree count as compliant.
  bool weight_condition_ok = false;
};

FamilyTag classify(const WeightedDigraph& d);
bool weight_condition_ok(const WeightedDigraph& d);

/// I(D) = (x_u x_v^{w_v} : (u,v) in E) over the graph's own context.
MonomialIdeal edge_ideal(const WeightedDigraph& d);
/// Same ideal placed in a larger context, matching variables by vertex name.
MonomialIdeal edge_ideal(const WeightedDigraph& d, const ContextPtr& ctx);

/// Induced subgraph on V \ removed; vertices that become sources get weight 1.
WeightedDigraph delete_vertices(const WeightedDigraph& d, const std::vector<std::string>& removed);

struct Neighborhoods {
  std::vector<std::size_t> in;   ///< N^-(x)
  std::vector<std::size_t> out;  ///< N^+(x)
};

Neighborhoods neighborhoods(const WeightedDigraph& d, std::size_t vertex);

// Builders for the families in the regularity theorems. Vertex i is named
// x{i+1}; `weights` lists every vertex weight (sources are normalized anyway).
WeightedDigraph make_line(const std::vector<unsigned>& weights);
WeightedDigraph make_star_out(const std::vector<unsigned>& weights);
WeightedDigraph make_star_in(const std::vector<unsigned>& weights);
WeightedDigraph make_broom(const std::vector<unsigned>& weights);

enum class GenFamily { Path, StarOut, StarIn, Broom, Forest };

std::optional<GenFamily> parse_gen_family(std::string_view s);

/// Seeded random rooted forest with `edge_count` edges and no isolated
/// vertices. Degree != 1 non-sources get weights in [2, max_weight], leaves
/// in [1, max_weight].
WeightedDigraph generate_forest(unsigned edge_count, unsigned max_weight, std::uint64_t seed);
/// Seeded member of one family whose weights satisfy that family's theorem hypothesis.
WeightedDigraph generate_family(GenFamily family, unsigned edge_count, unsigned max_weight, std::uint64_t seed);

// JSON: {"vertices":[{"name":"x1","weight":3},...],"edges":[["x1","x2"],...]}
nlohmann::json to_json(const WeightedDigraph& d);
WeightedDigraph digraph_from_json(const nlohmann::json& j);

}  // namespace powedge
