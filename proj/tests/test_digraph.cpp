#include <doctest.h>

#include <nlohmann/json.hpp>

#include "powedge/digraph.hpp"

using namespace powedge;

namespace {

WeightedDigraph graph(std::vector<unsigned> w, std::vector<std::pair<std::string, std::string>> e) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < w.size(); ++i) vs.push_back({"x" + std::to_string(i + 1), w[i]});
  return WeightedDigraph::from_names(std::move(vs), e);
}

}  // namespace

TEST_CASE("edge ideals") {
  const auto p = make_line({1, 3, 1, 2, 5});
  CHECK(edge_ideal(p) == parse_ideal("ring x1 x2 x3 x4 x5\nx1*x2^3\nx2*x3\nx3*x4^2\nx4*x5^5\n"));
  CHECK(edge_ideal(make_line({1, 1})) == parse_ideal("ring x1 x2\nx1*x2\n"));
  CHECK(edge_ideal(make_star_out({1, 2, 2})) == parse_ideal("ring x1 x2 x3\nx1*x2^2\nx1*x3^2\n"));
  CHECK(edge_ideal(WeightedDigraph({{"a", 1}, {"b", 1}}, {})).is_zero());
}

TEST_CASE("source normalization") {
  const auto d = graph({7, 2}, {{"x1", "x2"}});
  CHECK(d.weight(0) == 1);
  CHECK(d.normalized_sources() == std::vector<std::string>{"x1"});
}

TEST_CASE("classification") {
  CHECK(classify(make_line({1, 2, 2, 2, 2})).family == Family::OrientedLine);
  CHECK(classify(make_line({1, 2, 2, 2, 2})).rooted_forest);
  CHECK(classify(graph({3, 1, 1, 1}, {{"x2", "x1"}, {"x3", "x1"}, {"x4", "x1"}})).family == Family::StarIn);
  const auto two = graph({1, 2, 1, 2}, {{"x1", "x2"}, {"x3", "x4"}});
  CHECK(classify(two).family == Family::RootedForest);
  CHECK(classify(make_star_out({1, 2, 2, 2})).family == Family::StarOut);
  CHECK(classify(make_broom({1, 2, 1, 1})).family == Family::Broom);
  const auto zig = graph({1, 5, 1, 8, 1, 2}, {{"x1", "x2"}, {"x3", "x2"}, {"x3", "x4"}, {"x5", "x4"}, {"x5", "x6"}});
  CHECK(classify(zig).family == Family::Other);
  CHECK_FALSE(classify(zig).rooted_forest);
}

TEST_CASE("weight condition") {
  CHECK(weight_condition_ok(make_line({1, 2, 1})));
  CHECK_FALSE(weight_condition_ok(make_line({1, 1, 1})));
  // isolated vertex: degree 0 needs weight >= 2, impossible for a source
  CHECK_FALSE(weight_condition_ok(WeightedDigraph({{"a", 1}, {"b", 2}, {"c", 1}}, {{0, 1}})));
}

TEST_CASE("vertex deletion and neighborhoods") {
  const auto p = make_line({1, 2, 3});
  const auto d = delete_vertices(p, {"x2"});
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 0);
  CHECK(d.weight(0) == 1);
  CHECK(d.weight(1) == 1);
  CHECK(edge_ideal(delete_vertices(p, {"x3"})) == parse_ideal("ring x1 x2\nx1*x2^2\n"));
  CHECK(delete_vertices(make_broom({1, 2, 2, 2}), {"x2"}).edge_count() == 0);

  const auto nb = neighborhoods(p, 1);
  CHECK(nb.in == std::vector<std::size_t>{0});
  CHECK(nb.out == std::vector<std::size_t>{2});
  const auto broom = make_broom({1, 2, 2, 2});
  CHECK(neighborhoods(broom, 1).out == std::vector<std::size_t>{2, 3});
  const WeightedDigraph iso({{"a", 1}}, {});
  CHECK(neighborhoods(iso, 0).in.empty());
}

TEST_CASE("invalid graphs") {
  CHECK_THROWS_AS(WeightedDigraph({{"a", 1}}, {{0, 0}}), ParseError);
  CHECK_THROWS_AS(WeightedDigraph({{"a", 1}, {"b", 1}}, {{0, 1}, {0, 1}}), ParseError);
  CHECK_THROWS_AS(WeightedDigraph({{"a", 1}, {"b", 1}}, {{0, 2}}), ParseError);
  CHECK_THROWS_AS(WeightedDigraph({{"a", 1}, {"b", 0}}, {{0, 1}}), ParseError);
  CHECK_THROWS_AS(digraph_from_json(nlohmann::json::parse(R"({"vertices":[{"name":"a"}],"edges":[["a","q"]]})")),
                  ParseError);
}

TEST_CASE("generators are deterministic and satisfy the hypothesis") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = generate_forest(1 + seed % 6, 4, seed);
    const auto tag = classify(g);
    CHECK(tag.rooted_forest);
    CHECK(tag.weight_condition_ok);
    CHECK(g.edge_count() == 1 + seed % 6);
    CHECK(g == generate_forest(1 + seed % 6, 4, seed));
  }
  CHECK(generate_forest(1, 3, 9).edge_count() == 1);
  for (auto f : {GenFamily::Path, GenFamily::StarOut, GenFamily::StarIn, GenFamily::Broom}) {
    const auto g = generate_family(f, 4, 4, 3);
    CHECK(g.edge_count() == 4);
  }
}

TEST_CASE("JSON round trip") {
  const auto g = generate_forest(4, 4, 11);
  CHECK(digraph_from_json(to_json(g)) == g);
}
