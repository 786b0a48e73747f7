#include <doctest.h>

#include "powedge/formula.hpp"
#include "powedge/harness.hpp"

using namespace powedge;

TEST_CASE("forest regularity and projective dimension") {
  const auto p = make_line({1, 2, 2});
  CHECK(predict_reg_power_forest(p, 2).value == 7);
  CHECK(predict_reg_power_forest(p, 2).hypothesis_ok);
  CHECK(predict_reg_power_forest(p, 1).value == 5 - 2 + 1);
  CHECK(predict_pd_power_forest(make_line({1, 3}), 5).value == 0);

  const auto graphs = paper_example_graphs();
  const auto& a = graphs[0].second;
  const auto& b = graphs[1].second;
  const auto& c = graphs[2].second;
  CHECK(predict_reg_power_forest(a, 2).value == 22);
  CHECK_FALSE(predict_reg_power_forest(a, 2).hypothesis_ok);
  CHECK(predict_reg_power_forest(b, 2).value == 23);
  CHECK(predict_pd_power_forest(b, 2).value == 4);
  CHECK_FALSE(predict_pd_power_forest(b, 2).hypothesis_ok);
  CHECK(predict_pd_power_forest(c, 2).value == 5);
  CHECK(predict_reg_power_forest(c, 2).value == 10);
  CHECK_FALSE(predict_pd_power_forest(c, 2).hypothesis_ok);
  CHECK_THROWS(predict_reg_power_forest(p, 0));
}

TEST_CASE("linear growth in t") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = generate_forest(1 + seed % 5, 4, seed);
    for (unsigned t = 1; t < 5; ++t)
      CHECK(predict_reg_power_forest(g, t + 1).value - predict_reg_power_forest(g, t).value ==
            g.max_weight() + 1);
  }
}

TEST_CASE("recursion") {
  const auto g = make_line({1, 2, 2});
  CHECK(predict_reg_recursion(g, 3, 4).value == 10);
  CHECK(predict_reg_recursion(g, 1, 4).value == 4);
  for (unsigned t = 1; t < 4; ++t)
    CHECK(predict_reg_recursion(g, t, predict_reg_base(g).value).value == predict_reg_power_forest(g, t).value);
}

TEST_CASE("regular sequences") {
  const std::vector<unsigned> d23{2, 3};
  CHECK(predict_reg_regseq_power(d23, 2).value == 7);
  const std::vector<unsigned> d5{5};
  CHECK(predict_reg_regseq_power(d5, 3).value == 15);
  const std::vector<unsigned> d222{2, 2, 2};
  CHECK(predict_reg_regseq_power(d222, 1).value == 4);
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned d = 1; d <= 4; ++d) {
      const std::vector<unsigned> same(r, d);
      CHECK(predict_reg_regseq_power(same, 1).value == r * d - (r - 1));
    }
  CHECK_THROWS(predict_reg_regseq_power(std::vector<unsigned>{}, 1));
  CHECK(predict_reg_regseq_power(parse_ideal("ring a b c\na^2\nb*c\n"), 2).hypothesis_ok);
  CHECK_FALSE(predict_reg_regseq_power(parse_ideal("ring a b c\na*b\nb*c\n"), 2).hypothesis_ok);
}

TEST_CASE("depth") {
  CHECK(predict_depth(make_line({1, 2})).value == 2);
  CHECK(predict_depth(make_line({1, 2, 2, 2, 2})).value == 2);
  const auto two = WeightedDigraph({{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}, {"e", 2}}, {{0, 1}, {2, 3}, {3, 4}});
  CHECK(predict_depth(two).value == 3);  // two components
}

TEST_CASE("family hypotheses") {
  const auto star_in = make_star_in({1, 1, 1, 1});
  CHECK(classify(star_in).family == Family::StarIn);
  CHECK(predict_reg_power_family(star_in, 2).hypothesis_ok);
  CHECK_FALSE(predict_reg_power_forest(star_in, 2).hypothesis_ok);
  CHECK(predict_reg_power_family(star_in, 2).value == predict_reg_power_forest(star_in, 2).value);
  CHECK(predict_reg_power_family(make_broom({1, 2, 1, 1}), 1).hypothesis_ok);
  CHECK_FALSE(predict_reg_power_family(make_broom({1, 1, 3, 3}), 1).hypothesis_ok);
  CHECK(predict_reg_power_family(make_line({1, 2, 2, 1}), 1).hypothesis_ok);
  CHECK_FALSE(predict_reg_power_family(make_line({1, 1, 2, 1}), 1).hypothesis_ok);
}

TEST_CASE("lem11 bound") {
  const auto l3 = lem11_bound(make_line({1, 3, 2}));
  CHECK(l3.ideal == parse_ideal("ring x1 x2 x3\nx1*x2^4*x3^2\n"));
  CHECK(l3.bound.value == 3 + 2 + 3 + 1);  // w2 + w3 + w + 1 with w1 = 1
  CHECK(lem11_bound(make_line({1, 2, 2})).bound.value == 7);
  CHECK(lem11_bound(make_line({1, 2, 2, 2})).ideal.size() == 3);
  CHECK_THROWS(lem11_bound(make_line({1, 2})));
  CHECK_THROWS(lem11_bound(make_star_out({1, 2, 2})));
}
