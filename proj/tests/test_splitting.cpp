#include <doctest.h>

#include "powedge/harness.hpp"
#include "powedge/splitting.hpp"

using namespace powedge;

TEST_CASE("variable splits") {
  const auto i = parse_ideal("ring x1 x2 x3 x4\nx1*x2\nx3*x4\n");
  const auto s = variable_split(i, 0);
  CHECK(s.j == parse_ideal("ring x1 x2 x3 x4\nx1*x2\n"));
  CHECK(s.k == parse_ideal("ring x1 x2 x3 x4\nx3*x4\n"));
  CHECK(s.j_cap_k == parse_ideal("ring x1 x2 x3 x4\nx1*x2*x3*x4\n"));

  const auto i2 = parse_ideal("ring x1 x2 x3\nx1*x2^3\nx2*x3\n");
  CHECK(variable_split(i2, 0).j_cap_k == parse_ideal("ring x1 x2 x3\nx1*x2^3*x3\n"));

  const auto absorbed = parse_ideal("ring x1 x2\nx1\nx1*x2\n");
  CHECK(absorbed.size() == 1);
  CHECK_THROWS_AS(variable_split(absorbed, 0), DegenerateSplit);
  CHECK_THROWS_AS(variable_split(i, 7), std::out_of_range);
}

TEST_CASE("Betti splitting identity and its consequences") {
  const auto s = variable_split(parse_ideal("ring x1 x2 x3 x4\nx1*x2\nx3*x4\n"), 0);
  CHECK(is_betti_splitting(s, {}).holds);
  const auto c = check_splitting_consequences(s, {});
  CHECK(c.reg_whole == 3);
  CHECK(c.pd_whole == 1);
  CHECK(c.reg_j_cap_k == 4);
  CHECK(c.both_hold());
}

TEST_CASE("splits with linear J are Betti splittings") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto it = power(edge_ideal(generate_forest(2 + seed % 3, 4, seed)), 1 + seed % 2);
    for (auto v : it.support()) {
      try {
        const auto s = variable_split(it, v);
        const auto tables = splitting_tables(s, {});
        if (!has_linear_resolution(tables.j)) continue;
        const auto verdict = is_betti_splitting(tables);
        CHECK(verdict.holds);
        CHECK(check_splitting_consequences(tables).both_hold());
        ++checked;
      } catch (const DegenerateSplit&) {
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("a failing splitting yields a witness") {
  // Splits with non-linear J can fail; find one among squared forest ideals.
  std::optional<SplitWitness> witness;
  bool j_linear = true;
  for (std::uint64_t seed = 0; seed < 60 && !witness; ++seed) {
    const auto it = power(edge_ideal(generate_forest(3 + seed % 3, 4, seed)), 2);
    for (auto v : it.support()) {
      try {
        const auto tables = splitting_tables(variable_split(it, v), {});
        const auto verdict = is_betti_splitting(tables);
        if (!verdict.holds) {
          witness = verdict.witness;
          j_linear = has_linear_resolution(tables.j);
          break;
        }
      } catch (const DegenerateSplit&) {
      }
    }
  }
  REQUIRE(witness);
  CHECK(witness->whole != witness->parts);
  CHECK_FALSE(j_linear);
}

TEST_CASE("splitting respects the cap") {
  const auto it = power(edge_ideal(make_line({1, 2, 2, 2, 2, 2})), 2);
  BettiOptions tiny;
  tiny.max_generators = 4;
  CHECK_THROWS_AS(is_betti_splitting(variable_split(it, 0), {}, tiny), CapExceeded);
}

TEST_CASE("leaf lemmas on a path") {
  const auto p = make_line({1, 2, 3});
  const auto r = check_leaf_lemmas(p, "x3", 2);
  CHECK(r.parent == "x2");
  CHECK(r.sum_identity);
  REQUIRE(r.colon_identity);
  CHECK(*r.colon_identity);
  REQUIRE(r.colon_sum_identity);
  CHECK(*r.colon_sum_identity);
  const auto i = edge_ideal(p);
  const auto& ctx = p.context();
  // (I^2 : x2 x3^3) = I
  CHECK(colon_by_monomial(power(i, 2), parse_monomial(ctx, "x2*x3^3")) == i);
  // (I^2, x3^3) = ((x1 x2^2)^2, x3^3)
  CHECK(with_generator(power(i, 2), parse_monomial(ctx, "x3^3")) ==
        parse_ideal("ring x1 x2 x3\nx1^2*x2^4\nx3^3\n"));
  // ((I^2 : x3^3), x2) = (x2)
  CHECK(with_generator(colon_by_monomial(power(i, 2), parse_monomial(ctx, "x3^3")), parse_monomial(ctx, "x2")) ==
        parse_ideal("ring x1 x2 x3\nx2\n"));

  const auto t1 = check_leaf_lemmas(p, "x3", 1);
  CHECK(t1.sum_identity);
  CHECK_FALSE(t1.colon_identity);
  CHECK_THROWS(check_leaf_lemmas(p, "x2", 2));
  CHECK_THROWS(check_leaf_lemmas(p, "x1", 2));  // source leaf: no in-neighbor
  CHECK_THROWS(check_leaf_lemmas(p, "x3", 0));
}

TEST_CASE("leaf lemmas hold on random forests for every target leaf") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = generate_forest(1 + seed % 5, 4, seed);
    for (const auto& leaf : target_leaves(g))
      for (unsigned t = 1; t <= 3; ++t) CHECK(check_leaf_lemmas(g, leaf, t).all_hold());
  }
}

TEST_CASE("disjoint additivity, monomial shift, regular-sequence intersection") {
  const auto a = parse_ideal("ring x1 x2 x3\nx1*x2^2\nx2*x3\n");
  const auto b = parse_ideal("ring x1 x2\nx1*x2^3\n");
  const auto ar = check_disjoint_additivity(a, b, {});
  CHECK(ar.reg_additive());
  CHECK(ar.pd_additive());
  CHECK(ar.pd_b == 1);

  const auto i = parse_ideal("ring x1 x2 x3 u\nx1*x2^2\nx2*x3\n");
  const auto sr = check_monomial_shift(i, parse_monomial(i.context(), "u^3"), {});
  CHECK(sr.shift_degree == 3);
  CHECK(sr.holds());
  CHECK_THROWS(check_monomial_shift(i, parse_monomial(i.context(), "x1*u"), {}));
  CHECK_THROWS(check_monomial_shift(i, Monomial::unit(i.context()), {}));

  const auto seq = parse_ideal("ring a b c d\na^2\nb*c\nd^3\n");
  CHECK(check_regseq_intersection(seq, 2));
  CHECK(check_regseq_intersection(seq, 3));
  CHECK_THROWS(check_regseq_intersection(parse_ideal("ring a b\na*b\nb^2\n"), 2));
  CHECK_THROWS(check_regseq_intersection(seq, 1));

  CHECK(polarization_preserves_betti(power(a, 2), {}));
}
