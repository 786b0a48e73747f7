#include <doctest.h>

#include "powedge/monomial.hpp"

using namespace powedge;

namespace {

MonomialIdeal ideal(const std::string& text) { return parse_ideal(text); }

Monomial mono(const MonomialIdeal& i, const std::string& text) { return parse_monomial(i.context(), text); }

}  // namespace

TEST_CASE("divides, lcm and gcd") {
  const auto ctx = make_indexed_context(3);
  const auto m = [&](const char* s) { return parse_monomial(ctx, s); };
  CHECK(divides(m("x1*x2"), m("x1*x2^2*x3")));
  CHECK(divides(Monomial::unit(ctx), m("x3^4")));
  CHECK_FALSE(divides(m("x1^2"), m("x1*x2")));
  CHECK(lcm(m("x1*x2^3"), m("x2*x3")) == m("x1*x2^3*x3"));
  CHECK(lcm(m("x2"), m("x2")) == m("x2"));
  CHECK(lcm(Monomial::unit(ctx), m("x1*x3")) == m("x1*x3"));
  CHECK(gcd(m("x1*x2^3"), m("x2^2*x3")) == m("x2^2"));
}

TEST_CASE("minimalize keeps divisibility-minimal generators in canonical order") {
  const auto ctx = make_indexed_context(3);
  const auto m = [&](const char* s) { return parse_monomial(ctx, s); };
  CHECK(minimalize(ctx, {m("x1*x2"), m("x1*x2*x3")}).generators() == std::vector{m("x1*x2")});
  CHECK(minimalize(ctx, {m("x2"), m("x1*x2"), m("x1")}).generators() == std::vector{m("x1"), m("x2")});
  CHECK(minimalize(ctx, {}).is_zero());
  // descending lex: x1-heavy first
  CHECK(minimalize(ctx, {m("x3"), m("x1^2"), m("x1*x2")}).generators() ==
        std::vector{m("x1^2"), m("x1*x2"), m("x3")});
}

TEST_CASE("sum, product, power") {
  const auto a = ideal("ring x1 x2 x3\nx1*x2\n");
  const auto b = ideal("ring x1 x2 x3\nx2*x3\n");
  CHECK(sum(a, b) == ideal("ring x1 x2 x3\nx1*x2\nx2*x3\n"));
  CHECK(sum(a, MonomialIdeal::zero(a.context())) == a);
  CHECK(sum(ideal("ring x1 x2\nx1\n"), ideal("ring x1 x2\nx1*x2\n")) == ideal("ring x1 x2\nx1\n"));

  const auto x1 = ideal("ring x1 x2 x3\nx1\n");
  CHECK(product(x1, ideal("ring x1 x2 x3\nx2\nx3\n")) == ideal("ring x1 x2 x3\nx1*x2\nx1*x3\n"));
  CHECK(product(a, ideal("ring x1 x2 x3\n1\n")) == a);
  const auto c = ideal("ring x1 x2 x3\nx1*x2^2\nx2*x3\n");
  CHECK(product(c, c) == ideal("ring x1 x2 x3\nx1^2*x2^4\nx1*x2^3*x3\nx2^2*x3^2\n"));

  const auto p = ideal("ring x1 x2 x3 x4\nx1*x2^5\nx2*x3\nx3*x4^8\n");
  CHECK(power(p, 2).size() == 6);
  CHECK(power(p, 1) == p);
  CHECK(power(ideal("ring x1 x2\nx1*x2^3\n"), 4) == ideal("ring x1 x2\nx1^4*x2^12\n"));
  CHECK_THROWS_AS(power(p, 0), std::invalid_argument);
}

TEST_CASE("intersect and colon") {
  CHECK(intersect(ideal("ring x1 x2\nx1\n"), ideal("ring x1 x2\nx2\n")) == ideal("ring x1 x2\nx1*x2\n"));
  const auto i = ideal("ring x1 x2 x3 x4\nx1*x2\nx3\n");
  CHECK(intersect(i, i) == i);
  CHECK(intersect(i, ideal("ring x1 x2 x3 x4\nx1\nx3*x4\n")) == ideal("ring x1 x2 x3 x4\nx1*x2\nx1*x3\nx3*x4\n"));

  const auto c = ideal("ring x1 x2 x3\nx1*x2^2\nx2*x3\n");
  CHECK(colon_by_monomial(c, mono(c, "x2")) == ideal("ring x1 x2 x3\nx1*x2\nx3\n"));
  CHECK(colon_by_monomial(c, Monomial::unit(c.context())) == c);
  const auto pr = ideal("ring x1 x2\nx1*x2^3\n");
  const auto full = colon_by_monomial(pr, mono(pr, "x1*x2^3"));
  CHECK(full.is_improper());
}

TEST_CASE("polarization") {
  const auto i = ideal("ring x1 x2 x3 x4 x5\nx1*x2^3\nx2*x3\nx3*x4^2\nx4*x5^5\n");
  const auto p = polarize(i);
  CHECK(p.size() == 4);
  const auto& n = p.context()->names();
  CHECK(n == std::vector<std::string>{"x1_1", "x2_1", "x2_2", "x2_3", "x3_1", "x4_1", "x4_2", "x5_1", "x5_2",
                                      "x5_3", "x5_4", "x5_5"});
  CHECK(p == parse_ideal("ring x1_1 x2_1 x2_2 x2_3 x3_1 x4_1 x4_2 x5_1 x5_2 x5_3 x5_4 x5_5\n"
                         "x1_1*x2_1*x2_2*x2_3\nx2_1*x3_1\nx3_1*x4_1*x4_2\nx4_1*x5_1*x5_2*x5_3*x5_4*x5_5\n"));
  CHECK(polarize(ideal("ring x1\nx1^2\n")).generators().front().degree() == 2);
  const auto sq = ideal("ring a b c\na*b\nb*c\n");
  CHECK(polarize(sq).generators().size() == sq.size());
  CHECK_THROWS(polarize(MonomialIdeal::zero(sq.context())));
}

TEST_CASE("support") {
  CHECK(ideal("ring x1 x2 x3\nx1*x2^3\n").support() == std::set<std::size_t>{0, 1});
  CHECK(MonomialIdeal::zero(make_indexed_context(2)).support().empty());
  CHECK(ideal("ring x1 x2 x3\nx1\nx3\n").support() == std::set<std::size_t>{0, 2});
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(sum(ideal("ring x1 x2\nx1\n"), ideal("ring y1 y2\ny1\n")), ContextMismatch);
  CHECK_THROWS_AS(parse_ideal("ring x1 x1\nx1\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("ring x1\nx2\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1*x2\n"), ParseError);
  const auto big = ideal("ring x1\nx1^4000000000\n");
  CHECK_THROWS_AS(big.generators().front() * big.generators().front(), ExponentOverflow);
}

TEST_CASE("text round trip") {
  const auto i = ideal("ring x1 x2 x3\n x2 * x3 \n\nx1*x2^2\n");
  CHECK(format_ideal(i) == "ring x1 x2 x3\nx1*x2^2\nx2*x3\n");
  CHECK(parse_ideal(format_ideal(i)) == i);
}
