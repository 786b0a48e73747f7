#include "powedge/monomial.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace powedge {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ParseError("variable context needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ParseError("empty variable name");
    if (!seen.insert(n).second) throw ParseError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

ContextPtr make_indexed_context(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make_context(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch();
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) throw ExponentOverflow();
  return a + b;
}

}  // namespace

Monomial::Monomial(ContextPtr ctx, std::vector<Exponent> exponents)
    : ctx_(std::move(ctx)), exps_(std::move(exponents)) {
  if (!ctx_) throw std::invalid_argument("monomial without context");
  if (exps_.size() != ctx_->size()) throw std::invalid_argument("exponent vector length does not match context");
}

Monomial Monomial::unit(ContextPtr ctx) {
  const auto n = ctx->size();
  return Monomial(std::move(ctx), std::vector<Exponent>(n, 0));
}

Monomial Monomial::variable(ContextPtr ctx, std::size_t index, Exponent power) {
  std::vector<Exponent> e(ctx->size(), 0);
  e.at(index) = power;
  return Monomial(std::move(ctx), std::move(e));
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::set<std::size_t> Monomial::support() const {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.insert(i);
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same(ctx_, other.ctx_);
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(exps_[i], other.exps_[i]);
  return Monomial(ctx_, std::move(e));
}

bool Monomial::operator==(const Monomial& other) const {
  return exps_ == other.exps_ && same_context(ctx_, other.ctx_);
}

std::strong_ordering Monomial::lex_compare(const Monomial& other) const {
  return exps_ <=> other.exps_;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same(a.context(), b.context());
  auto x = a.exponents();
  auto y = b.exponents();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same(a.context(), b.context());
  std::vector<Exponent> e(a.exponents().begin(), a.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
  return Monomial(a.context(), std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same(a.context(), b.context());
  std::vector<Exponent> e(a.exponents().begin(), a.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
  return Monomial(a.context(), std::move(e));
}

Monomial truncated_quotient(const Monomial& g, const Monomial& m) {
  require_same(g.context(), m.context());
  std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto d = m.exponents()[i];
    e[i] = e[i] > d ? e[i] - d : 0;
  }
  return Monomial(g.context(), std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  return a.lex_compare(b) == std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------

MonomialIdeal MonomialIdeal::zero(ContextPtr ctx) { return MonomialIdeal(std::move(ctx), {}); }

bool MonomialIdeal::is_improper() const noexcept {
  return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same(ctx_, m.context());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
  require_same(ctx_, other.ctx_);
  return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return other.contains(g); });
}

std::set<std::size_t> MonomialIdeal::support() const {
  std::set<std::size_t> s;
  for (const auto& g : gens_) s.merge(g.support());
  return s;
}

std::vector<std::uint64_t> MonomialIdeal::degrees() const {
  std::vector<std::uint64_t> d;
  d.reserve(gens_.size());
  for (const auto& g : gens_) d.push_back(g.degree());
  return d;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return same_context(ctx_, other.ctx_) && gens_ == other.gens_;
}

MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same(ctx, g.context());
  // Any divisor of g has degree <= deg g, so one pass in degree order suffices.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db;
    return canonical_less(a, b);
  });
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  return MonomialIdeal(std::move(ctx), std::move(kept));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a.context(), b.context());
  std::vector<Monomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.context(), std::move(g));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a.context(), b.context());
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  return minimalize(a.context(), std::move(g));
}

MonomialIdeal product(const Monomial& u, const MonomialIdeal& a) {
  require_same(u.context(), a.context());
  std::vector<Monomial> g;
  g.reserve(a.size());
  for (const auto& x : a.generators()) g.push_back(u * x);
  return minimalize(a.context(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned t) {
  if (t == 0) throw std::invalid_argument("power: exponent t must be at least 1");
  MonomialIdeal result = a;
  for (unsigned k = 1; k < t; ++k) result = product(result, a);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a.context(), b.context());
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(lcm(x, y));
  return minimalize(a.context(), std::move(g));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& m) {
  require_same(a.context(), m.context());
  std::vector<Monomial> g;
  g.reserve(a.size());
  for (const auto& x : a.generators()) g.push_back(truncated_quotient(x, m));
  return minimalize(a.context(), std::move(g));
}

MonomialIdeal with_generator(const MonomialIdeal& a, const Monomial& m) {
  require_same(a.context(), m.context());
  std::vector<Monomial> g = a.generators();
  g.push_back(m);
  return minimalize(a.context(), std::move(g));
}

MonomialIdeal polarize(const MonomialIdeal& a) {
  if (a.is_zero()) throw std::invalid_argument("polarize: zero ideal");
  const auto& ctx = *a.context();
  const std::size_t n = ctx.size();
  std::vector<Exponent> top(n, 0);
  for (const auto& g : a.generators())
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g.exponent(i));

  std::vector<std::string> names;
  std::vector<std::size_t> offset(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = names.size();
    for (Exponent j = 1; j <= top[i]; ++j) names.push_back(ctx.name(i) + "_" + std::to_string(j));
  }
  if (names.empty()) throw std::invalid_argument("polarize: improper ideal");
  auto pctx = make_context(std::move(names));

  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const auto& g : a.generators()) {
    std::vector<Exponent> e(pctx->size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (Exponent j = 0; j < g.exponent(i); ++j) e[offset[i] + j] = 1;
    gens.emplace_back(pctx, std::move(e));
  }
  return minimalize(std::move(pctx), std::move(gens));
}

MonomialIdeal extend_context(const MonomialIdeal& a, ContextPtr ctx) {
  const auto& old = *a.context();
  if (ctx->size() < old.size() ||
      !std::equal(old.names().begin(), old.names().end(), ctx->names().begin()))
    throw ContextMismatch();
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    e.resize(ctx->size(), 0);
    gens.emplace_back(ctx, std::move(e));
  }
  return minimalize(std::move(ctx), std::move(gens));
}

}  // namespace powedge
