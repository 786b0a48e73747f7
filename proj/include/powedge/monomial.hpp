#pragma once

// Exact monomial and monomial-ideal arithmetic over a named variable context.
//
// Ideals are always stored by their minimal generating set in canonical
// order (descending lexicographic on exponent vectors), so two ideals are
// equal iff their representations are equal.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powedge/errors.hpp"

namespace powedge {

using Exponent = std::uint32_t;

class VariableContext {
 public:
  /// Throws ParseError on an empty list, empty names or duplicates.
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableContext&) const = default;

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);
/// Context `prefix1 ... prefixN`.
ContextPtr make_indexed_context(std::size_t n, std::string_view prefix = "x");
bool same_context(const ContextPtr& a, const ContextPtr& b);

class Monomial {
 public:
  Monomial(ContextPtr ctx, std::vector<Exponent> exponents);

  static Monomial unit(ContextPtr ctx);
  static Monomial variable(ContextPtr ctx, std::size_t index, Exponent power = 1);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent exponent(std::size_t i) const { return exps_.at(i); }
  std::uint64_t degree() const noexcept;
  bool is_unit() const noexcept;
  std::set<std::size_t> support() const;

  /// Overflow-checked product.
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const;
  /// Plain lexicographic comparison of exponent vectors (x1 most significant).
  std::strong_ordering lex_compare(const Monomial& other) const;

 private:
  ContextPtr ctx_;
  std::vector<Exponent> exps_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// g / gcd(g, m): componentwise truncated subtraction.
Monomial truncated_quotient(const Monomial& g, const Monomial& m);

/// Canonical generator order: descending lex, so x1-heavy generators come first.
bool canonical_less(const Monomial& a, const Monomial& b);

class MonomialIdeal {
 public:
  static MonomialIdeal zero(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// True when the ideal is the whole ring (a colon by a full divisor).
  bool is_improper() const noexcept;

  bool contains(const Monomial& m) const;
  bool is_subset_of(const MonomialIdeal& other) const;
  std::set<std::size_t> support() const;
  /// Generator degrees in canonical order.
  std::vector<std::uint64_t> degrees() const;

  bool operator==(const MonomialIdeal& other) const;

 private:
  friend MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens);
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens) : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

  ContextPtr ctx_;
  std::vector<Monomial> gens_;
};

/// Keeps the divisibility-minimal elements, deduplicated, in canonical order.
MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const Monomial& u, const MonomialIdeal& a);
/// t-fold product by iterated multiplication with intermediate minimalization.
MonomialIdeal power(const MonomialIdeal& a, unsigned t);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& m);
/// Adds a principal generator: (I, m).
MonomialIdeal with_generator(const MonomialIdeal& a, const Monomial& m);

/// Squarefree ideal over variables `<name>_<j>`, j = 1..max exponent of that variable.
MonomialIdeal polarize(const MonomialIdeal& a);

/// Same generators over `ctx`, which must extend the ideal's context by appending names.
MonomialIdeal extend_context(const MonomialIdeal& a, ContextPtr ctx);

// Text format: first line `ring x1 ... xn`, then one generator per nonempty
// line, factors joined by `*`, powers by `^`. `1` denotes the unit monomial.
MonomialIdeal parse_ideal(std::string_view text);
std::string format_ideal(const MonomialIdeal& ideal);
Monomial parse_monomial(const ContextPtr& ctx, std::string_view text);
std::string format_monomial(const Monomial& m);

}  // namespace powedge
