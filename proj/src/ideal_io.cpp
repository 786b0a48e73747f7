#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "powedge/monomial.hpp"

namespace powedge {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Exponent parse_exponent(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad exponent '" + std::string(s) + "'");
  if (v > std::numeric_limits<Exponent>::max()) throw ExponentOverflow();
  return static_cast<Exponent>(v);
}

}  // namespace

Monomial parse_monomial(const ContextPtr& ctx, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty monomial");
  std::vector<Exponent> e(ctx->size(), 0);
  if (s == "1") return Monomial(ctx, std::move(e));
  for (auto factor : split(s, '*')) {
    auto caret = factor.find('^');
    auto name = factor.substr(0, caret);
    Exponent p = 1;
    if (caret != std::string_view::npos) p = parse_exponent(factor.substr(caret + 1));
    auto idx = ctx->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'");
    if (e[*idx] > std::numeric_limits<Exponent>::max() - p) throw ExponentOverflow();
    e[*idx] += p;
  }
  return Monomial(ctx, std::move(e));
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  const auto& ctx = *m.context();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  ContextPtr ctx;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    if (strip_spaces(line).empty()) continue;
    if (!ctx) {
      std::istringstream header(line);
      std::string keyword;
      header >> keyword;
      if (keyword != "ring") throw ParseError("ideal text must start with 'ring x1 ... xn'");
      std::vector<std::string> names;
      for (std::string name; header >> name;) names.push_back(name);
      ctx = make_context(std::move(names));
      continue;
    }
    gens.push_back(parse_monomial(ctx, line));
  }
  if (!ctx) throw ParseError("missing 'ring' line");
  return minimalize(ctx, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring";
  for (const auto& n : ideal.context()->names()) out += ' ' + n;
  out += '\n';
  for (const auto& g : ideal.generators()) out += format_monomial(g) + '\n';
  return out;
}

}  // namespace powedge
