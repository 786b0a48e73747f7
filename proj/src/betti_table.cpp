#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "powedge/betti.hpp"

namespace powedge {

BettiTable::BettiTable(std::size_t ring_size, std::uint32_t characteristic, Entries entries, bool quotient)
    : ring_size_(ring_size), characteristic_(characteristic), entries_(std::move(entries)), quotient_(quotient) {
  std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
}

std::uint64_t BettiTable::at(unsigned i, std::uint64_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(unsigned i) const {
  std::uint64_t s = 0;
  for (const auto& [key, beta] : entries_)
    if (key.first == i) s += beta;
  return s;
}

namespace {

void require_nonempty(const BettiTable& t) {
  if (t.empty()) throw std::invalid_argument("empty Betti table");
}

}  // namespace

long long regularity(const BettiTable& t) {
  require_nonempty(t);
  long long reg = std::numeric_limits<long long>::min();
  for (const auto& [key, beta] : t.entries())
    reg = std::max(reg, static_cast<long long>(key.second) - static_cast<long long>(key.first));
  return reg;
}

long long projective_dimension(const BettiTable& t) {
  require_nonempty(t);
  long long pd = 0;
  for (const auto& [key, beta] : t.entries()) pd = std::max(pd, static_cast<long long>(key.first));
  return pd;
}

long long depth_of_ideal(const BettiTable& t, std::size_t n) {
  return static_cast<long long>(n) - projective_dimension(t);
}

bool has_linear_resolution(const BettiTable& t) {
  std::optional<std::uint64_t> d;
  for (const auto& [key, beta] : t.entries()) {
    if (key.first != 0) continue;
    if (d && *d != key.second) return false;
    d = key.second;
  }
  if (!d) return false;
  return std::all_of(t.entries().begin(), t.entries().end(),
                     [&](const auto& kv) { return kv.first.second == kv.first.first + *d; });
}

BettiTable quotient_view(const BettiTable& t) {
  BettiTable::Entries shifted;
  shifted[{0, 0}] = 1;
  for (const auto& [key, beta] : t.entries()) shifted[{key.first + 1, key.second}] = beta;
  return BettiTable(t.ring_size(), t.characteristic(), std::move(shifted), true);
}

nlohmann::json to_json(const BettiTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, beta] : t.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
  nlohmann::json j = {{"field", t.characteristic()}, {"entries", std::move(entries)}};
  if (!t.empty()) {
    j["reg"] = regularity(t);
    j["pd"] = projective_dimension(t);
    j["depth"] = depth_of_ideal(t, t.ring_size());
  }
  return j;
}

std::string format_betti_diagram(const BettiTable& t) {
  if (t.empty()) return "(empty)\n";
  const auto pd = static_cast<unsigned>(projective_dimension(t));
  long long lo = std::numeric_limits<long long>::max(), hi = std::numeric_limits<long long>::min();
  for (const auto& [key, beta] : t.entries()) {
    const long long row = static_cast<long long>(key.second) - key.first;
    lo = std::min(lo, row);
    hi = std::max(hi, row);
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""}, totals{"total:"};
  for (unsigned i = 0; i <= pd; ++i) {
    header.push_back(std::to_string(i));
    totals.push_back(std::to_string(t.total(i)));
  }
  grid.push_back(header);
  grid.push_back(totals);
  for (long long row = lo; row <= hi; ++row) {
    std::vector<std::string> line{std::to_string(row) + ":"};
    for (unsigned i = 0; i <= pd; ++i) {
      const auto beta = t.at(i, static_cast<std::uint64_t>(row + i));
      line.push_back(beta ? std::to_string(beta) : ".");
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(pd + 2, 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << ' ';
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace powedge
