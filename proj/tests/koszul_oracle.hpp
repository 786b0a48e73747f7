#pragma once

// Test-only Betti oracle through upper Koszul simplicial complexes:
// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)), K^b = { F in supp(b) : x^(b-F) in I },
// for b in the lcm lattice. Dense elimination over GF(p). Shares nothing with
// the Taylor engine beyond the monomial types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "powedge/betti.hpp"
#include "powedge/monomial.hpp"

namespace koszul {

using Table = std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t>;

inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::int64_t inv = 1, base = ((rows[rank][c] % p) + p) % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1, base = base * base % p)
      if (e & 1) inv = inv * base % p;
    for (auto& v : rows[rank]) v = ((v % p) + p) % p * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::int64_t f = ((rows[r][c] % p) + p) % p;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline Table betti(const powedge::MonomialIdeal& ideal, std::int64_t p) {
  const auto& gens = ideal.generators();
  const std::size_t n = ideal.context()->size();
  std::set<std::vector<powedge::Exponent>> lattice;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << gens.size()); ++m) {
    std::vector<powedge::Exponent> b(n, 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (m >> g & 1)
        for (std::size_t k = 0; k < n; ++k) b[k] = std::max(b[k], gens[g].exponent(k));
    lattice.insert(b);
  }
  Table out;
  for (const auto& b : lattice) {
    std::vector<std::size_t> supp;
    std::uint64_t deg = 0;
    for (std::size_t k = 0; k < n; ++k) {
      deg += b[k];
      if (b[k]) supp.push_back(k);
    }
    // faces as bitmasks over supp, grouped by size
    std::vector<std::vector<std::uint32_t>> faces(supp.size() + 2);
    for (std::uint32_t f = 0; f < (1U << supp.size()); ++f) {
      auto e = b;
      for (std::size_t k = 0; k < supp.size(); ++k)
        if (f >> k & 1) --e[supp[k]];
      if (ideal.contains(powedge::Monomial(ideal.context(), e)))
        faces[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
    }
    auto boundary_rank = [&](std::size_t s) -> std::size_t {  // size s -> size s-1
      if (s == 0 || s >= faces.size() || faces[s].empty() || faces[s - 1].empty()) return 0;
      std::vector<std::vector<std::int64_t>> rows(faces[s - 1].size(), std::vector<std::int64_t>(faces[s].size(), 0));
      for (std::size_t c = 0; c < faces[s].size(); ++c) {
        const auto f = faces[s][c];
        int pos = 0;
        for (std::size_t k = 0; k < supp.size(); ++k) {
          if (!(f >> k & 1)) continue;
          const auto face = f ^ (1U << k);
          const auto it = std::find(faces[s - 1].begin(), faces[s - 1].end(), face);
          if (it != faces[s - 1].end()) rows[static_cast<std::size_t>(it - faces[s - 1].begin())][c] = pos % 2 ? -1 : 1;
          ++pos;
        }
      }
      return rank_mod(rows, p);
    };
    for (std::size_t s = 0; s <= supp.size(); ++s) {
      // faces of size s have dimension s-1 and feed beta_{s, b}
      const auto h = faces[s].size() - boundary_rank(s) - boundary_rank(s + 1);
      if (h) out[{static_cast<unsigned>(s), deg}] += h;
    }
  }
  return out;
}

}  // namespace koszul
