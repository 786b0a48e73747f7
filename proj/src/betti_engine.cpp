#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

#include "powedge/betti.hpp"
#include "powedge/linalg.hpp"

namespace powedge {

FieldSpec FieldSpec::of(std::uint32_t characteristic) {
  if (characteristic != 0) PrimeField check(characteristic);  // throws on non-primes
  return FieldSpec{characteristic};
}

namespace {

using Mask = std::uint32_t;
constexpr std::uint32_t kNoBucket = 0xffffffffU;

// Multidegrees as thermometer bitmasks: variable k with sorted distinct
// positive exponents v_1 < ... < v_m owns m bits, and exponent v_r sets the
// first r of them. lcm becomes bitwise OR and divisibility becomes inclusion.
struct MultidegreeCode {
  struct Field {
    unsigned offset = 0;
    std::vector<Exponent> values;
  };

  std::size_t words = 1;
  std::vector<Field> fields;
  std::vector<std::uint64_t> generator_keys;  // words per generator

  explicit MultidegreeCode(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.context()->size();
    const auto& gens = ideal.generators();
    unsigned bits = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Field f;
      f.offset = bits;
      for (const auto& g : gens)
        if (g.exponent(k) > 0) f.values.push_back(g.exponent(k));
      std::sort(f.values.begin(), f.values.end());
      f.values.erase(std::unique(f.values.begin(), f.values.end()), f.values.end());
      bits += static_cast<unsigned>(f.values.size());
      fields.push_back(std::move(f));
    }
    words = std::max<std::size_t>(1, (bits + 63) / 64);
    generator_keys.assign(gens.size() * words, 0);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& f = fields[k];
        const auto e = gens[g].exponent(k);
        const auto rank = std::upper_bound(f.values.begin(), f.values.end(), e) - f.values.begin();
        for (unsigned b = 0; b < rank; ++b) {
          const unsigned bit = f.offset + b;
          generator_keys[g * words + bit / 64] |= std::uint64_t{1} << (bit % 64);
        }
      }
    }
  }

  std::uint64_t degree(const std::uint64_t* key) const {
    std::uint64_t d = 0;
    for (const auto& f : fields) {
      unsigned r = 0;
      for (unsigned b = 0; b < f.values.size(); ++b) {
        const unsigned bit = f.offset + b;
        if (key[bit / 64] >> (bit % 64) & 1) ++r;
      }
      if (r > 0) d += f.values[r - 1];
    }
    return d;
  }
};

// Every nonempty subset of the generators, grouped by lcm.
struct TaylorBuckets {
  std::size_t generators = 0;
  std::vector<std::uint32_t> bucket_of;     // per subset mask
  std::vector<std::uint64_t> bucket_keys;   // words per bucket
  std::vector<std::uint64_t> bucket_start;  // offsets into cells, size buckets+1
  std::vector<Mask> cells;                  // subset masks, ascending within a bucket

  std::size_t size() const { return bucket_start.size() - 1; }
};

TaylorBuckets enumerate(const MultidegreeCode& code, std::size_t r) {
  const std::size_t W = code.words;
  const std::size_t count = std::size_t{1} << r;
  std::vector<std::uint64_t> keys(count * W, 0);
  for (std::size_t m = 1; m < count; ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    const std::size_t prev = m & (m - 1);
    for (std::size_t w = 0; w < W; ++w) keys[m * W + w] = keys[prev * W + w] | code.generator_keys[low * W + w];
  }

  const std::uint64_t* base = keys.data();
  auto hash = [base, W](Mask m) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t w = 0; w < W; ++w) {
      h ^= base[m * W + w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  };
  auto equal = [base, W](Mask a, Mask b) {
    return std::equal(base + a * W, base + a * W + W, base + b * W);
  };
  std::unordered_map<Mask, std::uint32_t, decltype(hash), decltype(equal)> index(1024, hash, equal);

  TaylorBuckets tb;
  tb.generators = r;
  tb.bucket_of.assign(count, kNoBucket);
  std::vector<std::uint64_t> sizes;
  for (std::size_t m = 1; m < count; ++m) {
    auto [it, fresh] = index.try_emplace(static_cast<Mask>(m), static_cast<std::uint32_t>(sizes.size()));
    if (fresh) {
      sizes.push_back(0);
      tb.bucket_keys.insert(tb.bucket_keys.end(), base + m * W, base + m * W + W);
    }
    tb.bucket_of[m] = it->second;
    ++sizes[it->second];
  }
  tb.bucket_start.assign(sizes.size() + 1, 0);
  for (std::size_t b = 0; b < sizes.size(); ++b) tb.bucket_start[b + 1] = tb.bucket_start[b] + sizes[b];
  tb.cells.resize(count - 1);
  std::vector<std::uint64_t> fill(tb.bucket_start.begin(), tb.bucket_start.end() - 1);
  for (std::size_t m = 1; m < count; ++m) tb.cells[fill[tb.bucket_of[m]]++] = static_cast<Mask>(m);
  return tb;
}

struct BucketHomology {
  std::uint64_t degree = 0;
  std::vector<std::pair<unsigned, std::uint64_t>> ranks;  // (i, dim H_i), nonzero only
};

template <class FieldT>
BucketHomology bucket_homology(const FieldT& field, const TaylorBuckets& tb, const MultidegreeCode& code,
                               std::uint32_t b, bool morse) {
  using V = typename FieldT::value_type;
  const std::size_t W = code.words;
  const std::size_t r = tb.generators;
  const std::uint64_t* key = tb.bucket_keys.data() + b * W;
  const auto first = tb.cells.begin() + static_cast<std::ptrdiff_t>(tb.bucket_start[b]);
  const auto last = tb.cells.begin() + static_cast<std::ptrdiff_t>(tb.bucket_start[b + 1]);

  BucketHomology out;
  out.degree = code.degree(key);

  // Generators dividing the multidegree; any of them can drive the matching.
  Mask pivot_bit = 0;
  if (morse) {
    std::uint64_t best = ~std::uint64_t{0};
    for (std::size_t g = 0; g < r; ++g) {
      const std::uint64_t* gk = code.generator_keys.data() + g * W;
      bool divides_b = true;
      for (std::size_t w = 0; w < W && divides_b; ++w) divides_b = (gk[w] & ~key[w]) == 0;
      if (!divides_b) continue;
      const Mask bit = Mask{1} << g;
      std::uint64_t critical = 0;
      for (auto it = first; it != last; ++it)
        if ((*it & bit) && tb.bucket_of[*it ^ bit] != b) ++critical;
      if (critical < best) {
        best = critical;
        pivot_bit = bit;
      }
    }
  }

  auto in_complex = [&](Mask m) {
    if (m == 0 || tb.bucket_of[m] != b) return false;
    return !morse || ((m & pivot_bit) && tb.bucket_of[m ^ pivot_bit] != b);
  };

  std::vector<std::vector<Mask>> level(r + 2);
  for (auto it = first; it != last; ++it)
    if (in_complex(*it)) level[static_cast<std::size_t>(std::popcount(*it))].push_back(*it);

  // rank_of[s]: rank of the differential from subsets of size s to size s-1.
  std::vector<std::size_t> rank_of(r + 2, 0);
  for (std::size_t s = 2; s <= r; ++s) {
    if (level[s].empty() || level[s - 1].empty()) continue;
    const auto& rows = level[s - 1];
    SparseColumns<V> m;
    m.rows = rows.size();
    m.columns.reserve(level[s].size());
    for (Mask c : level[s]) {
      std::vector<std::pair<std::uint32_t, V>> col;
      for (Mask rest = c; rest; rest &= rest - 1) {
        const Mask bit = rest & (~rest + 1);
        if (bit == pivot_bit) continue;
        const Mask face = c ^ bit;
        if (!in_complex(face)) continue;
        const auto row = std::lower_bound(rows.begin(), rows.end(), face) - rows.begin();
        const bool odd = std::popcount(c & (bit - 1)) & 1;
        col.emplace_back(static_cast<std::uint32_t>(row), field.from_int(odd ? -1 : 1));
      }
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      m.columns.push_back(std::move(col));
    }
    rank_of[s] = rank(field, std::move(m));
  }
  for (std::size_t s = 1; s <= r; ++s) {
    const auto h = level[s].size() - rank_of[s] - rank_of[s + 1];
    if (h > 0) out.ranks.emplace_back(static_cast<unsigned>(s - 1), h);
  }
  return out;
}

template <class FieldT>
std::vector<BucketHomology> all_buckets(const FieldT& field, const TaylorBuckets& tb, const MultidegreeCode& code,
                                        const BettiOptions& options) {
  std::vector<BucketHomology> results(tb.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b; (b = next.fetch_add(1)) < tb.size();)
      results[b] = bucket_homology(field, tb, code, static_cast<std::uint32_t>(b), options.morse_reduction);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(tb.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field, const BettiOptions& options) {
  if (ideal.is_zero()) throw std::invalid_argument("betti_table: zero ideal");
  if (ideal.is_improper()) throw ImproperIdeal();
  const std::size_t r = ideal.size();
  const std::size_t hard_limit = 31;  // subset masks are 32-bit
  if (r > options.max_generators || r > hard_limit) throw CapExceeded(r, std::min(options.max_generators, hard_limit));

  const MultidegreeCode code(ideal);
  const TaylorBuckets tb = enumerate(code, r);

  std::vector<BucketHomology> results;
  if (field.characteristic == 0) {
    results = all_buckets(RationalField{}, tb, code, options);
  } else {
    results = all_buckets(PrimeField(field.characteristic), tb, code, options);
  }

  BettiTable::Entries entries;
  for (const auto& res : results)
    for (const auto& [i, h] : res.ranks) entries[{i, res.degree}] += h;
  return BettiTable(ideal.context()->size(), field.characteristic, std::move(entries));
}

}  // namespace powedge
