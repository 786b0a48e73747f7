#pragma once

// Exact rank of sparse matrices over GF(p) and Q by column reduction.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace powedge {

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using value_type = std::uint32_t;

  /// p must be prime and below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }
  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
};

/// Column-major sparse matrix; each column holds (row, value) pairs with
/// strictly increasing rows and no stored zeros.
template <class Value>
struct SparseColumns {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Value>>> columns;
};

/// Standard persistence-style reduction: a column is reduced while its
/// lowest row is already the pivot of an earlier column.
template <class Field>
std::size_t rank(const Field& field, SparseColumns<typename Field::value_type> m) {
  using V = typename Field::value_type;
  using Column = std::vector<std::pair<std::uint32_t, V>>;
  std::unordered_map<std::uint32_t, std::size_t> pivot_of;
  std::vector<Column> reduced;
  Column scratch;
  for (auto& col : m.columns) {
    while (!col.empty()) {
      const auto low = col.back().first;
      auto it = pivot_of.find(low);
      if (it == pivot_of.end()) {
        pivot_of.emplace(low, reduced.size());
        reduced.push_back(std::move(col));
        break;
      }
      const Column& piv = reduced[it->second];
      const V factor = field.mul(col.back().second, field.inv(piv.back().second));
      scratch.clear();
      auto a = col.begin();
      auto b = piv.begin();
      while (a != col.end() || b != piv.end()) {
        if (b == piv.end() || (a != col.end() && a->first < b->first)) {
          scratch.push_back(*a++);
        } else if (a == col.end() || b->first < a->first) {
          scratch.emplace_back(b->first, field.sub(field.from_int(0), field.mul(factor, b->second)));
          ++b;
        } else {
          V v = field.sub(a->second, field.mul(factor, b->second));
          if (!field.is_zero(v)) scratch.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      std::swap(col, scratch);
    }
  }
  return reduced.size();
}

}  // namespace powedge
