#pragma once

// Shared helpers and brute-force oracles for the test suites. The oracles use
// plain integer arithmetic, not the library's Element operations, so they do
// not share code paths with what they check.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "semicert/semicert.hpp"

namespace semicert::test {

inline Matrix mat(Tag tag, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Element>> e;
  for (const auto& r : rows) {
    auto& out = e.emplace_back();
    for (const auto& tok : r) out.push_back(parse_element(tag, tok));
  }
  return Matrix::from_rows(tag, e);
}

template <typename Vec>
Vec vec(Tag tag, const std::vector<std::string>& tokens) {
  std::vector<Element> e;
  for (const auto& tok : tokens) e.push_back(parse_element(tag, tok));
  return Vec(tag, std::move(e));
}

inline ColVec col(Tag tag, const std::vector<std::string>& tokens) { return vec<ColVec>(tag, tokens); }
inline RowVec row(Tag tag, const std::vector<std::string>& tokens) { return vec<RowVec>(tag, tokens); }

inline Element trop(long long x) { return Element::tropical(x); }

// ---- tropical integer oracle -----------------------------------------------

inline constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct IntTropical {
  std::vector<std::vector<long long>> a;  // kInf is the additive identity
  std::vector<long long> b;
};

/// Integer-valued tropical system; returns nothing if an entry is fractional.
inline std::optional<IntTropical> to_int_tropical(const Matrix& a, const ColVec& b) {
  const auto conv = [](const Element& e) -> std::optional<long long> {
    if (e.is_infinite()) return kInf;
    if (boost::multiprecision::denominator(e.value()) != 1) return std::nullopt;
    return static_cast<long long>(boost::multiprecision::numerator(e.value()));
  };
  IntTropical s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto& r = s.a.emplace_back();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto x = conv(a(i, j));
      if (!x) return std::nullopt;
      r.push_back(*x);
    }
    auto y = conv(b[i]);
    if (!y) return std::nullopt;
    s.b.push_back(*y);
  }
  return s;
}

inline long long trop_mul(long long x, long long y) { return (x >= kInf || y >= kInf) ? kInf : x + y; }

/// Every w ∈ ([lo, hi] ∪ {inf})^n; returns the first w with min_j(A_ij + w_j) = b_i.
inline std::optional<std::vector<long long>> tropical_grid_solution(const IntTropical& s, long long lo, long long hi) {
  const std::size_t n = s.a.empty() ? 0 : s.a.front().size();
  std::vector<long long> values;
  for (long long x = lo; x <= hi; ++x) values.push_back(x);
  values.push_back(kInf);
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < s.a.size() && ok; ++i) {
      long long acc = kInf;
      for (std::size_t j = 0; j < n; ++j) acc = std::min(acc, trop_mul(s.a[i][j], values[idx[j]]));
      ok = acc == s.b[i];
    }
    if (ok) {
      std::vector<long long> w;
      for (auto k : idx) w.push_back(values[k]);
      return w;
    }
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == values.size()) idx[pos++] = 0;
    if (pos == n) return std::nullopt;
  }
}

inline ColVec to_tropical_col(const std::vector<long long>& w) {
  std::vector<Element> e;
  for (auto x : w) e.push_back(x >= kInf ? Element::tropical_infinity() : Element::tropical(x));
  return ColVec(Tag::tropical, std::move(e));
}

// ---- nonnegative rational grid oracle --------------------------------------

/// All multiples of 1/denominator in [0, max_value].
inline std::vector<Rational> rational_grid(long long denominator, long long max_value) {
  std::vector<Rational> g;
  for (long long k = 0; k <= max_value * denominator; ++k) g.emplace_back(k, denominator);
  return g;
}

}  // namespace semicert::test
