#pragma once

/**
 * @file witness.hpp
 * @brief Explicit refutation certificates for b ∉ right-im A.
 *
 * A certificate is a pair of row vectors (u, v) with uA = vA but ub ≠ vb.
 * Any solution w of Aw = b would give ub = uAw = vAw = vb, so a pair that
 * passes check_certificate proves non-membership without further argument.
 *
 * Over an idempotent semifield with at least three elements the pair is built
 * directly from a column-stochastic A and a 0/1 vector b (kernel_witness).
 * The two-element boolean carrier is handled by search instead.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "semicert/matrix.hpp"

namespace semicert {

struct KernelPair {
  RowVec u;
  RowVec v;
};

/// True iff uA = vA and ub ≠ vb.
inline bool check_certificate(const Matrix& a, const ColVec& b, const RowVec& u, const RowVec& v) {
  detail::require_tags(a.tag(), b.tag());
  detail::require_tags(a.tag(), u.tag());
  detail::require_tags(a.tag(), v.tag());
  detail::require_dims(a.rows(), b.size(), "matrix rows vs right-hand side");
  detail::require_dims(a.rows(), u.size(), "matrix rows vs u");
  detail::require_dims(a.rows(), v.size(), "matrix rows vs v");
  return mat_mul(u, a) == mat_mul(v, a) && mat_mul(u, b) != mat_mul(v, b);
}

inline bool check_certificate(const Matrix& a, const ColVec& b, const KernelPair& pair) {
  return check_certificate(a, b, pair.u, pair.v);
}

namespace detail {

inline void require_three_element_idempotent(Tag tag) {
  if (tag == Tag::boolean) throw error(errc::too_few_elements, "the boolean carrier has only two elements");
  if (!is_idempotent(tag)) throw error(errc::unsupported_carrier, "construction needs an idempotent carrier");
}

inline void require_postcondition(bool ok, const char* what) {
  if (!ok) throw error(errc::internal_invariant, what);
}

}  // namespace detail

/// Λ with ΛA = (1,…,1) and Λ ≰ (1,…,1), for A column-stochastic but not
/// row-stochastic.
inline RowVec lambda_vector(const Matrix& a) {
  const Tag tag = a.tag();
  detail::require_three_element_idempotent(tag);
  if (!is_column_stochastic(a)) throw error(errc::not_applicable, "matrix is not column-stochastic");
  if (is_row_stochastic(a)) throw error(errc::not_applicable, "matrix is row-stochastic");

  std::vector<Element> lambda;
  lambda.reserve(a.rows());
  std::optional<std::size_t> zero_row;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    lambda.push_back(a.row_sum(i));
    if (!zero_row && lambda.back().is_zero()) zero_row = i;
  }
  if (zero_row) {
    // Row sum 0 means the row itself is zero; bumping its weight changes nothing in ΛA.
    std::fill(lambda.begin(), lambda.end(), Element::one(tag));
    lambda[*zero_row] = element_not_below_one(tag);
  } else {
    for (auto& x : lambda) x = inv(x);
  }

  RowVec result(tag, std::move(lambda));
  const RowVec ones = RowVec::ones(tag, a.rows());
  detail::require_postcondition(mat_mul(result, a) == RowVec::ones(tag, a.cols()), "lambda_vector: ΛA != (1,…,1)");
  detail::require_postcondition(add(ones, result) != ones, "lambda_vector: Λ <= (1,…,1)");
  return result;
}

/// Block form of a column-stochastic A against a 0/1 vector b: rows with b_i = 1
/// first (k of them), then the remaining rows. Columns whose lower block is
/// entirely zero form Q (m of them); the others form P over R, so R has no zero
/// column.
struct BlockSplit {
  std::size_t k = 0;
  std::vector<std::size_t> row_order;  // one-rows, then zero-rows; original indices
  std::vector<std::size_t> q_columns;
  std::vector<std::size_t> p_columns;
  std::size_t m = 0;
};

inline BlockSplit block_split(const Matrix& a, const ColVec& b) {
  BlockSplit s;
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (b[i].is_one()) {
      s.row_order.push_back(i);
    } else {
      zero_rows.push_back(i);
    }
  }
  s.k = s.row_order.size();
  s.row_order.insert(s.row_order.end(), zero_rows.begin(), zero_rows.end());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const bool bottom_zero = std::all_of(zero_rows.begin(), zero_rows.end(), [&](std::size_t i) { return a(i, j).is_zero(); });
    (bottom_zero ? s.q_columns : s.p_columns).push_back(j);
  }
  s.m = s.q_columns.size();
  return s;
}

/// Certificate (u, v) for a column-stochastic A and b ∈ {0,1}^d outside the
/// right image of A. Over the tropical carrier.
///
/// With the block split, Λ from lambda_vector(Q),
///   p = 1 + Σ entries of P and ΛP,   r = 1 + Σ inverses of nonzero entries of R,
///   M = (pr, …, pr),
/// the pair is u = (1,…,1 | M), v = (Λ | M), restored to the original row order.
/// MR dominates every row of P and ΛP, and Q contributes (1,…,1) either way,
/// so uA = vA; ub = 1 while vb = ΣΛ ≠ 1.
inline KernelPair kernel_witness(const Matrix& a, const ColVec& b) {
  detail::require_tags(a.tag(), b.tag());
  detail::require_dims(a.rows(), b.size(), "matrix rows vs right-hand side");
  const Tag tag = a.tag();
  detail::require_three_element_idempotent(tag);
  if (!is_column_stochastic(a)) throw error(errc::not_applicable, "matrix is not column-stochastic");
  for (const auto& e : b) {
    if (!e.is_zero() && !e.is_one()) throw error(errc::not_applicable, "right-hand side is not a 0/1 vector");
  }

  const BlockSplit s = block_split(a, b);
  if (s.k == 0) throw error(errc::membership_detected, "b = 0 lies in every right image");
  const std::span<const std::size_t> top(s.row_order.data(), s.k);
  const std::span<const std::size_t> bottom(s.row_order.data() + s.k, s.row_order.size() - s.k);

  std::vector<Element> lambda;
  if (s.m == 0) {
    lambda.assign(s.k, Element::one(tag));
    lambda.front() = element_not_below_one(tag);
  } else {
    const Matrix q = a.select(top, s.q_columns);
    if (is_row_stochastic(q)) throw error(errc::membership_detected, "Q is row-stochastic, so b = A·(0|1)");
    const RowVec l = lambda_vector(q);
    lambda.assign(l.begin(), l.end());
  }

  Element p = Element::one(tag);
  for (auto j : s.p_columns) {
    Element lambda_p = Element::zero(tag);
    for (std::size_t t = 0; t < s.k; ++t) {
      const Element& entry = a(top[t], j);
      p = add(p, entry);
      lambda_p = add(lambda_p, mul(lambda[t], entry));
    }
    p = add(p, lambda_p);
  }
  Element r = Element::one(tag);
  for (auto i : bottom) {
    for (auto j : s.p_columns) {
      if (!a(i, j).is_zero()) r = add(r, inv(a(i, j)));
    }
  }
  const Element pr = mul(p, r);

  std::vector<Element> u(a.rows(), Element::zero(tag));
  std::vector<Element> v(a.rows(), Element::zero(tag));
  for (std::size_t t = 0; t < s.k; ++t) {
    u[top[t]] = Element::one(tag);
    v[top[t]] = lambda[t];
  }
  for (auto i : bottom) {
    u[i] = pr;
    v[i] = pr;
  }

  KernelPair pair{RowVec(tag, std::move(u)), RowVec(tag, std::move(v))};
  detail::require_postcondition(mat_mul(pair.u, a) == mat_mul(pair.v, a), "kernel_witness: uA != vA");
  detail::require_postcondition(mat_mul(pair.u, b) != mat_mul(pair.v, b), "kernel_witness: ub == vb");
  return pair;
}

namespace detail {

/// Boolean vectors as bit masks: coordinate i is bit i.
inline std::vector<bool> boolean_row_product(std::uint64_t u, const Matrix& a) {
  std::vector<bool> out(a.cols(), false);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!((u >> i) & 1U)) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) out[j] = true;
    }
  }
  return out;
}

inline RowVec boolean_from_mask(std::uint64_t mask, std::size_t length) {
  std::vector<Element> e;
  e.reserve(length);
  for (std::size_t i = 0; i < length; ++i) e.push_back(Element::boolean((mask >> i) & 1U));
  return RowVec(Tag::boolean, std::move(e));
}

}  // namespace detail

inline constexpr std::size_t boolean_search_max_rows = 20;

/// First certificate over {0,1}^d × {0,1}^d in the order of (u, v) read as
/// little-endian bit masks (u major). Equivalent to scanning all 4^d pairs,
/// but each u is evaluated once and grouped by uA.
inline KernelPair boolean_kernel_witness(const Matrix& a, const ColVec& b) {
  detail::require_tags(a.tag(), b.tag());
  detail::require_dims(a.rows(), b.size(), "matrix rows vs right-hand side");
  if (a.tag() != Tag::boolean) throw error(errc::unsupported_carrier, "boolean_kernel_witness needs the boolean carrier");
  const std::size_t d = a.rows();
  if (d > boolean_search_max_rows) throw error(errc::invalid_argument, "too many rows for exhaustive search");

  std::uint64_t b_mask = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (b[i].is_one()) b_mask |= std::uint64_t{1} << i;
  }
  const std::uint64_t count = std::uint64_t{1} << d;

  // For each image uA, the smallest u with ub = 0 and with ub = 1.
  std::map<std::vector<bool>, std::pair<std::optional<std::uint64_t>, std::optional<std::uint64_t>>> first;
  std::vector<std::vector<bool>> images;
  images.reserve(count);
  for (std::uint64_t u = 0; u < count; ++u) {
    images.push_back(detail::boolean_row_product(u, a));
    auto& slot = first[images.back()];
    auto& target = (u & b_mask) ? slot.second : slot.first;
    if (!target) target = u;
  }
  for (std::uint64_t u = 0; u < count; ++u) {
    const auto& slot = first[images[u]];
    const auto& partner = (u & b_mask) ? slot.first : slot.second;
    if (partner) return {detail::boolean_from_mask(u, d), detail::boolean_from_mask(*partner, d)};
  }
  throw error(errc::membership_detected, "no boolean certificate: b lies in the right image");
}

/// A = [[0,1],[1,1]], b = (1+1, 1) in the carrier's own 0 and 1.
inline std::pair<Matrix, ColVec> corcor1_instance(Tag tag) {
  const Element zero = Element::zero(tag);
  const Element one = Element::one(tag);
  return {Matrix::from_rows(tag, {{zero, one}, {one, one}}), ColVec(tag, {add(one, one), one})};
}

}  // namespace semicert
