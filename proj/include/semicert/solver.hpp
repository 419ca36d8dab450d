#pragma once

/**
 * @file solver.hpp
 * @brief Certified membership b ∈ right-im A and extension of linear functionals.
 *
 * membership_certified answers with one of
 *   - Solution(w)     with A·w = b,
 *   - Refutation(u,v) with uA = vA and ub ≠ vb (see witness.hpp),
 *   - Undecided       only over the nonneg-rational carrier, which is not exact.
 *
 * Over boolean and tropical carriers the residuated ("principal") solution
 * decides membership; a failed residuation is turned into a certificate on the
 * normalized system and mapped back. Over the rationals, exact Gaussian
 * elimination gives either w or a vector y with yA = 0, yb ≠ 0, which splits
 * into the nonnegative pair u - v = y.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "semicert/matrix.hpp"
#include "semicert/normalize.hpp"
#include "semicert/witness.hpp"

namespace semicert {

enum class SolveKind { solution, refutation, undecided };

constexpr std::string_view to_string(SolveKind kind) noexcept {
  switch (kind) {
    case SolveKind::solution: return "solution";
    case SolveKind::refutation: return "refutation";
    case SolveKind::undecided: return "undecided";
  }
  return "?";
}

enum class UndecidedReason {
  /// Every basic solution was checked and none is nonnegative, yet b lies in the
  /// rational span of A, so left ker A ⊆ left ker b and no certificate exists.
  no_kernel_certificate,
  /// Too many columns for the bounded basic-solution search.
  search_bound_exceeded,
};

constexpr std::string_view to_string(UndecidedReason reason) noexcept {
  switch (reason) {
    case UndecidedReason::no_kernel_certificate: return "no-kernel-certificate";
    case UndecidedReason::search_bound_exceeded: return "search-bound-exceeded";
  }
  return "?";
}

class CertifiedSolveResult {
 public:
  static CertifiedSolveResult solution(ColVec w) { return CertifiedSolveResult(Solution{std::move(w)}); }
  static CertifiedSolveResult refutation(RowVec u, RowVec v) {
    return CertifiedSolveResult(Refutation{KernelPair{std::move(u), std::move(v)}});
  }
  static CertifiedSolveResult undecided(UndecidedReason reason) { return CertifiedSolveResult(Undecided{reason}); }

  SolveKind kind() const noexcept { return static_cast<SolveKind>(state_.index()); }

  const ColVec& w() const { return get<Solution>("solution").w; }
  const KernelPair& certificate() const { return get<Refutation>("refutation").pair; }
  const RowVec& u() const { return certificate().u; }
  const RowVec& v() const { return certificate().v; }
  UndecidedReason undecided_reason() const { return get<Undecided>("undecided").reason; }

 private:
  struct Solution { ColVec w; };
  struct Refutation { KernelPair pair; };
  struct Undecided { UndecidedReason reason; };

  template <typename T>
  explicit CertifiedSolveResult(T state) : state_(std::move(state)) {}

  template <typename T>
  const T& get(const char* expected) const {
    if (const auto* p = std::get_if<T>(&state_)) return *p;
    throw error(errc::invalid_argument, std::string("result is not a ") + expected);
  }

  std::variant<Solution, Refutation, Undecided> state_;
};

// ---- residuation ---------------------------------------------------------------

namespace detail {

/// Greatest lower bound in the natural order of a totally ordered idempotent carrier.
inline Element meet(const Element& a, const Element& b) { return nat_geq(a, b) ? b : a; }

/// Greatest candidate x̂_j = meet over i with A_ij ≠ 0 of A_ij⁻¹·b_i.
/// All-zero columns get x̂_j = 0 (they contribute nothing).
inline ColVec residuate(const Matrix& a, const ColVec& b) {
  std::vector<Element> x;
  x.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::optional<Element> candidate;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j).is_zero()) continue;
      Element bound = mul(inv(a(i, j)), b[i]);
      candidate = candidate ? meet(*candidate, bound) : std::move(bound);
    }
    x.push_back(candidate ? *candidate : Element::zero(a.tag()));
  }
  return ColVec(a.tag(), std::move(x));
}

}  // namespace detail

/// The residuated solution x̂ when A·x̂ = b, nothing otherwise; the latter
/// happens exactly when b ∉ right-im A.
inline std::optional<ColVec> principal_solution(const Matrix& a, const ColVec& b) {
  detail::require_tags(a.tag(), b.tag());
  detail::require_dims(a.rows(), b.size(), "matrix rows vs right-hand side");
  if (!is_idempotent(a.tag())) throw error(errc::unsupported_carrier, "residuation needs boolean or tropical");
  ColVec xhat = detail::residuate(a, b);
  if (mat_mul(a, xhat) != b) return std::nullopt;
  return xhat;
}

// ---- exact elimination -----------------------------------------------------------

namespace detail {

struct Elimination {
  bool consistent = true;
  std::size_t rank = 0;
  std::vector<Rational> solution;  // pivots solved, free variables 0 (consistent only)
  std::vector<Rational> y;         // yA = 0, y·b = 1 (inconsistent only)
};

/// Row-reduces [A | b | I]. The identity block records each reduced row as a
/// combination y of the original rows, so a row reading [0 | c | y] with c ≠ 0
/// gives yA = 0 and y·b = c.
inline Elimination eliminate(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                             std::size_t cols) {
  const std::size_t d = a.size();
  const std::size_t width = cols + 1 + d;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(width));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
    m[i][cols + 1 + i] = 1;
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < d; ++col) {
    std::size_t pivot = row;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    if (pivot == d) continue;
    std::swap(m[pivot], m[row]);
    const Rational scale = m[row][col];
    for (auto& x : m[row]) x /= scale;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < width; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  Elimination result;
  result.rank = row;
  for (std::size_t i = row; i < d; ++i) {
    if (m[i][cols] == 0) continue;
    result.consistent = false;
    const Rational c = m[i][cols];
    result.y.assign(m[i].begin() + static_cast<std::ptrdiff_t>(cols + 1), m[i].end());
    for (auto& x : result.y) x /= c;
    return result;
  }
  result.solution.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) result.solution[pivot_cols[r]] = m[r][cols];
  return result;
}

inline std::vector<std::vector<Rational>> payload_rows(const Matrix& a) {
  std::vector<std::vector<Rational>> rows(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j).value();
  }
  return rows;
}

inline std::vector<Rational> payloads(const ColVec& b) {
  std::vector<Rational> out;
  out.reserve(b.size());
  for (const auto& e : b) out.push_back(e.value());
  return out;
}

template <typename Vec>
Vec vector_from_payloads(Tag tag, const std::vector<Rational>& values) {
  std::vector<Element> e;
  e.reserve(values.size());
  for (const auto& q : values) e.push_back(Element::numeral(tag, q));
  return Vec(tag, std::move(e));
}

/// y = u - v with u, v ≥ 0 and disjoint supports.
inline KernelPair split_signed(Tag tag, const std::vector<Rational>& y) {
  std::vector<Rational> pos(y.size());
  std::vector<Rational> neg(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] > 0) pos[i] = y[i];
    if (y[i] < 0) neg[i] = -y[i];
  }
  return {vector_from_payloads<RowVec>(tag, pos), vector_from_payloads<RowVec>(tag, neg)};
}

}  // namespace detail

/// Exact Gaussian elimination over the rationals. Free variables are set to 0;
/// a refutation comes from y with yA = 0, y·b = 1, split as u - v = y.
inline CertifiedSolveResult field_solve(const Matrix& a, const ColVec& b) {
  detail::require_tags(a.tag(), b.tag());
  detail::require_dims(a.rows(), b.size(), "matrix rows vs right-hand side");
  if (a.tag() != Tag::rational) throw error(errc::unsupported_carrier, "field_solve needs the rational carrier");

  const auto elim = detail::eliminate(detail::payload_rows(a), detail::payloads(b), a.cols());
  if (elim.consistent) return CertifiedSolveResult::solution(detail::vector_from_payloads<ColVec>(Tag::rational, elim.solution));
  auto pair = detail::split_signed(Tag::rational, elim.y);
  return CertifiedSolveResult::refutation(std::move(pair.u), std::move(pair.v));
}

inline constexpr std::size_t nonneg_search_max_cols = 16;

namespace detail {

inline bool all_nonnegative(const std::vector<Rational>& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q >= 0; });
}

/// Nonneg-rational membership. If b leaves the rational span of A the signed
/// refutation is already a nonnegative certificate. Otherwise no certificate
/// can exist (uA = vA forces uAw = vAw = ...), and membership is settled by
/// checking every basic solution: a nonnegative solution exists iff one with
/// linearly independent support does.
inline CertifiedSolveResult nonneg_membership(const Matrix& a, const ColVec& b) {
  const auto rows = payload_rows(a);
  const auto rhs = payloads(b);
  const auto elim = eliminate(rows, rhs, a.cols());
  if (!elim.consistent) {
    auto pair = split_signed(Tag::nonneg_rational, elim.y);
    return CertifiedSolveResult::refutation(std::move(pair.u), std::move(pair.v));
  }
  if (all_nonnegative(elim.solution)) {
    return CertifiedSolveResult::solution(vector_from_payloads<ColVec>(Tag::nonneg_rational, elim.solution));
  }
  const std::size_t n = a.cols();
  if (n > nonneg_search_max_cols) return CertifiedSolveResult::undecided(UndecidedReason::search_bound_exceeded);

  // Supports in order of size, then mask value.
  std::vector<std::uint32_t> supports;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) <= elim.rank) supports.push_back(mask);
  }
  std::stable_sort(supports.begin(), supports.end(),
                   [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });
  for (auto mask : supports) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1U) cols.push_back(j);
    }
    std::vector<std::vector<Rational>> sub(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t c = 0; c < cols.size(); ++c) sub[i][c] = rows[i][cols[c]];
    }
    const auto part = eliminate(sub, rhs, cols.size());
    if (!part.consistent || part.rank != cols.size() || !all_nonnegative(part.solution)) continue;
    std::vector<Rational> w(n, Rational(0));
    for (std::size_t c = 0; c < cols.size(); ++c) w[cols[c]] = part.solution[c];
    return CertifiedSolveResult::solution(vector_from_payloads<ColVec>(Tag::nonneg_rational, w));
  }
  return CertifiedSolveResult::undecided(UndecidedReason::no_kernel_certificate);
}

/// Residual certificate over the booleans for any row count: with x̂ the
/// principal solution and i0 a row where (Ax̂)_i0 = 0 < b_i0, every column
/// touching row i0 already meets a row with b = 0, so adding row i0 to the
/// indicator of the b = 0 rows leaves uA unchanged.
inline KernelPair boolean_residual_witness(const Matrix& a, const ColVec& b, const ColVec& xhat) {
  const ColVec image = mat_mul(a, xhat);
  std::vector<Element> u(a.rows(), Element::boolean(false));
  std::optional<std::size_t> row;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (b[i].is_zero()) u[i] = Element::boolean(true);
    if (!row && b[i].is_one() && image[i].is_zero()) row = i;
  }
  if (!row) throw error(errc::membership_detected, "b lies in the right image");
  RowVec v(Tag::boolean, u);
  u[*row] = Element::boolean(true);
  return {RowVec(Tag::boolean, std::move(u)), std::move(v)};
}

}  // namespace detail

inline CertifiedSolveResult membership_certified(const Matrix& a, const ColVec& b) {
  detail::require_tags(a.tag(), b.tag());
  detail::require_dims(a.rows(), b.size(), "matrix rows vs right-hand side");
  const Tag tag = a.tag();
  if (tag == Tag::rational) return field_solve(a, b);
  if (tag == Tag::nonneg_rational) return detail::nonneg_membership(a, b);

  if (b.is_zero()) return CertifiedSolveResult::solution(ColVec::zeros(tag, a.cols()));
  if (a.is_zero()) {
    std::size_t i = 0;
    while (b[i].is_zero()) ++i;
    return CertifiedSolveResult::refutation(RowVec::unit(tag, a.rows(), i), RowVec::zeros(tag, a.rows()));
  }

  const NormalizedSystem ns = normalize(a, b);
  if (auto w = principal_solution(ns.a_norm, ns.b_norm)) return CertifiedSolveResult::solution(ns.lift_solution(*w));

  if (tag == Tag::boolean) {
    auto pair = a.rows() <= boolean_search_max_rows
                    ? boolean_kernel_witness(a, b)
                    : detail::boolean_residual_witness(a, b, detail::residuate(a, b));
    return CertifiedSolveResult::refutation(std::move(pair.u), std::move(pair.v));
  }
  const KernelPair pair = kernel_witness(ns.a_norm, ns.b_norm);
  return CertifiedSolveResult::refutation(ns.lift_certificate_row(pair.u), ns.lift_certificate_row(pair.v));
}

// ---- extension of linear functionals ------------------------------------------

enum class ExtensionKind { extended, ill_posed, inconclusive };

constexpr std::string_view to_string(ExtensionKind kind) noexcept {
  switch (kind) {
    case ExtensionKind::extended: return "extended";
    case ExtensionKind::ill_posed: return "ill-posed";
    case ExtensionKind::inconclusive: return "inconclusive";
  }
  return "?";
}

/// ψ(x) = Σ x_j·alpha_j agreeing with φ on the generators, or the pair (u, v)
/// with uG = vG but u·values ≠ v·values.
struct ExtensionResult {
  ExtensionKind kind;
  std::optional<ColVec> alpha;
  std::optional<KernelPair> pair;
  std::optional<UndecidedReason> reason;
};

/// Rows of `generators` span L ⊆ Sⁿ; values_i = φ(G_i).
inline ExtensionResult extend_functional(const Matrix& generators, const ColVec& values) {
  const CertifiedSolveResult r = membership_certified(generators, values);
  switch (r.kind()) {
    case SolveKind::solution: return {ExtensionKind::extended, r.w(), std::nullopt, std::nullopt};
    case SolveKind::refutation: return {ExtensionKind::ill_posed, std::nullopt, r.certificate(), std::nullopt};
    case SolveKind::undecided: break;
  }
  return {ExtensionKind::inconclusive, std::nullopt, std::nullopt, r.undecided_reason()};
}

/// Evaluates ψ(x) = Σ x_j·alpha_j.
inline Element apply_functional(const ColVec& alpha, const RowVec& x) { return mat_mul(x, alpha); }

}  // namespace semicert
