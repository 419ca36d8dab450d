#pragma once

/**
 * @file normalize.hpp
 * @brief Rescale a system A·w = b to a column-stochastic A with 0/1 right side.
 *
 * With C = diag(β) and D = diag(α) the normalized system is
 *
 *     A_norm = C⁻¹ · A' · D⁻¹,   b_norm = C⁻¹ · b
 *
 * where A' is A with all-zero columns removed, β_i = b_i (or 1 when b_i = 0)
 * and α_j is the j-th column sum of C⁻¹A'. Both diagonals are invertible on a
 * zero-sum free semifield, so solutions and left-kernel certificates transfer
 * in both directions:
 *
 *     A'w' = b   iff  A_norm (D w') = b_norm
 *     (u_n, v_n) refutes (A_norm, b_norm)  iff  (u_n C⁻¹, v_n C⁻¹) refutes (A, b)
 */

#include <vector>

#include "semicert/matrix.hpp"

namespace semicert {

struct NormalizedSystem {
  Matrix a_norm;                         // column-stochastic, cols = kept_columns.size()
  ColVec b_norm;                         // entries in {0, 1}
  std::vector<Element> row_scale;        // β, diagonal of C
  std::vector<Element> col_scale;        // α, diagonal of D (one per kept column)
  std::vector<std::size_t> kept_columns; // a_norm column -> original column
  std::size_t original_cols = 0;

  /// w = D⁻¹ · w_norm re-inflated to the original width; dropped columns get 0.
  ColVec lift_solution(const ColVec& w_norm) const {
    const Tag tag = a_norm.tag();
    std::vector<Element> w(original_cols, Element::zero(tag));
    for (std::size_t j = 0; j < kept_columns.size(); ++j) w[kept_columns[j]] = mul(inv(col_scale[j]), w_norm[j]);
    return ColVec(tag, std::move(w));
  }

  /// u = u_norm · C⁻¹.
  RowVec lift_certificate_row(const RowVec& u_norm) const {
    std::vector<Element> u;
    u.reserve(u_norm.size());
    for (std::size_t i = 0; i < u_norm.size(); ++i) u.push_back(mul(u_norm[i], inv(row_scale[i])));
    return RowVec(a_norm.tag(), std::move(u));
  }
};

inline NormalizedSystem normalize(const Matrix& a, const ColVec& b) {
  detail::require_tags(a.tag(), b.tag());
  detail::require_dims(a.rows(), b.size(), "matrix rows vs right-hand side");
  const Tag tag = a.tag();
  if (!is_zero_sum_free(tag)) throw error(errc::not_zero_sum_free, "rational carrier admits a + b = 0 with a, b != 0");

  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!a.column_is_zero(j)) kept.push_back(j);
  }

  std::vector<Element> beta;
  std::vector<Element> beta_inv;
  beta.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    beta.push_back(b[i].is_zero() ? Element::one(tag) : b[i]);
    beta_inv.push_back(inv(beta.back()));
  }

  // C⁻¹A' column by column, then divide each column by its sum.
  std::vector<Element> scaled(a.rows() * kept.size(), Element::zero(tag));
  std::vector<Element> alpha;
  alpha.reserve(kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    Element col_sum = Element::zero(tag);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      scaled[i * kept.size() + c] = mul(beta_inv[i], a(i, kept[c]));
      col_sum = add(col_sum, scaled[i * kept.size() + c]);
    }
    alpha.push_back(col_sum);
  }
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const Element alpha_inv = inv(alpha[c]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto& entry = scaled[i * kept.size() + c];
      entry = mul(entry, alpha_inv);
    }
  }

  std::vector<Element> b_norm;
  b_norm.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) b_norm.push_back(mul(beta_inv[i], b[i]));

  return NormalizedSystem{Matrix(tag, a.rows(), kept.size(), std::move(scaled)),
                          ColVec(tag, std::move(b_norm)),
                          std::move(beta),
                          std::move(alpha),
                          std::move(kept),
                          a.cols()};
}

}  // namespace semicert
