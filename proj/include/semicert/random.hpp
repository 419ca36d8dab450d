#pragma once

/**
 * @file random.hpp
 * @brief Seeded generators for small random systems over the built-in carriers.
 *
 * Entry distributions:
 *   boolean          fair bits
 *   tropical         integers in [-9, 9], inf with probability 1/8
 *   rational         integers in [-3, 3], one in four divided by 2 or 3
 *   nonneg_rational  integers in [0, 4], one in four divided by 2 or 3
 */

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "semicert/matrix.hpp"

namespace semicert {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Element random_element(Tag tag, Rng& rng) {
  switch (tag) {
    case Tag::boolean: return Element::boolean(uniform_int(rng, 0, 1) == 1);
    case Tag::tropical:
      if (uniform_int(rng, 0, 7) == 0) return Element::tropical_infinity();
      return Element::tropical(uniform_int(rng, -9, 9));
    case Tag::rational:
    case Tag::nonneg_rational: {
      Rational q = tag == Tag::rational ? uniform_int(rng, -3, 3) : uniform_int(rng, 0, 4);
      if (uniform_int(rng, 0, 3) == 0) q /= uniform_int(rng, 2, 3);
      return Element::numeral(tag, q);
    }
  }
  throw error(errc::invalid_argument, "unknown tag");
}

inline Element random_nonzero_element(Tag tag, Rng& rng) {
  for (;;) {
    Element e = random_element(tag, rng);
    if (!e.is_zero()) return e;
  }
}

inline Matrix random_matrix(Tag tag, std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<Element> e;
  e.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) e.push_back(random_element(tag, rng));
  return Matrix(tag, rows, cols, std::move(e));
}

template <typename Vec>
Vec random_vector(Tag tag, std::size_t length, Rng& rng) {
  std::vector<Element> e;
  e.reserve(length);
  for (std::size_t k = 0; k < length; ++k) e.push_back(random_element(tag, rng));
  return Vec(tag, std::move(e));
}

struct RandomSystem {
  Matrix a;
  ColVec b;
  bool generated;  // b = A·w for a random w
};

/// d, n uniform in [1, max_dim]; b is A·w or an independent draw with equal odds.
inline RandomSystem random_system(Tag tag, Rng& rng, std::size_t max_dim = 5) {
  const auto d = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim)));
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim)));
  Matrix a = random_matrix(tag, d, n, rng);
  const bool generated = uniform_int(rng, 0, 1) == 1;
  ColVec b = generated ? mat_mul(a, random_vector<ColVec>(tag, n, rng)) : random_vector<ColVec>(tag, d, rng);
  return {std::move(a), std::move(b), generated};
}

/// Tropical d×n matrix with integer entries in [0, hi], inf with probability
/// 1/8, and every column minimum equal to 0 (column-stochastic).
inline Matrix random_column_stochastic_tropical(std::size_t rows, std::size_t cols, Rng& rng, int hi = 9) {
  std::vector<Element> e(rows * cols, Element::tropical_infinity());
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (uniform_int(rng, 0, 7) != 0) e[i * cols + j] = Element::tropical(uniform_int(rng, 0, hi));
    }
    const auto anchor = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(rows) - 1));
    e[anchor * cols + j] = Element::tropical(0);
  }
  return Matrix(Tag::tropical, rows, cols, std::move(e));
}

/// Permutation times a nonzero diagonal.
inline Matrix random_monomial(Tag tag, std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Element> e(n * n, Element::zero(tag));
  for (std::size_t i = 0; i < n; ++i) e[i * n + perm[i]] = random_nonzero_element(tag, rng);
  return Matrix(tag, n, n, std::move(e));
}

}  // namespace semicert
