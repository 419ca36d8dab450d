#pragma once

/**
 * @file verify.hpp
 * @brief Desk-scale verification suites for exactness.
 *
 * boolean_e2_exhaustive enumerates every boolean system up to a size bound and
 * checks the matrix form of exactness: left ker A ⊆ left ker b implies
 * b ∈ right-im A. Kernel inclusion and membership are both computed by brute
 * force on bit masks, independently of the solver.
 *
 * randomized_dichotomy_suite runs membership_certified on seeded random systems
 * and re-checks every answer exactly.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "semicert/random.hpp"
#include "semicert/solver.hpp"

namespace semicert {

namespace detail {

struct BoolSystem {
  std::vector<std::uint32_t> rows;  // row i as a mask over columns
  std::uint32_t b = 0;              // mask over rows
  std::size_t n = 0;
};

inline std::uint32_t bool_row_times(const BoolSystem& s, std::uint32_t u) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    if ((u >> i) & 1U) out |= s.rows[i];
  }
  return out;
}

inline bool bool_kernel_inclusion(const BoolSystem& s) {
  const std::uint32_t count = std::uint32_t{1} << s.rows.size();
  std::vector<std::uint32_t> image(count);
  for (std::uint32_t u = 0; u < count; ++u) image[u] = bool_row_times(s, u);
  for (std::uint32_t u = 0; u < count; ++u) {
    for (std::uint32_t v = 0; v < count; ++v) {
      if (image[u] == image[v] && ((u & s.b) != 0) != ((v & s.b) != 0)) return false;
    }
  }
  return true;
}

inline bool bool_membership(const BoolSystem& s) {
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << s.n); ++w) {
    std::uint32_t aw = 0;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      if (s.rows[i] & w) aw |= std::uint32_t{1} << i;
    }
    if (aw == s.b) return true;
  }
  return false;
}

inline BoolSystem to_bool_system(const Matrix& a, const ColVec& b) {
  if (a.tag() != Tag::boolean) throw error(errc::unsupported_carrier, "boolean oracle needs boolean input");
  if (a.rows() > 12 || a.cols() > 16) throw error(errc::invalid_argument, "too large for the boolean oracle");
  BoolSystem s;
  s.n = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_one()) mask |= std::uint32_t{1} << j;
    }
    s.rows.push_back(mask);
    if (b[i].is_one()) s.b |= std::uint32_t{1} << i;
  }
  return s;
}

}  // namespace detail

/// Brute-force oracles over {0,1}; small systems only.
inline bool exhaustive_boolean_membership(const Matrix& a, const ColVec& b) {
  return detail::bool_membership(detail::to_bool_system(a, b));
}
inline bool exhaustive_boolean_kernel_inclusion(const Matrix& a, const ColVec& b) {
  return detail::bool_kernel_inclusion(detail::to_bool_system(a, b));
}

struct BooleanE2Report {
  struct Shape {
    std::size_t d = 0;
    std::size_t n = 0;
    std::uint64_t systems = 0;
    std::uint64_t kernel_inclusions = 0;
    std::uint64_t members = 0;
    std::uint64_t violations = 0;
  };
  std::vector<Shape> shapes;
  std::uint64_t total_systems = 0;
  std::uint64_t total_violations = 0;
  std::vector<std::string> violating_instances;

  const Shape* shape(std::size_t d, std::size_t n) const {
    for (const auto& s : shapes) {
      if (s.d == d && s.n == n) return &s;
    }
    return nullptr;
  }
};

inline constexpr std::size_t boolean_e2_max_dim = 4;

/// Every A ∈ {0,1}^{d×n}, b ∈ {0,1}^d for 1 ≤ d ≤ d_max, 1 ≤ n ≤ n_max.
inline BooleanE2Report boolean_e2_exhaustive(std::size_t d_max, std::size_t n_max) {
  if (d_max < 1 || n_max < 1 || d_max > boolean_e2_max_dim || n_max > boolean_e2_max_dim) {
    throw error(errc::invalid_argument, "boolean_e2_exhaustive supports 1 <= d, n <= 4");
  }
  BooleanE2Report report;
  for (std::size_t d = 1; d <= d_max; ++d) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      BooleanE2Report::Shape shape{d, n};
      detail::BoolSystem s;
      s.n = n;
      s.rows.assign(d, 0);
      const std::uint64_t matrices = std::uint64_t{1} << (d * n);
      const std::uint32_t column_mask = (std::uint32_t{1} << n) - 1;
      for (std::uint64_t code = 0; code < matrices; ++code) {
        for (std::size_t i = 0; i < d; ++i) s.rows[i] = static_cast<std::uint32_t>(code >> (i * n)) & column_mask;
        for (std::uint32_t b = 0; b < (std::uint32_t{1} << d); ++b) {
          s.b = b;
          ++shape.systems;
          const bool included = detail::bool_kernel_inclusion(s);
          const bool member = detail::bool_membership(s);
          shape.kernel_inclusions += included;
          shape.members += member;
          if (included && !member) {
            ++shape.violations;
            std::ostringstream os;
            os << "d=" << d << " n=" << n << " A=" << code << " b=" << b;
            report.violating_instances.push_back(os.str());
          }
        }
      }
      report.total_systems += shape.systems;
      report.total_violations += shape.violations;
      report.shapes.push_back(shape);
    }
  }
  return report;
}

struct DichotomyReport {
  Tag tag = Tag::tropical;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t solutions = 0;
  std::uint64_t refutations = 0;
  std::uint64_t generated = 0;  // trials whose b was drawn as A·w
  std::vector<std::string> failures;
};

/// Outcome check for one system: Solution must satisfy A·w = b, Refutation
/// must pass check_certificate, Undecided is a failure on exact carriers, and
/// a generated b must come back as a Solution. Empty string when all hold.
inline std::string audit_outcome(const RandomSystem& sys, const CertifiedSolveResult& r) {
  switch (r.kind()) {
    case SolveKind::solution:
      if (mat_mul(sys.a, r.w()) != sys.b) return "solution does not satisfy A·w = b";
      return {};
    case SolveKind::refutation:
      if (!check_certificate(sys.a, sys.b, r.certificate())) return "certificate fails check_certificate";
      if (sys.generated) return "refutation for a b drawn from the image";
      return {};
    case SolveKind::undecided: return "undecided on an exact carrier";
  }
  return "unknown kind";
}

inline DichotomyReport randomized_dichotomy_suite(Tag tag, std::uint64_t trials, std::uint64_t seed) {
  if (tag == Tag::nonneg_rational) {
    throw error(errc::invalid_argument, "the dichotomy suite covers boolean, tropical and rational");
  }
  DichotomyReport report;
  report.tag = tag;
  report.trials = trials;
  report.seed = seed;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const RandomSystem sys = random_system(tag, rng);
    report.generated += sys.generated;
    std::string failure;
    try {
      const CertifiedSolveResult r = membership_certified(sys.a, sys.b);
      report.solutions += r.kind() == SolveKind::solution;
      report.refutations += r.kind() == SolveKind::refutation;
      failure = audit_outcome(sys, r);
    } catch (const error& e) {
      failure = e.what();
    }
    if (!failure.empty()) {
      std::ostringstream os;
      os << "seed=" << seed << " trial=" << t << " A=" << to_bracket_string(sys.a)
         << " b=" << to_bracket_string(sys.b) << ": " << failure;
      report.failures.push_back(os.str());
    }
  }
  return report;
}

}  // namespace semicert
