#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace semicert;
using namespace semicert::test;

TEST_CASE("principal_solution: examples", "[solver][residuation]") {
  const Matrix a = mat(Tag::tropical, {{"0", "2"}, {"3", "0"}});
  {
    const ColVec b = col(Tag::tropical, {"1", "0"});
    const auto xhat = principal_solution(a, b);
    REQUIRE(xhat);
    CHECK(*xhat == col(Tag::tropical, {"1", "0"}));
    CHECK(tropical_grid_solution(*to_int_tropical(a, b), -10, 10).has_value());
  }
  {
    const ColVec b = col(Tag::tropical, {"0", "inf"});
    CHECK_FALSE(principal_solution(a, b));
    CHECK(detail::residuate(a, b) == col(Tag::tropical, {"inf", "inf"}));
    CHECK_FALSE(tropical_grid_solution(*to_int_tropical(a, b), -10, 10).has_value());
  }
  CHECK(*principal_solution(a, ColVec::zeros(Tag::tropical, 2)) == ColVec::zeros(Tag::tropical, 2));
  CHECK(*principal_solution(mat(Tag::boolean, {{"1", "0"}, {"1", "1"}}), col(Tag::boolean, {"0", "0"})) ==
        ColVec::zeros(Tag::boolean, 2));
  CHECK_THROWS_AS(principal_solution(mat(Tag::rational, {{"1"}}), col(Tag::rational, {"1"})), error);
}

TEST_CASE("principal_solution: complete and maximal against a grid", "[solver][residuation][property]") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    std::vector<Element> e;
    for (std::size_t k = 0; k < d * n; ++k) {
      e.push_back(uniform_int(rng, 0, 5) == 0 ? Element::tropical_infinity() : trop(uniform_int(rng, -3, 3)));
    }
    const Matrix a(Tag::tropical, d, n, std::move(e));
    std::vector<Element> be;
    for (std::size_t i = 0; i < d; ++i) {
      be.push_back(uniform_int(rng, 0, 5) == 0 ? Element::tropical_infinity() : trop(uniform_int(rng, -3, 3)));
    }
    const ColVec b(Tag::tropical, std::move(be));
    const auto xhat = principal_solution(a, b);
    const auto sys = *to_int_tropical(a, b);

    // Collect every grid solution; entries of x̂ lie in [-6, 6] ∪ {inf} here.
    std::vector<std::vector<long long>> solutions;
    const std::vector<long long> values = [] {
      std::vector<long long> v;
      for (long long x = -8; x <= 8; ++x) v.push_back(x);
      v.push_back(kInf);
      return v;
    }();
    for (auto w0 : values) {
      for (auto w1 : (n == 2 ? values : std::vector<long long>{0})) {
        std::vector<long long> w{w0};
        if (n == 2) w.push_back(w1);
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i) {
          long long acc = kInf;
          for (std::size_t j = 0; j < n; ++j) acc = std::min(acc, trop_mul(sys.a[i][j], w[j]));
          ok = acc == sys.b[i];
        }
        if (ok) solutions.push_back(w);
      }
    }
    // Zero columns are free; every grid value then solves.
    bool has_zero_column = false;
    for (std::size_t j = 0; j < n; ++j) has_zero_column |= a.column_is_zero(j);

    REQUIRE(xhat.has_value() == !solutions.empty());
    if (!xhat || has_zero_column) continue;
    for (const auto& w : solutions) {
      const ColVec wv = to_tropical_col(w);
      for (std::size_t j = 0; j < n; ++j) CHECK(nat_geq((*xhat)[j], wv[j]));
    }
  }
}

TEST_CASE("field_solve: examples", "[solver][field]") {
  {
    const auto r = field_solve(Matrix::identity(Tag::rational, 2), col(Tag::rational, {"3", "4"}));
    REQUIRE(r.kind() == SolveKind::solution);
    CHECK(r.w() == col(Tag::rational, {"3", "4"}));
  }
  {
    const Matrix a = mat(Tag::rational, {{"1"}, {"1"}});
    const ColVec b = col(Tag::rational, {"1", "0"});
    const auto r = field_solve(a, b);
    REQUIRE(r.kind() == SolveKind::refutation);
    CHECK(r.u() == row(Tag::rational, {"1", "0"}));
    CHECK(r.v() == row(Tag::rational, {"0", "1"}));
    CHECK(check_certificate(a, b, r.certificate()));
  }
  {
    const auto r = field_solve(mat(Tag::rational, {{"0", "1"}, {"1", "1"}}), col(Tag::rational, {"2", "1"}));
    REQUIRE(r.kind() == SolveKind::solution);
    CHECK(r.w() == col(Tag::rational, {"-1", "2"}));
  }
  {
    // No columns: any nonzero b is refuted.
    const Matrix a = Matrix::zeros(Tag::rational, 2, 0);
    const ColVec b = col(Tag::rational, {"0", "3"});
    const auto r = field_solve(a, b);
    REQUIRE(r.kind() == SolveKind::refutation);
    CHECK(check_certificate(a, b, r.certificate()));
  }
  CHECK_THROWS_AS(field_solve(mat(Tag::tropical, {{"1"}}), col(Tag::tropical, {"1"})), error);
}

TEST_CASE("field_solve: certificates are nonnegative splits", "[solver][field][property]") {
  Rng rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const RandomSystem sys = random_system(Tag::rational, rng);
    const auto r = field_solve(sys.a, sys.b);
    if (r.kind() == SolveKind::solution) {
      CHECK(sys.a * r.w() == sys.b);
      continue;
    }
    REQUIRE(r.kind() == SolveKind::refutation);
    CHECK_FALSE(sys.generated);
    CHECK(check_certificate(sys.a, sys.b, r.certificate()));
    for (std::size_t i = 0; i < r.u().size(); ++i) {
      CHECK(r.u()[i].value() >= 0);
      CHECK(r.v()[i].value() >= 0);
    }
  }
}

TEST_CASE("membership_certified: examples", "[solver][membership]") {
  {
    const Matrix a = mat(Tag::tropical, {{"1", "2"}, {"0", "0"}});
    const ColVec b = col(Tag::tropical, {"0", "inf"});
    const auto r = membership_certified(a, b);
    REQUIRE(r.kind() == SolveKind::refutation);
    CHECK(r.u() == row(Tag::tropical, {"0", "0"}));
    CHECK(r.v() == row(Tag::tropical, {"-1", "0"}));
    CHECK(r.u() * a == row(Tag::tropical, {"0", "0"}));
    CHECK(r.u() * b == trop(0));
    CHECK(r.v() * b == trop(-1));
  }
  {
    const auto r = membership_certified(mat(Tag::boolean, {{"1"}, {"1"}}), col(Tag::boolean, {"1", "0"}));
    REQUIRE(r.kind() == SolveKind::refutation);
    CHECK(r.u() == row(Tag::boolean, {"1", "0"}));
    CHECK(r.v() == row(Tag::boolean, {"0", "1"}));
  }
  for (Tag tag : {Tag::boolean, Tag::tropical, Tag::nonneg_rational, Tag::rational}) {
    Rng rng(4);
    const ColVec b = random_vector<ColVec>(tag, 3, rng);
    const auto r = membership_certified(Matrix::identity(tag, 3), b);
    REQUIRE(r.kind() == SolveKind::solution);
    CHECK(r.w() == b);
  }
}

TEST_CASE("membership_certified: degenerate systems", "[solver][membership]") {
  // Zero right side.
  const auto zero_b = membership_certified(mat(Tag::tropical, {{"1", "inf"}}), ColVec::zeros(Tag::tropical, 1));
  REQUIRE(zero_b.kind() == SolveKind::solution);
  CHECK(zero_b.w() == ColVec::zeros(Tag::tropical, 2));

  // All-zero matrix with nonzero b.
  const Matrix z = Matrix::zeros(Tag::tropical, 3, 2);
  const ColVec b = col(Tag::tropical, {"inf", "4", "inf"});
  const auto r = membership_certified(z, b);
  REQUIRE(r.kind() == SolveKind::refutation);
  CHECK(r.u() == RowVec::unit(Tag::tropical, 3, 1));
  CHECK(r.v() == RowVec::zeros(Tag::tropical, 3));
  CHECK(check_certificate(z, b, r.certificate()));

  // No columns at all.
  const Matrix empty = Matrix::zeros(Tag::boolean, 2, 0);
  const ColVec eb = col(Tag::boolean, {"0", "1"});
  const auto er = membership_certified(empty, eb);
  REQUIRE(er.kind() == SolveKind::refutation);
  CHECK(check_certificate(empty, eb, er.certificate()));

  // Dropped zero column gets 0 in the lifted solution.
  const Matrix a = mat(Tag::tropical, {{"inf", "2"}, {"inf", "5"}});
  const auto lifted = membership_certified(a, col(Tag::tropical, {"3", "6"}));
  REQUIRE(lifted.kind() == SolveKind::solution);
  CHECK(lifted.w() == col(Tag::tropical, {"inf", "1"}));

  CHECK_THROWS_AS(membership_certified(a, col(Tag::tropical, {"3"})), error);
  CHECK_THROWS_AS(membership_certified(a, col(Tag::boolean, {"1", "0"})), error);
}

TEST_CASE("membership_certified: boolean fallback for many rows", "[solver][membership]") {
  // 22 rows exceeds the exhaustive search bound.
  std::vector<std::vector<Element>> rows(22, {Element::boolean(true)});
  const Matrix a = Matrix::from_rows(Tag::boolean, rows);
  std::vector<Element> be(22, Element::boolean(true));
  be[5] = Element::boolean(false);
  const ColVec b(Tag::boolean, std::move(be));
  const auto r = membership_certified(a, b);
  REQUIRE(r.kind() == SolveKind::refutation);
  CHECK(check_certificate(a, b, r.certificate()));
}

TEST_CASE("membership_certified: dichotomy, soundness and completeness", "[solver][membership][property]") {
  for (Tag tag : {Tag::boolean, Tag::tropical, Tag::rational}) {
    Rng rng(1000 + static_cast<int>(tag));
    for (int trial = 0; trial < 300; ++trial) {
      const RandomSystem sys = random_system(tag, rng);
      const auto r = membership_certified(sys.a, sys.b);
      REQUIRE(r.kind() != SolveKind::undecided);
      if (r.kind() == SolveKind::solution) {
        CHECK(sys.a * r.w() == sys.b);
        continue;
      }
      CHECK_FALSE(sys.generated);
      CHECK(check_certificate(sys.a, sys.b, r.certificate()));
      for (int k = 0; k < 10; ++k) CHECK(sys.a * random_vector<ColVec>(tag, sys.a.cols(), rng) != sys.b);
    }
  }
}

TEST_CASE("membership_certified agrees with the boolean brute force", "[solver][membership][property]") {
  Rng rng(555);
  for (int trial = 0; trial < 400; ++trial) {
    const RandomSystem sys = random_system(Tag::boolean, rng, 3);
    const bool member = exhaustive_boolean_membership(sys.a, sys.b);
    CHECK((membership_certified(sys.a, sys.b).kind() == SolveKind::solution) == member);
  }
}

TEST_CASE("membership_certified: tropical agrees with the grid oracle", "[solver][membership][property]") {
  Rng rng(556);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const Matrix a = random_column_stochastic_tropical(d, n, rng, 10);
    std::vector<Element> be;
    for (std::size_t i = 0; i < d; ++i) be.push_back(uniform_int(rng, 0, 1) ? trop(0) : Element::tropical_infinity());
    const ColVec b(Tag::tropical, std::move(be));
    const bool member = tropical_grid_solution(*to_int_tropical(a, b), -10, 10).has_value();
    CHECK((membership_certified(a, b).kind() == SolveKind::solution) == member);
  }
}

TEST_CASE("membership_certified: scaling by monomial matrices", "[solver][property]") {
  Rng rng(808);
  for (Tag tag : {Tag::boolean, Tag::tropical, Tag::rational}) {
    for (int trial = 0; trial < 60; ++trial) {
      const RandomSystem sys = random_system(tag, rng);
      const Matrix c = random_monomial(tag, sys.a.rows(), rng);
      const Matrix dm = random_monomial(tag, sys.a.cols(), rng);
      const Matrix ca_d = c * sys.a * dm;
      const ColVec cb = c * sys.b;
      const auto r = membership_certified(sys.a, sys.b);
      CHECK(r.kind() == membership_certified(ca_d, cb).kind());
      if (r.kind() == SolveKind::refutation) {
        const Matrix c_inv = invert_monomial(c);
        CHECK(check_certificate(ca_d, cb, r.u() * c_inv, r.v() * c_inv));
      }
    }
  }
}

TEST_CASE("nonneg-rational membership", "[solver][nonneg]") {
  const auto [a, b] = corcor1_instance(Tag::nonneg_rational);
  const auto r = membership_certified(a, b);
  REQUIRE(r.kind() == SolveKind::undecided);
  CHECK(r.undecided_reason() == UndecidedReason::no_kernel_certificate);

  // Outside the rational span: the signed refutation is already nonnegative.
  const Matrix a2 = mat(Tag::nonneg_rational, {{"1"}, {"1"}});
  const ColVec b2 = col(Tag::nonneg_rational, {"1", "0"});
  const auto r2 = membership_certified(a2, b2);
  REQUIRE(r2.kind() == SolveKind::refutation);
  CHECK(check_certificate(a2, b2, r2.certificate()));

  // Pivot solution (1, -1, 0) is negative; the basic search finds (0, 0, 1).
  const Matrix a3 = mat(Tag::nonneg_rational, {{"1", "1", "0"}, {"1", "0", "1"}});
  const auto r3 = membership_certified(a3, col(Tag::nonneg_rational, {"0", "1"}));
  REQUIRE(r3.kind() == SolveKind::solution);
  CHECK(r3.w() == col(Tag::nonneg_rational, {"0", "0", "1"}));

  // Too many columns for the bounded search.
  std::vector<std::vector<Element>> wide(2);
  wide[0].push_back(Element::nonneg(0));
  wide[1].push_back(Element::nonneg(1));
  for (int j = 0; j < 16; ++j) {
    wide[0].push_back(Element::nonneg(1));
    wide[1].push_back(Element::nonneg(1));
  }
  const auto r4 = membership_certified(Matrix::from_rows(Tag::nonneg_rational, wide), b);
  REQUIRE(r4.kind() == SolveKind::undecided);
  CHECK(r4.undecided_reason() == UndecidedReason::search_bound_exceeded);

  // Generated right sides are always found.
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const Matrix m = random_matrix(Tag::nonneg_rational, d, n, rng);
    const ColVec v = m * random_vector<ColVec>(Tag::nonneg_rational, n, rng);
    const auto s = membership_certified(m, v);
    REQUIRE(s.kind() == SolveKind::solution);
    CHECK(m * s.w() == v);
  }
}

TEST_CASE("extend_functional", "[solver][extension]") {
  {
    const Matrix g = mat(Tag::tropical, {{"0", "2"}, {"3", "0"}});
    const ColVec values = col(Tag::tropical, {"1", "0"});
    const auto r = extend_functional(g, values);
    REQUIRE(r.kind == ExtensionKind::extended);
    CHECK(*r.alpha == col(Tag::tropical, {"1", "0"}));
    for (std::size_t i = 0; i < g.rows(); ++i) CHECK(apply_functional(*r.alpha, g.row(i)) == values[i]);
  }
  {
    const auto r = extend_functional(mat(Tag::boolean, {{"1"}, {"1"}}), col(Tag::boolean, {"1", "0"}));
    REQUIRE(r.kind == ExtensionKind::ill_posed);
    CHECK(r.pair->u == row(Tag::boolean, {"1", "0"}));
    CHECK(r.pair->v == row(Tag::boolean, {"0", "1"}));
  }
  {
    const auto [a, b] = corcor1_instance(Tag::nonneg_rational);
    const auto r = extend_functional(a, b);
    CHECK(r.kind == ExtensionKind::inconclusive);
    CHECK(r.reason == UndecidedReason::no_kernel_certificate);
  }
  Rng rng(71);
  for (Tag tag : {Tag::boolean, Tag::tropical, Tag::nonneg_rational, Tag::rational}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto d = static_cast<std::size_t>(uniform_int(rng, 1, 4));
      const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
      const Matrix g = random_matrix(tag, d, n, rng);
      const ColVec values = g * random_vector<ColVec>(tag, n, rng);
      const auto r = extend_functional(g, values);
      REQUIRE(r.kind == ExtensionKind::extended);
      CHECK(g * *r.alpha == values);
    }
  }
}
