#include <doctest.h>

#include <random>

#include "filtra/closure.hpp"
#include "filtra/errors.hpp"
#include "filtra/lp.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace filtra;
using th::ideal;
using th::mono;

TEST_CASE("elimination solves small systems") {
  using lp::Inequality;
  using lp::Rational;
  // x + y <= 2, -x <= -1, -y <= -1  → x = y = 1
  std::vector<Inequality> rows = {
      {{1, 1}, 2},
      {{-1, 0}, -1},
      {{0, -1}, -1},
  };
  auto x = lp::solve(rows, 2);
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  rows.push_back({{1, 0}, Rational(1, 2)});
  CHECK_FALSE(lp::solve(rows, 2));
}

TEST_CASE("simplex and elimination agree") {
  std::mt19937_64 eng(5);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + eng() % 2;
    const auto pts = oracle::random_gens(eng, n, 4, 5);
    Exponents target(n);
    for (std::size_t i = 0; i < n; ++i) target.set(i, static_cast<Exponent>(eng() % 5));
    auto a = lp::dominated_convex_combination(pts, target);
    auto b = lp::dominated_convex_combination_fm(pts, target);
    REQUIRE(a.has_value() == b.has_value());
    if (!a) continue;
    lp::Rational sum = 0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      CHECK((*a)[j] >= 0);
      sum += (*a)[j];
    }
    CHECK(sum == 1);
    for (std::size_t i = 0; i < n; ++i) {
      lp::Rational dot = 0;
      for (std::size_t j = 0; j < pts.size(); ++j) dot += (*a)[j] * pts[j][i];
      CHECK(dot <= target[i]);
    }
  }
}

TEST_CASE("closure examples") {
  auto ctx = th::xyz(2);
  CHECK(integral_closure(ideal(ctx, "x^2, y^2")) == ideal(ctx, "x^2, x*y, y^2"));
  CHECK(integral_closure(ideal(ctx, "x*y")) == ideal(ctx, "x*y"));
  auto c = integral_closure(ideal(ctx, "x^3, y^3"));
  CHECK(c.contains(mono(ctx, "x^2*y")));
  CHECK(c.contains(mono(ctx, "x*y^2")));
  CHECK(integral_closure(MonomialIdeal::unit(ctx)).is_unit());
  CHECK_THROWS_AS(integral_closure(MonomialIdeal::zero(ctx)), DomainError);

  auto r = oracle::raw(ideal(ctx, "x^2, y^2"));
  CHECK(oracle::power_member(r, {1, 1}, 2));
  CHECK_FALSE(oracle::power_member(r, {1, 0}, 4));
  auto r3 = oracle::raw(ideal(ctx, "x^3, y^3"));
  CHECK(oracle::power_member(r3, {2, 1}, 3));
}

TEST_CASE("newton vertices") {
  auto ctx = th::xyz(2);
  auto v = newton_vertices(ideal(ctx, "x^2, x*y, y^2"));
  CHECK(v.size() == 2);
  CHECK(newton_vertices(ideal(ctx, "x^4, x*y^2, y^3")).size() == 3);
}

TEST_CASE("closure laws and certificates on random ideals") {
  std::mt19937_64 eng(99);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + eng() % 2;
    auto ctx = VarContext::standard(n);
    auto I = oracle::random_ideal(eng, ctx);
    const auto rI = oracle::raw(I);
    auto C = integral_closure(I);
    CHECK(is_subset(I, C));
    CHECK(integral_closure(C) == C);
    for (const auto& g : C.monomials()) {
      auto cert = closure_certificate(I, g);
      REQUIRE(cert);
      CHECK(cert->product().divides(Monomial(ctx, g.exponents().pow(static_cast<Exponent>(cert->denominator)))));
      if (cert->denominator <= 6)
        CHECK(oracle::power_member(rI, oracle::tuple_of(g.exponents()), cert->denominator));
    }
    // Integrally closed ideals admit no certificate outside themselves.
    const auto bound = oracle::max_tuple({rI}, n);
    oracle::for_box(bound, [&](const oracle::Tuple& m) {
      const Monomial mm(ctx, oracle::exps_of(m));
      if (C.contains(mm)) return;
      CHECK_FALSE(closure_certificate(I, mm));
      for (std::size_t k = 1; k <= 3; ++k) CHECK_FALSE(oracle::power_member(rI, m, k));
    });
  }
}
