#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "filtra/decomp.hpp"
#include "filtra/errors.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace filtra;
using th::ideal;
using th::mono;

TEST_CASE("canonical form drops divisible generators") {
  auto ctx = th::xyz(2);
  CHECK(to_string(ideal(ctx, "x^2, x")) == "(x)");
  CHECK(ideal(ctx, "0").is_zero());
  CHECK(MonomialIdeal(ctx, {}).is_zero());
  auto I = ideal(ctx, "x*y, x^2, y^2, x^2*y");
  CHECK(to_string(I) == "(x^2, x*y, y^2)");

  std::vector<oracle::Tuple> raw = {{1, 1}, {2, 0}, {0, 2}, {2, 1}};
  CHECK(oracle::minimal_elements(raw) == oracle::sorted_gens(I));
}

TEST_CASE("graded order puts variable 1 first") {
  auto ctx = th::xyz(3);
  CHECK(to_string(power(ideal(ctx, "x, y"), 2)) == "(x^2, x*y, y^2)");
  CHECK(mono(ctx, "z") < mono(ctx, "x^2"));
  CHECK(mono(ctx, "x*z") < mono(ctx, "y^2"));
}

TEST_CASE("membership") {
  auto ctx = th::xyz(3);
  auto I = ideal(ctx, "x^2, y");
  CHECK(I.contains(mono(ctx, "x^2*z")));
  CHECK_FALSE(I.contains(mono(ctx, "x*z")));
  CHECK(MonomialIdeal::unit(ctx).contains(Monomial::one(ctx)));
  CHECK_FALSE(MonomialIdeal::zero(ctx).contains(Monomial::one(ctx)));
}

TEST_CASE("sum, product and power") {
  auto ctx = th::xyz(3);
  CHECK(mul(ideal(ctx, "x"), ideal(ctx, "y")) == ideal(ctx, "x*y"));
  CHECK(power(ideal(ctx, "x"), 0).is_unit());
  auto tri = ideal(ctx, "x*y, x*z, y*z");
  CHECK(to_string(power(tri, 2)) == "(x^2*y^2, x^2*y*z, x^2*z^2, x*y^2*z, x*y*z^2, y^2*z^2)");

  std::vector<oracle::Tuple> products;
  for (auto g : oracle::raw(tri))
    for (auto h : oracle::raw(tri)) products.push_back(oracle::product(g, h));
  CHECK(oracle::minimal_elements(products) == oracle::sorted_gens(power(tri, 2)));
  CHECK(add(tri, ideal(ctx, "x")) == ideal(ctx, "x, y*z"));
  CHECK(mul(tri, MonomialIdeal::zero(ctx)).is_zero());
  CHECK(add(tri, MonomialIdeal::zero(ctx)) == tri);
}

TEST_CASE("intersection") {
  auto ctx = th::xyz(2);
  CHECK(intersect(ideal(ctx, "x"), ideal(ctx, "y")) == ideal(ctx, "x*y"));
  auto I = intersect(ideal(ctx, "x"), ideal(ctx, "x^2, y"));
  CHECK(to_string(I) == "(x^2, x*y)");
  auto box = oracle::intersection({{1, 0}}, {{2, 0}, {0, 1}}, {3, 3});
  CHECK(oracle::minimal_elements(box) == oracle::sorted_gens(I));
  auto J = ideal(ctx, "x^2, x*y^3");
  CHECK(intersect(J, MonomialIdeal::unit(ctx)) == J);
  CHECK(intersect(J, MonomialIdeal::zero(ctx)).is_zero());
  std::vector<MonomialIdeal> none;
  CHECK_THROWS_AS(intersect(none), DomainError);
}

TEST_CASE("colon") {
  auto ctx = th::xyz(3);
  auto I = ideal(ctx, "x^2*y, z");
  auto C = colon(I, mono(ctx, "x"));
  CHECK(C == ideal(ctx, "x*y, z"));
  CHECK(oracle::minimal_elements(oracle::colon_by_monomial(oracle::raw(I), {1, 0, 0}, {3, 3, 3})) ==
        oracle::sorted_gens(C));
  CHECK(colon(I, I).is_unit());
  CHECK(colon(ideal(ctx, "x^2, x*y"), mono(ctx, "y")) == ideal(ctx, "x"));
  CHECK(colon(I, MonomialIdeal::unit(ctx)) == I);
  CHECK(colon(I, MonomialIdeal::zero(ctx)).is_unit());
  CHECK(colon(MonomialIdeal::zero(ctx), I).is_zero());
}

TEST_CASE("radical") {
  auto ctx = th::xyz(3);
  CHECK(radical(ideal(ctx, "x^2, y^3")) == ideal(ctx, "x, y"));
  auto I = ideal(ctx, "x^2*y, z^4");
  CHECK(radical(I) == ideal(ctx, "x*y, z"));
  auto mins = minimal_primes(I);
  std::vector<MonomialIdeal> primes;
  for (const auto& p : mins) primes.push_back(p.to_ideal());
  CHECK(intersect(primes) == radical(I));
  CHECK(radical(MonomialIdeal::unit(ctx)).is_unit());
}

TEST_CASE("errors") {
  auto a = th::xyz(2);
  auto b = VarContext({"u", "v"});
  CHECK_THROWS_AS(add(ideal(a, "x"), ideal(b, "u")), ContextMismatch);
  CHECK_THROWS_AS(mul(ideal(a, "x"), ideal(b, "u")), ContextMismatch);
  CHECK_THROWS_AS(colon(ideal(a, "x"), ideal(b, "u")), ContextMismatch);
  CHECK_THROWS_AS(ideal(a, "x").contains(mono(b, "u")), ContextMismatch);
  CHECK_THROWS_AS(VarContext({"x", "x"}), DomainError);
  CHECK_THROWS_AS(VarContext({"1x"}), DomainError);
  CHECK_THROWS_AS(VarContext({}), DomainError);
  CHECK_THROWS_AS(VarContext::standard(17), DomainError);
  CHECK_NOTHROW(VarContext::standard(16));

  Exponents big(2);
  big.set(0, std::numeric_limits<Exponent>::max());
  CHECK_THROWS_AS(power(MonomialIdeal(a, {big}), 2), ExponentOverflow);
  CHECK_THROWS_AS(Monomial(a, big) * mono(a, "x"), ExponentOverflow);
}

TEST_CASE("oracle agreement on random instances") {
  std::mt19937_64 eng(7);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + eng() % 2;
    auto ctx = VarContext::standard(n);
    auto I = oracle::random_ideal(eng, ctx);
    auto J = oracle::random_ideal(eng, ctx);
    auto rI = oracle::raw(I), rJ = oracle::raw(J);
    const auto box = oracle::max_tuple({rI, rJ}, n, 1);

    oracle::for_box(box, [&](const oracle::Tuple& m) {
      REQUIRE(I.contains(oracle::exps_of(m)) == oracle::member(rI, m));
    });
    CHECK(oracle::minimal_elements(oracle::intersection(rI, rJ, box)) == oracle::sorted_gens(intersect(I, J)));
    CHECK(oracle::minimal_elements(oracle::colon(rI, rJ, box)) == oracle::sorted_gens(colon(I, J)));
    const oracle::Tuple f = oracle::tuple_of(J.generators().front());
    CHECK(oracle::minimal_elements(oracle::colon_by_monomial(rI, f, box)) ==
          oracle::sorted_gens(colon(I, Monomial(ctx, oracle::exps_of(f)))));
  }
}

TEST_CASE("semiring laws") {
  std::mt19937_64 eng(11);
  for (int round = 0; round < 40; ++round) {
    auto ctx = VarContext::standard(3);
    auto I = oracle::random_ideal(eng, ctx, 2, 3);
    auto J = oracle::random_ideal(eng, ctx, 2, 3);
    auto K = oracle::random_ideal(eng, ctx, 2, 3);
    CHECK(mul(I, add(J, K)) == add(mul(I, J), mul(I, K)));
    CHECK(mul(I, J) == mul(J, I));
    CHECK(mul(mul(I, J), K) == mul(I, mul(J, K)));
    CHECK(add(I, J) == add(J, I));
    CHECK(power(I, 3) == mul(power(I, 1), power(I, 2)));
    CHECK(power(I, 2) == mul(I, I));
  }
}

TEST_CASE("canonical form ignores generator order") {
  std::mt19937_64 eng(3);
  for (int round = 0; round < 50; ++round) {
    auto gens = oracle::random_gens(eng, 4, 3, 6);
    MonomialIdeal first(VarContext::standard(4), gens);
    std::shuffle(gens.begin(), gens.end(), eng);
    MonomialIdeal second(VarContext::standard(4), gens);
    CHECK(first == second);
    CHECK(to_string(first) == to_string(second));
    auto g = first.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (i != j) CHECK_FALSE(g[i].divides(g[j]));
    CHECK(std::is_sorted(g.begin(), g.end()));
  }
}
