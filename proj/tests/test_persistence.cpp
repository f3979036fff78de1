#include <doctest.h>

#include <random>
#include <set>

#include "filtra/corpus.hpp"
#include "filtra/errors.hpp"
#include "filtra/ingest.hpp"
#include "filtra/persistence.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace filtra;
using th::ideal;
using th::mono;

namespace {

std::set<std::uint32_t> masks(const std::vector<MonomialPrime>& ps) {
  std::set<std::uint32_t> out;
  for (const auto& p : ps) out.insert(p.support());
  return out;
}

MonomialPrime prime(const VarContext& ctx, std::string_view vars) { return MonomialPrime::from_ideal(ideal(ctx, vars)); }

Filtration failing_table(const VarContext& ctx) { return engineered_failing_table(ideal(ctx, "x, y")); }

} // namespace

TEST_CASE("ass sequences") {
  auto ctx = th::xyz(2);
  auto m = Filtration::powers(ideal(ctx, "x, y"));
  auto seq = ass_sequence(m, 3);
  REQUIRE(seq.size() == 3);
  for (const auto& s : seq) CHECK(masks(s) == std::set<std::uint32_t>{0b11});

  auto I = ideal(ctx, "x^2, x*y");
  auto s2 = ass_sequence(Filtration::powers(I), 2);
  CHECK(masks(s2[0]) == std::set<std::uint32_t>{0b01, 0b11});
  CHECK(masks(s2[1]) == oracle::associated_primes(oracle::raw(power(I, 2)), 2));

  auto c3 = th::xyz(3);
  auto tri = ass_sequence(Filtration::powers(ideal(c3, "x*y, x*z, y*z")), 3);
  CHECK(masks(tri[0]) == std::set<std::uint32_t>{0b011, 0b101, 0b110});
  CHECK(masks(tri[1]).count(0b111) == 1);
  CHECK(masks(tri[2]).count(0b111) == 1);
  for (std::size_t t = 0; t < 3; ++t)
    CHECK(masks(tri[t]) == oracle::associated_primes(oracle::raw(power(ideal(c3, "x*y, x*z, y*z"), t + 1)), 3));

  auto T = Filtration::table({MonomialIdeal::unit(ctx), ideal(ctx, "x"), MonomialIdeal::unit(ctx)});
  CHECK_THROWS_AS(ass_sequence(T, 2), DomainError);
}

TEST_CASE("persistence") {
  auto ctx = th::xyz(2);
  CHECK(is_persistent(Filtration::powers(ideal(ctx, "x")), 4).holds);
  auto T = Filtration::table({MonomialIdeal::unit(ctx), ideal(ctx, "x, y"), ideal(ctx, "x^2, y^2"), ideal(ctx, "x^3, y^3")});
  auto r = is_persistent(T, 4);
  CHECK(r.holds);
  CHECK(r.horizon == 3);
  for (const auto& s : r.ass_sets) CHECK(masks(s) == std::set<std::uint32_t>{0b11});

  // (x^2, x*y) loses the prime (x) when the next entry is (x^2): Ass drops (x,y).
  auto drop = Filtration::table({MonomialIdeal::unit(ctx), ideal(ctx, "x^2, x*y"), ideal(ctx, "x^2")});
  auto d = is_persistent(drop, 2);
  CHECK_FALSE(d.holds);
  REQUIRE(d.violation);
  CHECK(d.violation->index == 1);
  CHECK(d.violation->prime == prime(ctx, "x, y"));
}

TEST_CASE("edge ideals of small graphs are persistent") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& G : connected_graphs_up_to_isomorphism(n)) {
      auto F = Filtration::powers(edge_ideal(G));
      CHECK(is_persistent(F, 4).holds);
      if (G.is_bipartite()) CHECK(is_strongly_persistent(F, 3).holds);
    }
}

TEST_CASE("strong persistence") {
  auto ctx = th::xyz(2);
  CHECK(is_strongly_persistent(Filtration::powers(ideal(ctx, "x, y")), 4).holds);
  auto T = failing_table(ctx);
  CHECK(check_axioms(T, 3).pass);
  auto r = is_strongly_persistent(T, 4);
  CHECK_FALSE(r.holds);
  REQUIRE(r.violation);
  CHECK(r.violation->index == 2);
  CHECK(r.violation->colon_larger);
  const auto& w = r.violation->witness.monomial;
  CHECK(w == mono(ctx, "x"));
  CHECK(colon(T.eval(3), T.eval(1)).contains(w));
  CHECK_FALSE(T.eval(2).contains(w));
}

TEST_CASE("colon decrement") {
  auto ctx = th::xyz(3);
  auto m = colon_decrement_check(Filtration::powers(ideal(ctx, "x, y")), 4);
  CHECK(m.step_equalities);
  CHECK(m.all_pairs);
  CHECK(m.consistent());
  auto s = colon_decrement_check(Filtration::symbolic(ideal(ctx, "x*y, x*z, y*z")), 4);
  CHECK(s.step_equalities);
  CHECK(s.all_pairs);
  auto f = colon_decrement_check(failing_table(th::xyz(2)), 4);
  CHECK_FALSE(f.step_equalities);
  CHECK_FALSE(f.all_pairs);
  CHECK(f.consistent());
  CHECK(f.first_step_failure == 2);
  auto bad = colon_decrement_check(Filtration::table({MonomialIdeal::unit(ctx), ideal(ctx, "x"), ideal(ctx, "x^3")}), 4);
  CHECK(bad.outcome == Outcome::not_applicable);
}

TEST_CASE("symbolic colon theorem") {
  auto ctx = th::xyz(2);
  auto skip = symbolic_colon_theorem_check(ideal(ctx, "x^2, x*y"), ideal(ctx, "x"));
  CHECK(skip.outcome == Outcome::not_applicable);
  auto I = ideal(ctx, "x*y");
  CHECK(symbolic_colon_theorem_check(I, I).outcome == Outcome::not_applicable);

  std::mt19937_64 eng(31);
  std::size_t applicable = 0;
  for (int round = 0; round < 300; ++round) {
    auto c = VarContext::standard(2 + eng() % 2);
    auto A = oracle::random_ideal(eng, c);
    auto B = oracle::random_ideal(eng, c);
    for (const auto& [X, Y] : {std::pair{power(A, 2), A}, std::pair{mul(A, B), B}, std::pair{A, B}}) {
      auto r = symbolic_colon_theorem_check(X, Y);
      CHECK(r.outcome != Outcome::fail);
      if (r.outcome == Outcome::pass) {
        ++applicable;
        CHECK(*r.lhs == *r.rhs);
        CHECK(*r.rhs == first_symbolic(colon(X, Y)));
        CHECK(*r.lhs == colon(first_symbolic(X), first_symbolic(Y)));
      }
    }
  }
  CHECK(applicable >= 100);
}

TEST_CASE("implications") {
  auto ctx = th::xyz(2);
  auto m = Filtration::powers(ideal(ctx, "x, y"));
  auto a = spp_implies_sspp_check(m, 4);
  CHECK(a.outcome == Outcome::pass);
  CHECK(a.premise);
  CHECK(a.conclusion);
  CHECK(spp_implies_pp_check(m, 4).outcome == Outcome::pass);
  auto v = spp_implies_sspp_check(failing_table(ctx), 4);
  CHECK(v.outcome == Outcome::not_applicable);
  CHECK_FALSE(v.premise);
  CHECK(spp_implies_pp_check(failing_table(ctx), 4).outcome == Outcome::not_applicable);
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& G : connected_graphs_up_to_isomorphism(n))
      if (G.is_bipartite()) {
        auto F = Filtration::powers(edge_ideal(G));
        CHECK(spp_implies_sspp_check(F, 3).outcome == Outcome::pass);
        CHECK(spp_implies_pp_check(F, 3).outcome == Outcome::pass);
      }
}

TEST_CASE("ratliff witnesses") {
  auto ctx = th::xyz(2);
  auto m = Filtration::powers(ideal(ctx, "x, y"));
  auto r = ratliff_witness_check(m, 2, prime(ctx, "x, y"));
  CHECK(r.colon_equality);
  // Socle of R/(x,y)^2 is spanned by x and y.
  REQUIRE(r.probes.size() == 2);
  CHECK(r.probes[0].f == mono(ctx, "x"));
  CHECK(r.probes[1].f == mono(ctx, "y"));
  CHECK(r.every_f_has_g());
  CHECK(r.consistent());
  CHECK_THROWS_AS(ratliff_witness_check(m, 2, prime(ctx, "x")), DomainError);

  auto T = failing_table(ctx);
  auto s = ratliff_check_all(T, 2);
  CHECK_FALSE(s.colon_equality);
  CHECK_FALSE(s.all_witnessed);
  CHECK(s.consistent());
  bool missing = false;
  for (const auto& p : s.per_prime)
    for (const auto& probe : p.probes) missing = missing || !probe.g;
  CHECK(missing);
  for (std::size_t k = 1; k <= 3; ++k) CHECK(ratliff_check_all(m, k).consistent());
}

TEST_CASE("stability index") {
  auto ctx = th::xyz(3);
  CHECK(stability_index(Filtration::powers(ideal(ctx, "x, y")), 4) == 1);
  auto t = stability_index(Filtration::powers(ideal(ctx, "x*y, x*z, y*z")), 4);
  REQUIRE(t);
  CHECK(*t == 2);
  CHECK_FALSE(stability_index(Filtration::powers(ideal(ctx, "x, y")), 1));
}

TEST_CASE("direct sums") {
  auto L = th::xyz(2);
  VarContext R({"u", "v"});
  auto F = Filtration::powers(ideal(L, "x, y"));
  auto G = Filtration::powers(ideal(R, "u, v"));
  auto ok = direct_sum_spp_check(F, G, 4);
  CHECK(ok.left);
  CHECK(ok.right);
  CHECK(ok.pair);
  CHECK(ok.consistent());
  auto bad = engineered_failing_table(ideal(R, "u, v"));
  auto mixed = direct_sum_spp_check(F, bad, 4);
  CHECK(mixed.left);
  CHECK_FALSE(mixed.right);
  CHECK_FALSE(mixed.pair);
  REQUIRE(mixed.pair_violation);
  CHECK(mixed.pair_violation->index == 2);
  CHECK(mixed.pair_violation->witness.side == "right");
  auto both = direct_sum_spp_check(engineered_failing_table(ideal(L, "x, y")), bad, 4);
  CHECK_FALSE(both.pair);
  CHECK(both.consistent());
}

TEST_CASE("persistence report") {
  auto ctx = th::xyz(2);
  auto r = persistence_report(failing_table(ctx), 4);
  CHECK(r.horizon == 3);
  CHECK(r.ass_sets.size() == 3);
  CHECK_FALSE(r.strongly_persistent());
}
