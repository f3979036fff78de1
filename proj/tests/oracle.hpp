#pragma once

// Brute-force reference computations for tests. Everything here works on raw
// exponent tuples and divisibility only; nothing calls into the decomposition,
// colon, intersection or closure code being tested.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "filtra/ring.hpp"

namespace oracle {

using Tuple = std::vector<std::uint32_t>;

inline Tuple tuple_of(const filtra::Exponents& e) {
  Tuple t(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) t[i] = e[i];
  return t;
}

inline filtra::Exponents exps_of(const Tuple& t) {
  filtra::Exponents e(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) e.set(i, t[i]);
  return e;
}

inline bool divides(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Monomial membership from a raw (not necessarily minimal) generator list.
inline bool member(const std::vector<Tuple>& gens, const Tuple& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Tuple& g) { return divides(g, m); });
}

inline std::vector<Tuple> raw(const filtra::MonomialIdeal& I) {
  std::vector<Tuple> out;
  for (const auto& g : I.generators()) out.push_back(tuple_of(g));
  return out;
}

/// Calls f on every tuple with 0 <= t_i <= bound_i.
inline void for_box(const Tuple& bound, const std::function<void(const Tuple&)>& f) {
  Tuple t(bound.size(), 0);
  for (;;) {
    f(t);
    std::size_t i = 0;
    while (i < t.size() && t[i] == bound[i]) t[i++] = 0;
    if (i == t.size()) return;
    ++t[i];
  }
}

inline Tuple max_tuple(const std::vector<std::vector<Tuple>>& families, std::size_t n, std::uint32_t extra = 0) {
  Tuple out(n, 0);
  for (const auto& fam : families)
    for (const auto& g : fam)
      for (std::size_t i = 0; i < n; ++i) out[i] = std::max(out[i], g[i]);
  for (auto& v : out) v += extra;
  return out;
}

/// Minimal elements under divisibility, sorted lexicographically.
inline std::vector<Tuple> minimal_elements(const std::vector<Tuple>& set) {
  std::vector<Tuple> out;
  for (const auto& a : set) {
    bool minimal = true;
    for (const auto& b : set)
      if (b != a && divides(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Generators of the implementation's ideal, sorted lexicographically.
inline std::vector<Tuple> sorted_gens(const filtra::MonomialIdeal& I) {
  auto out = raw(I);
  std::sort(out.begin(), out.end());
  return out;
}

inline Tuple product(const Tuple& a, const Tuple& b) {
  Tuple out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// {m in box : m f in I}
inline std::vector<Tuple> colon_by_monomial(const std::vector<Tuple>& I, const Tuple& f, const Tuple& bound) {
  std::vector<Tuple> out;
  for_box(bound, [&](const Tuple& m) {
    if (member(I, product(m, f))) out.push_back(m);
  });
  return out;
}

/// {m in box : m h in I for every generator h of J}
inline std::vector<Tuple> colon(const std::vector<Tuple>& I, const std::vector<Tuple>& J, const Tuple& bound) {
  std::vector<Tuple> out;
  for_box(bound, [&](const Tuple& m) {
    if (std::all_of(J.begin(), J.end(), [&](const Tuple& h) { return member(I, product(m, h)); })) out.push_back(m);
  });
  return out;
}

inline std::vector<Tuple> intersection(const std::vector<Tuple>& I, const std::vector<Tuple>& J, const Tuple& bound) {
  std::vector<Tuple> out;
  for_box(bound, [&](const Tuple& m) {
    if (member(I, m) && member(J, m)) out.push_back(m);
  });
  return out;
}

/// Variable subsets S with I ⊆ (x_i : i ∈ S): every generator meets S.
inline bool prime_contains(const std::vector<Tuple>& I, std::uint32_t S) {
  for (const auto& g : I) {
    bool meets = false;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] && ((S >> i) & 1u)) meets = true;
    if (!meets) return false;
  }
  return true;
}

/// Inclusion-minimal primes over I by exhaustive subset search.
inline std::set<std::uint32_t> minimal_primes(const std::vector<Tuple>& I, std::size_t n) {
  std::vector<std::uint32_t> over;
  for (std::uint32_t S = 1; S < (1u << n); ++S)
    if (prime_contains(I, S)) over.push_back(S);
  std::set<std::uint32_t> out;
  for (auto S : over) {
    bool minimal = true;
    for (auto T : over)
      if (T != S && (T & S) == T) minimal = false;
    if (minimal) out.insert(S);
  }
  return out;
}

/// (I : f) = P_S: f ∉ I, x_i f ∈ I for i ∈ S, and f times a high power of
/// every variable outside S is still outside I.
inline bool is_witness(const std::vector<Tuple>& I, const Tuple& f, std::uint32_t S, const Tuple& high) {
  if (member(I, f)) return false;
  Tuple up = f;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((S >> i) & 1u) {
      Tuple g = f;
      ++g[i];
      if (!member(I, g)) return false;
    } else {
      up[i] += high[i];
    }
  }
  return !member(I, up);
}

/// Ass(R/I) by searching every f in the box below the max exponents.
inline std::set<std::uint32_t> associated_primes(const std::vector<Tuple>& I, std::size_t n) {
  const Tuple bound = max_tuple({I}, n);
  const Tuple high = max_tuple({I}, n, 1);
  std::set<std::uint32_t> out;
  for_box(bound, [&](const Tuple& f) {
    for (std::uint32_t S = 1; S < (1u << n); ++S)
      if (is_witness(I, f, S, high)) out.insert(S);
  });
  return out;
}

/// Monomials f with exponents below `bound`, (J : f) = P_S, canonical order
/// not imposed (lexicographic).
inline std::vector<Tuple> socle_box(const std::vector<Tuple>& J, std::uint32_t S, std::size_t n) {
  const Tuple bound = max_tuple({J}, n);
  const Tuple high = max_tuple({J}, n, 1);
  std::vector<Tuple> out;
  for_box(bound, [&](const Tuple& f) {
    if (is_witness(J, f, S, high)) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// m^k ∈ I^k, checked by trying every multiset of k generators.
inline bool power_member(const std::vector<Tuple>& I, const Tuple& m, std::size_t k) {
  Tuple target = m;
  for (auto& v : target) v *= static_cast<std::uint32_t>(k);
  std::function<bool(std::size_t, std::size_t, Tuple)> rec = [&](std::size_t start, std::size_t left, Tuple acc) {
    if (left == 0) return divides(acc, target);
    if (!divides(acc, target)) return false;
    for (std::size_t j = start; j < I.size(); ++j)
      if (rec(j, left - 1, product(acc, I[j]))) return true;
    return false;
  };
  return rec(0, k, Tuple(m.size(), 0));
}

/// Random generator list (possibly redundant, never containing 1).
inline std::vector<filtra::Exponents> random_gens(std::mt19937_64& eng, std::size_t n, std::uint32_t max_exp,
                                                  std::size_t max_gens) {
  const std::size_t k = 1 + eng() % max_gens;
  std::vector<filtra::Exponents> out;
  while (out.size() < k) {
    filtra::Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e.set(i, static_cast<std::uint32_t>(eng() % (max_exp + 1)));
    if (!e.is_one()) out.push_back(e);
  }
  return out;
}

inline filtra::MonomialIdeal random_ideal(std::mt19937_64& eng, const filtra::VarContext& ctx, std::uint32_t max_exp = 3,
                                          std::size_t max_gens = 5) {
  return filtra::MonomialIdeal(ctx, random_gens(eng, ctx.size(), max_exp, max_gens));
}

} // namespace oracle
