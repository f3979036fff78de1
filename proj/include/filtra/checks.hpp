#pragma once

// Filtration axiom checks. Failures are reported with a replayable witness
// monomial, never thrown.

#include <cstddef>
#include <optional>
#include <string>

#include "filtra/filtration.hpp"
#include "filtra/pair.hpp"
#include "filtra/ring.hpp"

namespace filtra {

enum class Outcome { pass, fail, not_applicable };

std::string to_string(Outcome o);

/// A monomial showing that some containment A ⊆ B fails: it is a generator
/// of A outside B. `side` is "left"/"right" for direct sums, empty otherwise.
struct Witness {
  std::string side;
  Monomial monomial;
};

/// First generator of a outside b.
std::optional<Witness> find_escape(const MonomialIdeal& a, const MonomialIdeal& b);
/// Left component first, then right.
std::optional<Witness> find_escape(const PairIdeal& a, const PairIdeal& b);

struct AxiomReport {
  enum class Axiom { none, unit, descending, multiplicative };

  std::size_t horizon = 0;
  bool pass = true;
  Axiom failed = Axiom::none;
  /// unit: n = 0; descending: I_{n+1} ⊄ I_n; multiplicative: I_n I_m ⊄ I_{n+m}
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<Witness> witness;
};

std::string to_string(AxiomReport::Axiom a);

/// Checks I_0 = R, I_{n+1} ⊆ I_n for n < N and I_n I_m ⊆ I_{n+m} for
/// 1 <= n <= m, n + m <= N. N is clamped to the last index of finite
/// filtrations.
AxiomReport check_axioms(const Filtration& F, std::size_t N);
AxiomReport check_axioms(const PairFiltration& F, std::size_t N);

struct ColonLowerBoundReport {
  std::size_t horizon = 0;
  bool pass = true;
  /// I_{i-j} = (I_i : I_j) at every checked pair.
  bool equality_everywhere = true;
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<Witness> witness;
};

/// I_{i-j} ⊆ (I_i : I_j) for 1 <= j < i <= N.
ColonLowerBoundReport colon_lower_bound_check(const Filtration& F, std::size_t N);
ColonLowerBoundReport colon_lower_bound_check(const PairFiltration& F, std::size_t N);

/// min(N, F.max_index())
std::size_t effective_horizon(const Filtration& F, std::size_t N);
std::size_t effective_horizon(const PairFiltration& F, std::size_t N);

} // namespace filtra
