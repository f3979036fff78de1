#pragma once

// Persistence predicates and theorem-instance checkers over a finite
// window 0..N of a filtration. Checkers never repair a discrepancy: a
// mismatch between the two sides of an equivalence is reported as a
// violation, which can only mean an implementation bug.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "filtra/checks.hpp"
#include "filtra/decomp.hpp"
#include "filtra/filtration.hpp"
#include "filtra/pair.hpp"

namespace filtra {

inline constexpr std::size_t kDefaultHorizon = 4;

using AssSequence = std::vector<std::vector<MonomialPrime>>;

/// [Ass(R/I_1), ..., Ass(R/I_N)]; throws DomainError naming the first index
/// whose ideal is zero or the unit ideal.
AssSequence ass_sequence(const Filtration& F, std::size_t N);

/// A prime of Ass(R/I_i) missing from Ass(R/I_{i+1}).
struct LostPrime {
  std::size_t index;
  MonomialPrime prime;
};

struct PersistenceCheck {
  bool holds = true;
  std::size_t horizon = 0;
  AssSequence ass_sets;
  std::optional<LostPrime> violation;
};

/// Ass(R/I_i) ⊆ Ass(R/I_{i+1}) for 1 <= i < N.
PersistenceCheck is_persistent(const Filtration& F, std::size_t N);

/// (I_{i+1} : I_1) differs from I_i. When the colon is larger the witness
/// lies in it and outside I_i; otherwise it lies in I_i outside the colon.
struct ColonFailure {
  std::size_t index;
  bool colon_larger;
  Witness witness;
};

struct StrongPersistenceCheck {
  bool holds = true;
  std::size_t horizon = 0;
  std::optional<ColonFailure> violation;
};

/// (I_{i+1} : I_1) = I_i for 0 <= i < N; i = 0 reads (I_1 : I_1) = R.
StrongPersistenceCheck is_strongly_persistent(const Filtration& F, std::size_t N);
StrongPersistenceCheck is_strongly_persistent(const PairFiltration& F, std::size_t N);

struct PersistenceReport {
  std::string filtration;
  std::size_t horizon = 0;
  AssSequence ass_sets;
  std::optional<LostPrime> persistence_violation;
  std::optional<ColonFailure> strong_violation;
  std::vector<std::string> notes;

  bool persistent() const noexcept { return !persistence_violation; }
  bool strongly_persistent() const noexcept { return !strong_violation; }
};

PersistenceReport persistence_report(const Filtration& F, std::size_t N);

/// Smallest t0 with Ass(R/I_t) constant for t0 <= t <= N, provided the
/// plateau has length at least 2. This only observes the window; it says
/// nothing about t > N.
std::optional<std::size_t> stability_index(const AssSequence& ass);
std::optional<std::size_t> stability_index(const Filtration& F, std::size_t N);

struct ColonDecrementReport {
  Outcome outcome = Outcome::pass;
  std::size_t horizon = 0;
  /// (I_{k+1} : I_1) = I_k for 1 <= k < N
  bool step_equalities = true;
  /// (I_i : I_j) = I_{i-j} for 1 <= j <= i <= N
  bool all_pairs = true;
  std::optional<std::size_t> first_step_failure;
  std::optional<std::pair<std::size_t, std::size_t>> first_pair_failure;
  /// step_equalities == all_pairs
  bool consistent() const noexcept { return step_equalities == all_pairs; }
};

/// Not applicable unless F passes check_axioms on the window.
ColonDecrementReport colon_decrement_check(const Filtration& F, std::size_t N);

struct SymbolicColonReport {
  Outcome outcome = Outcome::not_applicable;
  std::string reason;
  std::optional<MonomialIdeal> colon;   // L = (I : J)
  std::optional<MonomialIdeal> lhs;     // (I^(1) : J^(1))
  std::optional<MonomialIdeal> rhs;     // L^(1)
};

/// For L = (I : J) with Min(I) = Min(J) = Min(L): (I^(1) : J^(1)) = L^(1).
/// Instances outside the hypothesis are not applicable.
SymbolicColonReport symbolic_colon_theorem_check(const MonomialIdeal& I, const MonomialIdeal& J);

struct ImplicationReport {
  Outcome outcome = Outcome::not_applicable;
  bool premise = false;
  bool conclusion = false;
  std::string detail;
};

/// F strongly persistent on the window ⟹ symbolic_of(F) strongly persistent.
ImplicationReport spp_implies_sspp_check(const Filtration& F, std::size_t N);
/// F strongly persistent on the window ⟹ F persistent.
ImplicationReport spp_implies_pp_check(const Filtration& F, std::size_t N);

struct SocleProbe {
  Monomial f;
  /// A generator g of the localized I_1 with f g outside the localized I_{k+1}.
  std::optional<Monomial> g;
};

struct RatliffReport {
  std::size_t k = 0;
  MonomialPrime prime;
  std::vector<SocleProbe> probes;
  bool colon_equality = false;  // (I_{k+1} : I_1) = I_k
  bool every_f_has_g() const noexcept;
  /// Equality forces every f to have a g.
  bool consistent() const noexcept { return !colon_equality || every_f_has_g(); }
};

/// Throws DomainError if p ∉ Ass(R/I_k).
RatliffReport ratliff_witness_check(const Filtration& F, std::size_t k, const MonomialPrime& p);

struct RatliffSummary {
  Outcome outcome = Outcome::pass;
  std::size_t k = 0;
  bool colon_equality = false;
  bool all_witnessed = true;
  std::vector<RatliffReport> per_prime;
  /// colon_equality == all_witnessed, over every p ∈ Ass(R/I_k)
  bool consistent() const noexcept { return colon_equality == all_witnessed; }
};

/// Both directions at index k over all of Ass(R/I_k). Not applicable when
/// F fails the axioms up to k + 1.
RatliffSummary ratliff_check_all(const Filtration& F, std::size_t k);

struct DirectSumReport {
  Outcome outcome = Outcome::pass;
  bool left = false;
  bool right = false;
  bool pair = false;
  std::optional<ColonFailure> pair_violation;
  bool consistent() const noexcept { return pair == (left && right); }
};

/// pair(F, G) strongly persistent ⟺ F and G both are.
DirectSumReport direct_sum_spp_check(const Filtration& F, const Filtration& G, std::size_t N);

} // namespace filtra
