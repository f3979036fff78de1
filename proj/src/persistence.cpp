#include "filtra/persistence.hpp"

#include <algorithm>

#include "filtra/errors.hpp"

namespace filtra {

namespace {

template <class F>
StrongPersistenceCheck strong_impl(const F& filtration, std::size_t N) {
  StrongPersistenceCheck out;
  out.horizon = effective_horizon(filtration, N);
  if (out.horizon == 0) return out;
  const auto first = filtration.eval(1);
  for (std::size_t i = 0; i < out.horizon; ++i) {
    const auto quotient = colon(filtration.eval(i + 1), first);
    const auto current = filtration.eval(i);
    if (quotient == current) continue;
    out.holds = false;
    if (auto w = find_escape(quotient, current))
      out.violation = ColonFailure{i, true, *w};
    else
      out.violation = ColonFailure{i, false, *find_escape(current, quotient)};
    break;
  }
  return out;
}

bool proper_on_window(const Filtration& F, std::size_t N) {
  for (std::size_t i = 1; i <= N; ++i)
    if (!F.eval(i).is_proper_nonzero()) return false;
  return true;
}

bool contains_prime(const std::vector<MonomialPrime>& set, const MonomialPrime& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

} // namespace

AssSequence ass_sequence(const Filtration& F, std::size_t N) {
  const std::size_t top = effective_horizon(F, N);
  AssSequence out;
  for (std::size_t i = 1; i <= top; ++i) {
    const auto I = F.eval(i);
    if (!I.is_proper_nonzero())
      throw DomainError(F.describe() + ": I_" + std::to_string(i) + " = " + to_string(I) +
                        " has no associated primes");
    out.push_back(associated_primes(I));
  }
  return out;
}

PersistenceCheck is_persistent(const Filtration& F, std::size_t N) {
  PersistenceCheck out;
  out.horizon = effective_horizon(F, N);
  out.ass_sets = ass_sequence(F, N);
  for (std::size_t i = 0; i + 1 < out.ass_sets.size() && out.holds; ++i)
    for (const auto& p : out.ass_sets[i])
      if (!contains_prime(out.ass_sets[i + 1], p)) {
        out.holds = false;
        out.violation = LostPrime{i + 1, p};
        break;
      }
  return out;
}

StrongPersistenceCheck is_strongly_persistent(const Filtration& F, std::size_t N) { return strong_impl(F, N); }
StrongPersistenceCheck is_strongly_persistent(const PairFiltration& F, std::size_t N) { return strong_impl(F, N); }

PersistenceReport persistence_report(const Filtration& F, std::size_t N) {
  PersistenceReport report;
  report.filtration = F.describe();
  report.horizon = effective_horizon(F, N);
  if (report.horizon < N)
    report.notes.push_back("horizon clamped from " + std::to_string(N) + " to the last table index " +
                           std::to_string(report.horizon));
  const auto pp = is_persistent(F, N);
  report.ass_sets = pp.ass_sets;
  report.persistence_violation = pp.violation;
  report.strong_violation = is_strongly_persistent(F, N).violation;
  report.notes.push_back("the i = 0 step of strong persistence is (I_1 : I_1) = R");
  return report;
}

std::optional<std::size_t> stability_index(const AssSequence& ass) {
  const std::size_t N = ass.size();
  if (N < 2 || ass[N - 1] != ass[N - 2]) return std::nullopt;
  std::size_t t = N - 1; // 1-based index of ass[N - 2]
  while (t > 1 && ass[t - 2] == ass[N - 1]) --t;
  return t;
}

std::optional<std::size_t> stability_index(const Filtration& F, std::size_t N) {
  return stability_index(ass_sequence(F, N));
}

ColonDecrementReport colon_decrement_check(const Filtration& F, std::size_t N) {
  ColonDecrementReport out;
  out.horizon = effective_horizon(F, N);
  if (!check_axioms(F, out.horizon).pass) {
    out.outcome = Outcome::not_applicable;
    return out;
  }
  const auto first = F.eval(1);
  for (std::size_t k = 1; k < out.horizon; ++k)
    if (!(colon(F.eval(k + 1), first) == F.eval(k))) {
      out.step_equalities = false;
      out.first_step_failure = k;
      break;
    }
  for (std::size_t i = 1; i <= out.horizon && out.all_pairs; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      if (!(colon(F.eval(i), F.eval(j)) == F.eval(i - j))) {
        out.all_pairs = false;
        out.first_pair_failure = std::pair{i, j};
        break;
      }
  out.outcome = out.consistent() ? Outcome::pass : Outcome::fail;
  return out;
}

SymbolicColonReport symbolic_colon_theorem_check(const MonomialIdeal& I, const MonomialIdeal& J) {
  SymbolicColonReport out;
  if (!I.is_proper_nonzero() || !J.is_proper_nonzero()) {
    out.reason = "I or J is zero or the unit ideal";
    return out;
  }
  const MonomialIdeal L = colon(I, J);
  out.colon = L;
  if (!L.is_proper_nonzero()) {
    out.reason = "(I : J) is the unit ideal";
    return out;
  }
  const auto min_i = minimal_primes(I);
  if (minimal_primes(J) != min_i || minimal_primes(L) != min_i) {
    out.reason = "Min(I), Min(J), Min(I : J) differ";
    return out;
  }
  out.lhs = colon(first_symbolic(I), first_symbolic(J));
  out.rhs = first_symbolic(L);
  out.outcome = *out.lhs == *out.rhs ? Outcome::pass : Outcome::fail;
  return out;
}

ImplicationReport spp_implies_sspp_check(const Filtration& F, std::size_t N) {
  ImplicationReport out;
  const std::size_t top = effective_horizon(F, N);
  if (!check_axioms(F, top).pass) {
    out.detail = "not a filtration on the window";
    return out;
  }
  out.premise = is_strongly_persistent(F, top).holds;
  if (!out.premise) {
    out.detail = "premise false";
    return out;
  }
  const auto sym = is_strongly_persistent(Filtration::symbolic_of(F), top);
  out.conclusion = sym.holds;
  out.outcome = out.conclusion ? Outcome::pass : Outcome::fail;
  if (sym.violation)
    out.detail = "symbolic filtration fails at i = " + std::to_string(sym.violation->index) + ", witness " +
                 to_string(sym.violation->witness.monomial);
  return out;
}

ImplicationReport spp_implies_pp_check(const Filtration& F, std::size_t N) {
  ImplicationReport out;
  const std::size_t top = effective_horizon(F, N);
  if (!check_axioms(F, top).pass) {
    out.detail = "not a filtration on the window";
    return out;
  }
  if (!proper_on_window(F, top)) {
    out.detail = "some I_i is zero or the unit ideal";
    return out;
  }
  out.premise = is_strongly_persistent(F, top).holds;
  if (!out.premise) {
    out.detail = "premise false";
    return out;
  }
  const auto pp = is_persistent(F, top);
  out.conclusion = pp.holds;
  out.outcome = out.conclusion ? Outcome::pass : Outcome::fail;
  if (pp.violation)
    out.detail = "lost " + to_string(pp.violation->prime) + " after index " + std::to_string(pp.violation->index);
  return out;
}

bool RatliffReport::every_f_has_g() const noexcept {
  return std::all_of(probes.begin(), probes.end(), [](const SocleProbe& s) { return s.g.has_value(); });
}

RatliffReport ratliff_witness_check(const Filtration& F, std::size_t k, const MonomialPrime& p) {
  if (k == 0) throw DomainError("ratliff_witness_check: k must be at least 1");
  const auto Ik = F.eval(k);
  if (!Ik.is_proper_nonzero() || !contains_prime(associated_primes(Ik), p))
    throw DomainError(to_string(p) + " is not an associated prime of I_" + std::to_string(k) + " = " + to_string(Ik));
  const auto I1 = F.eval(1);
  const auto Inext = F.eval(k + 1);
  const auto A1 = localize_contract(I1, p);
  const auto Anext = localize_contract(Inext, p);

  RatliffReport out{k, p, {}, colon(Inext, I1) == Ik};
  for (const auto& f : socle_witnesses(Ik, p)) {
    SocleProbe probe{f, std::nullopt};
    for (const auto& g : A1.generators())
      if (!Anext.contains(f.exponents() * g)) {
        probe.g = Monomial(I1.context(), g);
        break;
      }
    out.probes.push_back(std::move(probe));
  }
  return out;
}

RatliffSummary ratliff_check_all(const Filtration& F, std::size_t k) {
  RatliffSummary out;
  out.k = k;
  if (k == 0 || effective_horizon(F, k + 1) < k + 1 || !check_axioms(F, k + 1).pass ||
      !F.eval(k).is_proper_nonzero()) {
    out.outcome = Outcome::not_applicable;
    return out;
  }
  out.colon_equality = colon(F.eval(k + 1), F.eval(1)) == F.eval(k);
  for (const auto& p : associated_primes(F.eval(k))) {
    out.per_prime.push_back(ratliff_witness_check(F, k, p));
    if (!out.per_prime.back().every_f_has_g()) out.all_witnessed = false;
  }
  out.outcome = out.consistent() ? Outcome::pass : Outcome::fail;
  return out;
}

DirectSumReport direct_sum_spp_check(const Filtration& F, const Filtration& G, std::size_t N) {
  DirectSumReport out;
  const PairFiltration pair(F, G);
  const std::size_t top = effective_horizon(pair, N);
  if (!check_axioms(F, top).pass || !check_axioms(G, top).pass) {
    out.outcome = Outcome::not_applicable;
    return out;
  }
  out.left = is_strongly_persistent(F, top).holds;
  out.right = is_strongly_persistent(G, top).holds;
  const auto whole = is_strongly_persistent(pair, top);
  out.pair = whole.holds;
  out.pair_violation = whole.violation;
  out.outcome = out.consistent() ? Outcome::pass : Outcome::fail;
  return out;
}

} // namespace filtra
