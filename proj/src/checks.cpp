#include "filtra/checks.hpp"

#include <algorithm>

namespace filtra {

namespace {

MonomialIdeal unit_like(const MonomialIdeal& I) { return MonomialIdeal::unit(I.context()); }
PairIdeal unit_like(const PairIdeal& I) { return PairIdeal::unit(I.left.context(), I.right.context()); }

template <class F>
AxiomReport axioms_impl(const F& filtration, std::size_t N) {
  AxiomReport report;
  report.horizon = effective_horizon(filtration, N);
  const std::size_t top = report.horizon;

  const auto I0 = filtration.eval(0);
  if (auto w = find_escape(unit_like(I0), I0)) {
    report.pass = false;
    report.failed = AxiomReport::Axiom::unit;
    report.witness = w;
    return report;
  }
  for (std::size_t n = 0; n < top; ++n)
    if (auto w = find_escape(filtration.eval(n + 1), filtration.eval(n))) {
      report.pass = false;
      report.failed = AxiomReport::Axiom::descending;
      report.n = n;
      report.m = n + 1;
      report.witness = w;
      return report;
    }
  for (std::size_t n = 1; 2 * n <= top; ++n)
    for (std::size_t m = n; n + m <= top; ++m)
      if (auto w = find_escape(mul(filtration.eval(n), filtration.eval(m)), filtration.eval(n + m))) {
        report.pass = false;
        report.failed = AxiomReport::Axiom::multiplicative;
        report.n = n;
        report.m = m;
        report.witness = w;
        return report;
      }
  return report;
}

template <class F>
ColonLowerBoundReport colon_lower_bound_impl(const F& filtration, std::size_t N) {
  ColonLowerBoundReport report;
  report.horizon = effective_horizon(filtration, N);
  for (std::size_t i = 2; i <= report.horizon; ++i)
    for (std::size_t j = 1; j < i; ++j) {
      const auto lower = filtration.eval(i - j);
      const auto quotient = colon(filtration.eval(i), filtration.eval(j));
      if (auto w = find_escape(lower, quotient)) {
        report.pass = false;
        report.equality_everywhere = false;
        report.i = i;
        report.j = j;
        report.witness = w;
        return report;
      }
      if (!(lower == quotient)) report.equality_everywhere = false;
    }
  return report;
}

} // namespace

std::string to_string(Outcome o) {
  switch (o) {
  case Outcome::pass:
    return "pass";
  case Outcome::fail:
    return "fail";
  case Outcome::not_applicable:
    return "na";
  }
  return "?";
}

std::string to_string(AxiomReport::Axiom a) {
  switch (a) {
  case AxiomReport::Axiom::none:
    return "none";
  case AxiomReport::Axiom::unit:
    return "I_0 = R";
  case AxiomReport::Axiom::descending:
    return "I_{n+1} ⊆ I_n";
  case AxiomReport::Axiom::multiplicative:
    return "I_n I_m ⊆ I_{n+m}";
  }
  return "?";
}

std::optional<Witness> find_escape(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (auto m = first_generator_outside(a, b)) return Witness{"", *m};
  return std::nullopt;
}

std::optional<Witness> find_escape(const PairIdeal& a, const PairIdeal& b) {
  if (auto m = first_generator_outside(a.left, b.left)) return Witness{"left", *m};
  if (auto m = first_generator_outside(a.right, b.right)) return Witness{"right", *m};
  return std::nullopt;
}

std::size_t effective_horizon(const Filtration& F, std::size_t N) {
  const auto top = F.max_index();
  return top ? std::min(N, *top) : N;
}

std::size_t effective_horizon(const PairFiltration& F, std::size_t N) {
  const auto top = F.max_index();
  return top ? std::min(N, *top) : N;
}

AxiomReport check_axioms(const Filtration& F, std::size_t N) { return axioms_impl(F, N); }
AxiomReport check_axioms(const PairFiltration& F, std::size_t N) { return axioms_impl(F, N); }

ColonLowerBoundReport colon_lower_bound_check(const Filtration& F, std::size_t N) {
  return colon_lower_bound_impl(F, N);
}
ColonLowerBoundReport colon_lower_bound_check(const PairFiltration& F, std::size_t N) {
  return colon_lower_bound_impl(F, N);
}

} // namespace filtra
