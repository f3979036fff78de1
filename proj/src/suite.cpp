#include "filtra/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "filtra/checks.hpp"
#include "filtra/decomp.hpp"
#include "filtra/errors.hpp"
#include "filtra/pair.hpp"
#include "filtra/persistence.hpp"

namespace filtra {

namespace {

enum Check : std::size_t {
  filtration_axioms,
  pair_axioms,
  pro_min,
  symbolic_filtration_axioms,
  colon_lower_bound,
  colon_decrement_equivalence,
  symbolic_colon_theorem,
  spp_implies_sspp,
  spp_implies_pp,
  ratliff_witness,
  direct_sum_spp,
  decomposition_soundness,
  symbolic_routes,
  witness_reverification,
  edge_ideal_persistence,
  check_count
};

struct Record {
  std::size_t check;
  Outcome outcome;
  std::string detail;
};

struct Named {
  std::string name;
  Filtration F;
};

class Instance {
public:
  Instance(const CorpusEntry& entry, std::uint64_t seed, std::size_t index, std::size_t N)
      : entry_(entry), engine_(seed ^ (0x9E3779B97F4A7C15ull * (index + 1))), N_(N) {}

  std::vector<Record> run() {
    const MonomialIdeal& I = entry_.ideal;
    const VarContext& ctx = I.context();
    std::vector<Named> fams{{"powers", Filtration::powers(I)},
                            {"symbolic", Filtration::symbolic(I)},
                            {"closure", Filtration::closure(I)},
                            {"irrelevant", Filtration::irrelevant(ctx)},
                            {"symbolic_of(powers)", Filtration::symbolic_of(Filtration::powers(I))},
                            {"failing_table", engineered_failing_table(I)}};

    for (const auto& f : fams) {
      guard(filtration_axioms, f.name, [&] { axioms(f); });
      guard(pro_min, f.name, [&] { minimal_primes_stable(f); });
      guard(symbolic_filtration_axioms, f.name, [&] { symbolic_axioms(f); });
      guard(colon_lower_bound, f.name, [&] { lower_bound(f); });
      guard(colon_decrement_equivalence, f.name, [&] { colon_decrement(f); });
      guard(spp_implies_sspp, f.name, [&] { implication(spp_implies_sspp, f, spp_implies_sspp_check(f.F, N_)); });
      guard(spp_implies_pp, f.name, [&] { implication(spp_implies_pp, f, spp_implies_pp_check(f.F, N_)); });
      guard(ratliff_witness, f.name, [&] { ratliff(f); });
      guard(witness_reverification, f.name, [&] { reverify(f); });
    }

    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 3}, {0, 5}, {5, 2}, {1, 4}, {5, 5}};
    for (auto [a, b] : pairs) {
      const std::string label = "pair(" + fams[a].name + ", " + fams[b].name + ")";
      guard(pair_axioms, label, [&] { pair_axiom_split(fams[a].F, fams[b].F, label); });
      guard(direct_sum_spp, label, [&] { direct_sum(fams[a].F, fams[b].F, label); });
    }

    guard(symbolic_colon_theorem, "", [&] { symbolic_colon(I); });
    guard(decomposition_soundness, "", [&] { decomposition(I); });
    guard(symbolic_routes, "", [&] { routes(I); });
    guard(edge_ideal_persistence, "", [&] { edge_expectation(I); });
    return std::move(records_);
  }

private:
  const CorpusEntry& entry_;
  std::mt19937_64 engine_;
  std::size_t N_;
  std::vector<Record> records_;

  std::string where(const std::string& label) const {
    std::string out = entry_.descriptor + " " + to_string(entry_.ideal);
    if (!label.empty()) out += " " + label;
    return out;
  }

  void record(std::size_t check, Outcome o, const std::string& label = {}, const std::string& detail = {}) {
    records_.push_back({check, o, o == Outcome::fail ? where(label) + ": " + detail : std::string{}});
  }

  void guard(std::size_t check, const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(check, Outcome::fail, label, std::string("exception: ") + e.what());
    }
  }

  static std::string witness_text(const std::optional<Witness>& w) {
    if (!w) return "none";
    return (w->side.empty() ? "" : w->side + " ") + to_string(w->monomial);
  }

  void axioms(const Named& f) {
    const auto r = check_axioms(f.F, N_);
    if (r.pass) return record(filtration_axioms, Outcome::pass);
    record(filtration_axioms, Outcome::fail, f.name,
           to_string(r.failed) + " at (" + std::to_string(r.n) + ", " + std::to_string(r.m) + "), witness " +
               witness_text(r.witness));
  }

  void minimal_primes_stable(const Named& f) {
    const std::size_t h = effective_horizon(f.F, N_);
    if (!check_axioms(f.F, h).pass || h == 0) return record(pro_min, Outcome::not_applicable);
    const auto first = minimal_primes(f.F.eval(1));
    for (std::size_t i = 2; i <= h; ++i)
      if (minimal_primes(f.F.eval(i)) != first)
        return record(pro_min, Outcome::fail, f.name, "Min(I_" + std::to_string(i) + ") differs from Min(I_1)");
    record(pro_min, Outcome::pass);
  }

  void symbolic_axioms(const Named& f) {
    if (!check_axioms(f.F, N_).pass) return record(symbolic_filtration_axioms, Outcome::not_applicable);
    const auto r = check_axioms(Filtration::symbolic_of(f.F), N_);
    if (r.pass) return record(symbolic_filtration_axioms, Outcome::pass);
    record(symbolic_filtration_axioms, Outcome::fail, f.name,
           "symbolic_of fails " + to_string(r.failed) + " at (" + std::to_string(r.n) + ", " + std::to_string(r.m) +
               "), witness " + witness_text(r.witness));
  }

  void lower_bound(const Named& f) {
    if (!check_axioms(f.F, N_).pass) return record(colon_lower_bound, Outcome::not_applicable);
    const auto r = colon_lower_bound_check(f.F, N_);
    if (r.pass) return record(colon_lower_bound, Outcome::pass);
    record(colon_lower_bound, Outcome::fail, f.name,
           "I_{i-j} not in (I_i : I_j) at (" + std::to_string(r.i) + ", " + std::to_string(r.j) + "), witness " +
               witness_text(r.witness));
  }

  void colon_decrement(const Named& f) {
    const auto r = colon_decrement_check(f.F, N_);
    if (r.outcome != Outcome::fail) return record(colon_decrement_equivalence, r.outcome);
    record(colon_decrement_equivalence, Outcome::fail, f.name,
           std::string("step equalities ") + (r.step_equalities ? "hold" : "fail") + " but all-pairs equalities " +
               (r.all_pairs ? "hold" : "fail"));
  }

  void implication(std::size_t check, const Named& f, const ImplicationReport& r) {
    record(check, r.outcome, f.name, r.detail);
  }

  void ratliff(const Named& f) {
    const std::size_t top = std::min<std::size_t>(3, effective_horizon(f.F, N_) - 1);
    for (std::size_t k = 1; k <= top; ++k) {
      const auto r = ratliff_check_all(f.F, k);
      if (r.outcome != Outcome::fail) {
        record(ratliff_witness, r.outcome);
        continue;
      }
      record(ratliff_witness, Outcome::fail, f.name,
             "k = " + std::to_string(k) + ": colon equality " + (r.colon_equality ? "holds" : "fails") +
                 " but every socle witness " + (r.all_witnessed ? "has" : "does not have") + " a partner g");
    }
  }

  void reverify(const Named& f) {
    bool checked = false;
    const std::size_t h = effective_horizon(f.F, N_);
    if (check_axioms(f.F, h).pass) {
      const auto sp = is_strongly_persistent(f.F, h);
      if (sp.violation) {
        checked = true;
        const auto& v = *sp.violation;
        const auto colon_ideal = colon(f.F.eval(v.index + 1), f.F.eval(1));
        const auto& I_i = f.F.eval(v.index);
        const bool ok = v.colon_larger ? colon_ideal.contains(v.witness.monomial) && !I_i.contains(v.witness.monomial)
                                       : I_i.contains(v.witness.monomial) && !colon_ideal.contains(v.witness.monomial);
        if (!ok)
          return record(witness_reverification, Outcome::fail, f.name,
                        "strong persistence witness " + to_string(v.witness.monomial) + " does not re-verify");
      }
    }
    const auto pp = is_persistent(f.F, h);
    if (pp.violation) {
      checked = true;
      const auto& v = *pp.violation;
      const bool before = witness_for_prime(f.F.eval(v.index), v.prime).has_value();
      const bool after = witness_for_prime(f.F.eval(v.index + 1), v.prime).has_value();
      if (!before || after)
        return record(witness_reverification, Outcome::fail, f.name,
                      "lost prime " + to_string(v.prime) + " does not re-verify");
    }
    record(witness_reverification, checked ? Outcome::pass : Outcome::not_applicable);
  }

  void pair_axiom_split(const Filtration& F, const Filtration& G, const std::string& label) {
    const PairFiltration P(F, G);
    const std::size_t h = effective_horizon(P, N_);
    const bool whole = check_axioms(P, h).pass;
    const bool parts = check_axioms(F, h).pass && check_axioms(G, h).pass;
    if (whole == parts) return record(pair_axioms, Outcome::pass);
    record(pair_axioms, Outcome::fail, label, std::string("pair axioms ") + (whole ? "pass" : "fail") +
                                                  " but components " + (parts ? "pass" : "fail"));
  }

  void direct_sum(const Filtration& F, const Filtration& G, const std::string& label) {
    const auto r = direct_sum_spp_check(F, G, N_);
    if (r.outcome != Outcome::fail) return record(direct_sum_spp, r.outcome);
    record(direct_sum_spp, Outcome::fail, label,
           std::string("pair ") + (r.pair ? "is" : "is not") + " strongly persistent, components " +
               (r.left ? "yes" : "no") + "/" + (r.right ? "yes" : "no"));
  }

  void symbolic_colon(const MonomialIdeal& I) {
    const MonomialIdeal I2 = power(I, 2), I3 = power(I, 3);
    const MonomialIdeal J = random_ideal(engine_, I.context(), 3, 5);
    const std::pair<std::string, std::pair<MonomialIdeal, MonomialIdeal>> cases[] = {
        {"(I^2, I)", {I2, I}}, {"(I^3, I)", {I3, I}}, {"(I^3, I^2)", {I3, I2}}, {"(I, J) J = " + to_string(J), {I, J}},
        {"(I J, J) J = " + to_string(J), {mul(I, J), J}}};
    for (const auto& [label, ij] : cases) {
      const auto r = symbolic_colon_theorem_check(ij.first, ij.second);
      record(symbolic_colon_theorem, r.outcome, label,
             r.outcome == Outcome::fail ? "(I^(1) : J^(1)) = " + to_string(*r.lhs) + " but L^(1) = " + to_string(*r.rhs)
                                        : std::string{});
    }
  }

  void decomposition(const MonomialIdeal& I) {
    for (std::size_t t = 1; t <= N_; ++t) {
      const MonomialIdeal J = power(I, t);
      const std::string label = "I^" + std::to_string(t);
      const Decomposition D = primary_decomposition(J);
      auto fail = [&](const std::string& why) { record(decomposition_soundness, Outcome::fail, label, why); };
      if (!(D.intersection() == J)) return fail("intersection of components is " + to_string(D.intersection()));
      std::vector<MonomialPrime> primes;
      for (const auto& c : D.components) {
        if (!(radical(c.ideal) == c.prime.to_ideal()))
          return fail("component " + to_string(c.ideal) + " does not have radical " + to_string(c.prime));
        // Monomial Q is primary iff every variable in a generator has a pure power in Q.
        for (const auto& g : c.ideal.generators())
          for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] && !c.prime.contains_variable(i)) return fail("component " + to_string(c.ideal) + " is not primary");
        primes.push_back(c.prime);
      }
      auto sorted = primes;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return fail("repeated prime");
      if (sorted != associated_primes(J)) return fail("component primes differ from Ass");
      for (std::size_t drop = 0; drop < D.components.size() && D.components.size() > 1; ++drop) {
        std::vector<MonomialIdeal> rest;
        for (std::size_t k = 0; k < D.components.size(); ++k)
          if (k != drop) rest.push_back(D.components[k].ideal);
        if (intersect(rest) == J) return fail("component " + to_string(D.components[drop].ideal) + " is redundant");
      }
      std::vector<MonomialIdeal> irr;
      for (const auto& c : irreducible_decomposition(J)) irr.push_back(c.to_ideal());
      if (!(intersect(irr) == J)) return fail("irreducible components do not intersect to the ideal");
      for (const auto& p : minimal_primes(J))
        if (!std::binary_search(sorted.begin(), sorted.end(), p)) return fail("minimal prime outside Ass");
      record(decomposition_soundness, Outcome::pass);
    }
  }

  void routes(const MonomialIdeal& I) {
    auto fail = [&](const std::string& why) { record(symbolic_routes, Outcome::fail, "", why); };
    if (!(first_symbolic(I) == first_symbolic_via_localization(I)))
      return fail("first symbolic power differs between the two formulas");
    const auto sym = Filtration::symbolic(I);
    const auto via = Filtration::symbolic_of(Filtration::powers(I));
    for (std::size_t t = 1; t <= N_; ++t) {
      if (!(symbolic_power(I, t) == first_symbolic(power(I, t))))
        return fail("I^(" + std::to_string(t) + ") differs from (I^" + std::to_string(t) + ")^(1)");
      if (!(sym.eval(t) == via.eval(t))) return fail("symbolic and symbolic_of(powers) differ at " + std::to_string(t));
    }
    record(symbolic_routes, Outcome::pass);
  }

  void edge_expectation(const MonomialIdeal& I) {
    if (entry_.descriptor.rfind("edge(", 0) != 0) return record(edge_ideal_persistence, Outcome::not_applicable);
    const auto r = is_persistent(Filtration::powers(I), N_);
    if (r.holds) return record(edge_ideal_persistence, Outcome::pass);
    record(edge_ideal_persistence, Outcome::fail, "powers",
           "lost " + to_string(r.violation->prime) + " after t = " + std::to_string(r.violation->index));
  }
};

} // namespace

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names{
      "filtration_axioms", "pair_axioms",      "pro_min",         "symbolic_filtration_axioms",
      "colon_lower_bound", "colon_decrement_equivalence", "symbolic_colon_theorem", "spp_implies_sspp",
      "spp_implies_pp",    "ratliff_witness",  "direct_sum_spp",  "decomposition_soundness",
      "symbolic_routes",   "witness_reverification", "edge_ideal_persistence"};
  return names;
}

std::size_t SuiteReport::violation_count() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.expectation) n += c.fail;
  return n;
}

std::size_t SuiteReport::finding_count() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.expectation) n += c.fail;
  return n;
}

const CheckTally& SuiteReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw DomainError("no suite check named " + name);
}

SuiteReport run_suite(const SuiteOptions& options) {
  if (options.horizon < 1) throw DomainError("suite horizon must be at least 1");
  const auto corpus = generate_corpus(options.seed, options.params);

  std::vector<std::vector<Record>> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();)
      results[i] = Instance(corpus[i], options.seed, i, options.horizon).run();
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, corpus.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport report;
  report.seed = options.seed;
  report.params = options.params;
  report.horizon = options.horizon;
  for (const auto& e : corpus) report.corpus.push_back(e.descriptor + " " + to_string(e.ideal));
  for (const auto& name : suite_check_names()) report.checks.push_back(CheckTally{name, 0, 0, 0, false, {}});
  report.checks[edge_ideal_persistence].expectation = true;
  for (const auto& instance : results)
    for (const auto& r : instance) {
      auto& tally = report.checks[r.check];
      switch (r.outcome) {
      case Outcome::pass:
        ++tally.pass;
        break;
      case Outcome::fail:
        ++tally.fail;
        tally.violations.push_back(r.detail);
        break;
      case Outcome::not_applicable:
        ++tally.na;
        break;
      }
    }
  return report;
}

} // namespace filtra
