#include "filtra/json.hpp"

namespace filtra {

namespace {

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  Json j;
  if (!w->side.empty()) j["side"] = w->side;
  j["monomial"] = to_string(w->monomial);
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return to_json(*v);
}

Json colon_failure_json(const std::optional<ColonFailure>& v) {
  if (!v) return nullptr;
  return Json{{"index", v->index},
              {"witness_in", v->colon_larger ? "colon" : "I_i"},
              {"witness", witness_json(v->witness)}};
}

} // namespace

Json to_json(const MonomialIdeal& I) {
  Json out = Json::array();
  if (I.is_unit()) out.push_back("1");
  else
    for (const auto& m : I.monomials()) out.push_back(to_string(m));
  return out;
}

Json to_json(const MonomialPrime& p) { return Json(p.variable_names()); }

Json to_json(const std::vector<MonomialPrime>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(to_json(p));
  return out;
}

Json to_json(const Decomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back(Json{{"prime", to_json(c.prime)}, {"gens", to_json(c.ideal)}});
  return Json{{"ideal", to_string(d.ideal)}, {"components", comps}};
}

Json to_json(const AssSequence& ass) {
  Json out = Json::array();
  for (const auto& s : ass) out.push_back(to_json(s));
  return out;
}

Json to_json(const AxiomReport& r) {
  Json j{{"pass", r.pass}, {"horizon", r.horizon}};
  if (!r.pass) {
    j["failed"] = to_string(r.failed);
    j["n"] = r.n;
    j["m"] = r.m;
    j["witness"] = witness_json(r.witness);
  }
  return j;
}

Json to_json(const ColonLowerBoundReport& r) {
  Json j{{"pass", r.pass}, {"horizon", r.horizon}, {"equality_everywhere", r.equality_everywhere}};
  if (!r.pass) {
    j["i"] = r.i;
    j["j"] = r.j;
    j["witness"] = witness_json(r.witness);
  }
  return j;
}

Json to_json(const PersistenceReport& r) {
  Json lost = nullptr;
  if (r.persistence_violation)
    lost = Json{{"index", r.persistence_violation->index}, {"prime", to_json(r.persistence_violation->prime)}};
  return Json{{"filtration", r.filtration},
              {"horizon", r.horizon},
              {"persistent", r.persistent()},
              {"strongly_persistent", r.strongly_persistent()},
              {"ass", to_json(r.ass_sets)},
              {"persistence_violation", lost},
              {"strong_violation", colon_failure_json(r.strong_violation)},
              {"notes", r.notes}};
}

Json to_json(const StrongPersistenceCheck& r) {
  return Json{{"strongly_persistent", r.holds}, {"horizon", r.horizon}, {"violation", colon_failure_json(r.violation)}};
}

Json to_json(const ColonDecrementReport& r) {
  Json j{{"outcome", to_string(r.outcome)},
         {"horizon", r.horizon},
         {"step_equalities", r.step_equalities},
         {"all_pairs", r.all_pairs},
         {"consistent", r.consistent()}};
  j["first_step_failure"] = r.first_step_failure ? Json(*r.first_step_failure) : Json(nullptr);
  j["first_pair_failure"] =
      r.first_pair_failure ? Json::array({r.first_pair_failure->first, r.first_pair_failure->second}) : Json(nullptr);
  return j;
}

Json to_json(const SymbolicColonReport& r) {
  Json j{{"outcome", to_string(r.outcome)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["colon"] = r.colon ? Json(to_string(*r.colon)) : Json(nullptr);
  j["lhs"] = r.lhs ? Json(to_string(*r.lhs)) : Json(nullptr);
  j["rhs"] = r.rhs ? Json(to_string(*r.rhs)) : Json(nullptr);
  return j;
}

Json to_json(const ImplicationReport& r) {
  return Json{{"outcome", to_string(r.outcome)}, {"premise", r.premise}, {"conclusion", r.conclusion}, {"detail", r.detail}};
}

Json to_json(const RatliffSummary& r) {
  Json primes = Json::array();
  for (const auto& p : r.per_prime) {
    Json probes = Json::array();
    for (const auto& s : p.probes)
      probes.push_back(Json{{"f", to_string(s.f)}, {"g", s.g ? Json(to_string(*s.g)) : Json(nullptr)}});
    primes.push_back(Json{{"prime", to_json(p.prime)}, {"every_f_has_g", p.every_f_has_g()}, {"probes", probes}});
  }
  return Json{{"outcome", to_string(r.outcome)},
              {"k", r.k},
              {"colon_equality", r.colon_equality},
              {"all_witnessed", r.all_witnessed},
              {"primes", primes}};
}

Json to_json(const DirectSumReport& r) {
  return Json{{"outcome", to_string(r.outcome)},
              {"left", r.left},
              {"right", r.right},
              {"pair", r.pair},
              {"pair_violation", colon_failure_json(r.pair_violation)}};
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::object();
  for (const auto& c : r.checks) {
    Json j{{"pass", c.pass}, {"fail", c.fail}, {"na", c.na}};
    if (c.expectation) {
      j["violations"] = Json::array();
      j["findings"] = c.violations;
    } else {
      j["violations"] = c.violations;
    }
    checks[c.name] = j;
  }
  return Json{{"seed", r.seed},
              {"instances", r.corpus.size()},
              {"params",
               {{"vars", r.params.vars},
                {"max_exp", r.params.max_exp},
                {"max_gens", r.params.max_gens},
                {"count", r.params.count},
                {"graphs", r.params.graphs},
                {"max_graph_vertices", r.params.max_graph_vertices},
                {"horizon", r.horizon}}},
              {"checks", checks},
              {"summary", {{"violations", r.violation_count()}, {"findings", r.finding_count()}}},
              {"corpus", r.corpus}};
}

} // namespace filtra
