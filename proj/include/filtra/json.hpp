#pragma once

// JSON renderings with fixed key order.

#include <json.hpp>

#include "filtra/checks.hpp"
#include "filtra/decomp.hpp"
#include "filtra/persistence.hpp"
#include "filtra/suite.hpp"

namespace filtra {

using Json = nlohmann::ordered_json;

Json to_json(const MonomialIdeal& I);  // list of generator strings
Json to_json(const MonomialPrime& p);  // list of variable names
Json to_json(const std::vector<MonomialPrime>& primes);
Json to_json(const Decomposition& d);
Json to_json(const AssSequence& ass);
Json to_json(const AxiomReport& r);
Json to_json(const ColonLowerBoundReport& r);
Json to_json(const PersistenceReport& r);
Json to_json(const StrongPersistenceCheck& r);
Json to_json(const ColonDecrementReport& r);
Json to_json(const SymbolicColonReport& r);
Json to_json(const ImplicationReport& r);
Json to_json(const RatliffSummary& r);
Json to_json(const DirectSumReport& r);
Json to_json(const SuiteReport& r);

} // namespace filtra
