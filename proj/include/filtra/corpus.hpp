#pragma once

// Seeded random corpus plus structured graph instances. Generation is a
// pure function of (seed, params): the engine is std::mt19937_64 and every
// draw is reduced with `%`, so no distribution object is involved.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "filtra/filtration.hpp"
#include "filtra/ring.hpp"

namespace filtra {

struct CorpusParams {
  std::size_t vars = 4;        // random ideals use 2..vars variables
  Exponent max_exp = 3;
  std::size_t max_gens = 5;
  std::size_t count = 200;     // random instances
  bool graphs = true;          // append edge and cover ideals
  std::size_t max_graph_vertices = 5;
};

struct CorpusEntry {
  std::string descriptor;  // e.g. "random#7", "edge(n=3: 1-2 1-3 2-3)"
  MonomialIdeal ideal;
};

/// Throws DomainError on out-of-range parameters.
void validate(const CorpusParams& params);

/// A proper nonzero ideal drawn from the parameter box.
MonomialIdeal random_ideal(std::mt19937_64& engine, const CorpusParams& params);
/// Same, over a fixed context.
MonomialIdeal random_ideal(std::mt19937_64& engine, const VarContext& ctx, Exponent max_exp, std::size_t max_gens);

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, const CorpusParams& params);

/// Edge and cover ideals of every connected graph on 2..max_vertices
/// vertices, one per isomorphism class.
std::vector<CorpusEntry> graph_corpus(std::size_t max_vertices);

/// [R, K, K^2, K^3 + f K] with f the first generator of K. This passes the
/// filtration axioms, and f lies in (I_3 : I_1) but not in I_2, so strong
/// persistence fails at i = 2.
Filtration engineered_failing_table(const MonomialIdeal& K);

} // namespace filtra
