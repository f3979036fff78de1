#include "filtra/corpus.hpp"

#include <algorithm>

#include "filtra/errors.hpp"
#include "filtra/ingest.hpp"

namespace filtra {

void validate(const CorpusParams& params) {
  if (params.vars < 1 || params.vars > kMaxVars)
    throw DomainError("corpus vars must lie in 1.." + std::to_string(kMaxVars));
  if (params.max_exp < 1) throw DomainError("corpus max_exp must be at least 1");
  if (params.max_gens < 1) throw DomainError("corpus max_gens must be at least 1");
  if (params.graphs && (params.max_graph_vertices < 2 || params.max_graph_vertices > 6))
    throw DomainError("graph corpus supports 2..6 vertices");
}

MonomialIdeal random_ideal(std::mt19937_64& engine, const VarContext& ctx, Exponent max_exp, std::size_t max_gens) {
  const std::size_t n = ctx.size();
  const std::size_t k = 1 + engine() % max_gens;
  std::vector<Exponents> gens;
  while (gens.size() < k) {
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e.set(i, static_cast<Exponent>(engine() % (max_exp + 1)));
    if (!e.is_one()) gens.push_back(e);
  }
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal random_ideal(std::mt19937_64& engine, const CorpusParams& params) {
  const std::size_t low = std::min<std::size_t>(2, params.vars);
  const std::size_t n = low + engine() % (params.vars - low + 1);
  return random_ideal(engine, VarContext::standard(n), params.max_exp, params.max_gens);
}

namespace {

std::string graph_label(const Graph& g) {
  std::string out = "n=" + std::to_string(g.vertex_count()) + ":";
  for (auto [a, b] : g.edges()) out += " " + std::to_string(a) + "-" + std::to_string(b);
  return out;
}

} // namespace

std::vector<CorpusEntry> graph_corpus(std::size_t max_vertices) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 2; n <= max_vertices; ++n)
    for (const auto& g : connected_graphs_up_to_isomorphism(n)) {
      out.push_back({"edge(" + graph_label(g) + ")", edge_ideal(g)});
      out.push_back({"cover(" + graph_label(g) + ")", cover_ideal(g)});
    }
  return out;
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, const CorpusParams& params) {
  validate(params);
  std::mt19937_64 engine(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < params.count; ++i) out.push_back({"random#" + std::to_string(i), random_ideal(engine, params)});
  if (params.graphs)
    for (auto& e : graph_corpus(params.max_graph_vertices)) out.push_back(std::move(e));
  return out;
}

Filtration engineered_failing_table(const MonomialIdeal& K) {
  if (!K.is_proper_nonzero()) throw DomainError("engineered_failing_table needs a proper nonzero ideal");
  const VarContext& ctx = K.context();
  const MonomialIdeal f(ctx, {K.generators().front()});
  const MonomialIdeal K2 = power(K, 2);
  return Filtration::table({MonomialIdeal::unit(ctx), K, K2, add(power(K, 3), mul(f, K))});
}

} // namespace filtra
