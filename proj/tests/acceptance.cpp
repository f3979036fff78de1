// Acceptance run: one pass/fail line per criterion. Exit status is nonzero
// when any criterion fails.
//
// usage: acceptance [path/to/filtra]

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "filtra/corpus.hpp"
#include "filtra/decomp.hpp"
#include "filtra/ingest.hpp"
#include "filtra/json.hpp"
#include "filtra/persistence.hpp"
#include "filtra/suite.hpp"
#include "oracle.hpp"

#ifndef FILTRA_CLI_PATH
#define FILTRA_CLI_PATH "filtra"
#endif

using namespace filtra;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Line {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const Line& line, double seconds) {
  if (!line.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", seconds);
  std::cout << (line.pass ? "[PASS] " : "[FAIL] ") << number << ". " << title << ": " << line.detail << " (" << time
            << ")" << std::endl;
}

void run(int number, const std::string& title, const std::function<Line()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Line line;
  try {
    line = body();
  } catch (const std::exception& e) {
    line = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, title, line, s);
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::set<std::uint32_t> masks(const std::vector<MonomialPrime>& ps) {
  std::set<std::uint32_t> out;
  for (const auto& p : ps) out.insert(p.support());
  return out;
}

oracle::Tuple random_tuple(std::mt19937_64& eng, std::size_t n, std::uint32_t max_exp) {
  oracle::Tuple t(n);
  for (auto& v : t) v = static_cast<std::uint32_t>(eng() % (max_exp + 1));
  return t;
}

Line oracle_equivalence() {
  std::mt19937_64 eng(kSeed);
  std::size_t mismatches = 0, points = 0;
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = 1 + eng() % 4;
    const auto ctx = VarContext::standard(n);
    const auto I = oracle::random_ideal(eng, ctx);
    const auto J = oracle::random_ideal(eng, ctx);
    const auto f = random_tuple(eng, n, 3);
    const auto m = random_tuple(eng, n, 4);
    const auto rI = oracle::raw(I), rJ = oracle::raw(J);
    const auto box = oracle::max_tuple({rI, rJ}, n, 1);

    if (I.contains(oracle::exps_of(m)) != oracle::member(rI, m)) ++mismatches;
    oracle::for_box(box, [&](const oracle::Tuple& p) {
      ++points;
      if (I.contains(oracle::exps_of(p)) != oracle::member(rI, p)) ++mismatches;
    });
    const auto Cf = colon(I, Monomial(ctx, oracle::exps_of(f)));
    if (oracle::minimal_elements(oracle::colon_by_monomial(rI, f, box)) != oracle::sorted_gens(Cf)) ++mismatches;
    if (oracle::minimal_elements(oracle::colon(rI, rJ, box)) != oracle::sorted_gens(colon(I, J))) ++mismatches;
    if (oracle::minimal_elements(oracle::intersection(rI, rJ, box)) != oracle::sorted_gens(intersect(I, J)))
      ++mismatches;
  }
  return {mismatches == 0, "500 (I, J, f, m) instances, " + std::to_string(points) + " box points, " +
                               std::to_string(mismatches) + " mismatches"};
}

Line decomposition_soundness() {
  std::mt19937_64 eng(kSeed + 1);
  std::size_t bad_intersection = 0, redundant = 0, bad_ass = 0, bad_min = 0, components = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + eng() % 4;
    const auto ctx = VarContext::standard(n);
    const auto I = oracle::random_ideal(eng, ctx);
    const auto d = primary_decomposition(I);
    components += d.components.size();
    if (!(d.intersection() == I)) ++bad_intersection;
    if (d.components.size() > 1)
      for (std::size_t skip = 0; skip < d.components.size(); ++skip) {
        std::vector<MonomialIdeal> rest;
        for (std::size_t i = 0; i < d.components.size(); ++i)
          if (i != skip) rest.push_back(d.components[i].ideal);
        if (intersect(rest) == I) {
          ++redundant;
          break;
        }
      }
    const auto rI = oracle::raw(I);
    if (masks(associated_primes(I)) != oracle::associated_primes(rI, n)) ++bad_ass;
    if (masks(minimal_primes(I)) != oracle::minimal_primes(rI, n)) ++bad_min;
  }
  const bool ok = bad_intersection + redundant + bad_ass + bad_min == 0;
  return {ok, "200 ideals, " + std::to_string(components) + " components; intersection mismatches " +
                  std::to_string(bad_intersection) + ", redundant " + std::to_string(redundant) + ", Ass mismatches " +
                  std::to_string(bad_ass) + ", Min mismatches " + std::to_string(bad_min)};
}

std::string tally_text(const CheckTally& t) {
  return std::to_string(t.pass) + " pass, " + std::to_string(t.fail) + " fail, " + std::to_string(t.na) + " n/a";
}

Line zero_violations(const SuiteReport& r, const std::string& name) {
  const auto& t = r.check(name);
  return {t.fail == 0 && t.pass > 0, name + ": " + tally_text(t)};
}

Line ratliff_direct(const std::vector<CorpusEntry>& corpus) {
  std::size_t filtrations = 0, instances = 0, inconsistent = 0, missing_witness = 0;
  for (std::size_t i = 0; i < corpus.size() && filtrations < 50; ++i) {
    const auto& I = corpus[i].ideal;
    // Every fifth filtration is an engineered table, so both directions get exercised.
    const Filtration F = (filtrations % 5 == 4) ? engineered_failing_table(I) : Filtration::powers(I);
    ++filtrations;
    for (std::size_t k = 1; k <= 3 && k < effective_horizon(F, 4); ++k) {
      const auto s = ratliff_check_all(F, k);
      if (s.outcome == Outcome::not_applicable) continue;
      instances += s.per_prime.size();
      if (s.outcome == Outcome::fail || !s.consistent()) ++inconsistent;
      for (const auto& p : s.per_prime) {
        if (!p.consistent()) ++inconsistent;
        if (!p.every_f_has_g()) ++missing_witness;
      }
    }
  }
  return {inconsistent == 0 && filtrations == 50 && missing_witness > 0,
          std::to_string(filtrations) + " filtrations, " + std::to_string(instances) + " (k, p) instances, " +
              std::to_string(missing_witness) + " with a missing witness g, " + std::to_string(inconsistent) +
              " violations"};
}

Line direct_sums(const std::vector<CorpusEntry>& corpus) {
  std::mt19937_64 eng(kSeed + 2);
  std::size_t pairs = 0, engineered = 0, pair_fails = 0, violations = 0;
  auto pick = [&](const MonomialIdeal& I, std::size_t choice) {
    switch (choice) {
    case 0: return Filtration::powers(I);
    case 1: return Filtration::symbolic(I);
    default: return engineered_failing_table(I);
    }
  };
  for (; pairs < 50; ++pairs) {
    const auto& a = corpus[eng() % corpus.size()].ideal;
    const auto& b = corpus[eng() % corpus.size()].ideal;
    const std::size_t ca = eng() % 3, cb = eng() % 3;
    engineered += (ca == 2) + (cb == 2);
    const auto r = direct_sum_spp_check(pick(a, ca), pick(b, cb), 4);
    if (r.outcome == Outcome::fail || !r.consistent()) ++violations;
    if (!r.pair) ++pair_fails;
  }
  return {violations == 0 && engineered > 0 && pair_fails > 0,
          std::to_string(pairs) + " pairs (" + std::to_string(engineered) + " engineered tables), " +
              std::to_string(pair_fails) + " pairs not strongly persistent, " + std::to_string(violations) +
              " violations"};
}

Line edge_ideals() {
  std::size_t graphs = 0, findings = 0;
  std::string first;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& G : connected_graphs_up_to_isomorphism(n)) {
      ++graphs;
      const auto r = is_persistent(Filtration::powers(edge_ideal(G)), 4);
      if (!r.holds) {
        if (findings++ == 0) first = " first: " + print_graph(G);
      }
    }
  return {true, std::to_string(graphs) + " connected graphs on 2..5 vertices, " + std::to_string(findings) +
                    " findings (non-ascending Ass chains)" + first};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Line determinism(const std::string& tool) {
  const auto dir = std::filesystem::temp_directory_path() / ("filtra-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string out[2];
  int status[2];
  for (int k = 0; k < 2; ++k) {
    const auto file = dir / ("run" + std::to_string(k) + ".json");
    const std::string cmd = "\"" + tool + "\" suite --seed 42 --count 200 > \"" + file.string() + "\"";
    status[k] = std::system(cmd.c_str());
    out[k] = slurp(file);
  }
  std::filesystem::remove_all(dir);
  if (status[0] != 0 || status[1] != 0)
    return {false, "suite exit status " + std::to_string(status[0]) + " / " + std::to_string(status[1])};
  const auto j = Json::parse(out[0]);
  const bool same = out[0] == out[1] && !out[0].empty();
  return {same && j["seed"] == 42, "two runs of `filtra suite --seed 42 --count 200`, " + std::to_string(out[0].size()) +
                                       " bytes each, " + (same ? "identical" : "DIFFERENT")};
}

} // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : FILTRA_CLI_PATH;

  run(1, "oracle equivalence (ring-core)", [] {
    const auto start = std::chrono::steady_clock::now();
    auto line = oracle_equivalence();
    const double s = elapsed_since(start);
    if (s >= 10) line = {false, line.detail + ", over the 10 s budget"};
    return line;
  });
  run(2, "decomposition soundness", [] {
    const auto start = std::chrono::steady_clock::now();
    auto line = decomposition_soundness();
    if (elapsed_since(start) >= 30) line = {false, line.detail + ", over the 30 s budget"};
    return line;
  });

  SuiteOptions options;
  options.seed = kSeed;
  const auto suite_start = std::chrono::steady_clock::now();
  const SuiteReport suite = run_suite(options);
  std::cout << "       suite: seed 42, " << suite.corpus.size() << " instances, N = " << suite.horizon << ", "
            << suite.violation_count() << " violations, " << elapsed_since(suite_start) << " s" << std::endl;

  run(3, "Min(I_i) = Min(I_1) for i <= 4", [&] { return zero_violations(suite, "pro_min"); });
  run(4, "symbolic filtration passes the axioms", [&] { return zero_violations(suite, "symbolic_filtration_axioms"); });
  run(5, "I_{i-j} ⊆ (I_i : I_j)", [&] { return zero_violations(suite, "colon_lower_bound"); });
  run(6, "colon-decrement equivalence", [&] { return zero_violations(suite, "colon_decrement_equivalence"); });
  run(7, "symbolic colon theorem", [&] {
    const auto& t = suite.check("symbolic_colon_theorem");
    const double total = static_cast<double>(t.pass + t.fail + t.na);
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.1f%%", total ? 100.0 * t.na / total : 0.0);
    return Line{t.fail == 0 && t.pass >= 100, tally_text(t) + ", not-applicable rate " + rate};
  });
  run(8, "strongly persistent implies symbolic strongly persistent and persistent", [&] {
    const auto& a = suite.check("spp_implies_sspp");
    const auto& b = suite.check("spp_implies_pp");
    return Line{a.fail == 0 && b.fail == 0 && a.pass >= 20 && b.pass >= 20,
                "premise held on " + std::to_string(a.pass) + " filtrations; spp_implies_sspp " + tally_text(a) +
                    "; spp_implies_pp " + tally_text(b)};
  });

  const auto corpus = generate_corpus(kSeed, CorpusParams{});
  run(9, "colon equality vs localized socle witnesses", [&] {
    auto line = ratliff_direct(corpus);
    const auto& t = suite.check("ratliff_witness");
    line.pass = line.pass && t.fail == 0;
    line.detail += "; suite ratliff_witness " + tally_text(t);
    return line;
  });
  run(10, "direct sums", [&] {
    auto line = direct_sums(corpus);
    const auto& t = suite.check("direct_sum_spp");
    line.pass = line.pass && t.fail == 0;
    line.detail += "; suite direct_sum_spp " + tally_text(t);
    return line;
  });
  run(11, "edge-ideal corpus expectation", [] {
    const auto start = std::chrono::steady_clock::now();
    auto line = edge_ideals();
    if (elapsed_since(start) >= 120) line = {false, line.detail + ", over the 2 min budget"};
    return line;
  });
  run(12, "determinism", [&] { return determinism(tool); });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
