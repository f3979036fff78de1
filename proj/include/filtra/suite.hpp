#pragma once

// Corpus-wide theorem and invariant checks. Every instance is evaluated
// independently; results are merged in corpus order, so the report does not
// depend on the number of workers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "filtra/corpus.hpp"

namespace filtra {

struct SuiteOptions {
  std::uint64_t seed = 42;
  CorpusParams params;
  std::size_t horizon = 4;
  std::size_t jobs = 1;
};

struct CheckTally {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t na = 0;
  /// Failures here are expectations rather than theorems: they are listed
  /// as findings and never count as violations.
  bool expectation = false;
  std::vector<std::string> violations;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  CorpusParams params;
  std::size_t horizon = 0;
  std::vector<std::string> corpus;  // descriptors, in order
  std::vector<CheckTally> checks;   // fixed order

  std::size_t violation_count() const;
  std::size_t finding_count() const;
  const CheckTally& check(const std::string& name) const;
};

/// Names of the checks, in report order.
const std::vector<std::string>& suite_check_names();

SuiteReport run_suite(const SuiteOptions& options);

} // namespace filtra
