#pragma once

// Filtration spec files.
//
//   kind: powers            also symbolic, closure
//   vars: x, y
//   x^2
//   x*y
//
//   kind: irrelevant
//   vars: x, y, z
//
//   kind: table
//   vars: x, y
//   ---
//   gens: 1
//   ---
//   x
//   y
//
//   kind: symbolic_of       one nested spec; pair takes two
//   {
//   kind: powers
//   ...
//   }
//
// Braces and `---` sit on lines of their own.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "filtra/filtration.hpp"
#include "filtra/pair.hpp"

namespace filtra {

struct FiltrationSpec {
  enum class Kind { powers, symbolic, closure, irrelevant, table, symbolic_of, pair };

  Kind kind = Kind::powers;
  std::optional<MonomialIdeal> base;     // powers, symbolic, closure
  std::optional<VarContext> vars;        // irrelevant, table
  std::vector<MonomialIdeal> entries;    // table
  std::vector<FiltrationSpec> children;  // symbolic_of: 1, pair: 2

  bool is_pair() const;
};

bool operator==(const FiltrationSpec& a, const FiltrationSpec& b);

std::string to_string(FiltrationSpec::Kind kind);

FiltrationSpec parse_filtration_spec(std::string_view text);
std::string print_filtration_spec(const FiltrationSpec& spec);

/// True when the first significant line is a `kind:` header.
bool looks_like_filtration_spec(std::string_view text);

using AnyFiltration = std::variant<Filtration, PairFiltration>;

/// A pair spec (or symbolic_of a pair) yields a PairFiltration.
AnyFiltration build(const FiltrationSpec& spec);

FiltrationSpec spec_of(const Filtration& F);

} // namespace filtra
