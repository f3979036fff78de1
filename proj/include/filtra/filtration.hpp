#pragma once

// Filtrations {I_i} of the polynomial ring: I_0 = R, I_{i+1} ⊆ I_i and
// I_n I_m ⊆ I_{n+m}. Built-in families are evaluated lazily and memoized
// per filtration; copies of a Filtration share the memo.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "filtra/ring.hpp"

namespace filtra {

class Filtration {
public:
  enum class Kind { powers, symbolic, closure, irrelevant, table, symbolic_of };

  /// I_i = I^i
  static Filtration powers(MonomialIdeal base);
  /// I_i = I^(i)
  static Filtration symbolic(MonomialIdeal base);
  /// I_i = integral closure of I^i
  static Filtration closure(MonomialIdeal base);
  /// I_i = (x_1, ..., x_n)^i, the degree >= i part of the standard grading
  static Filtration irrelevant(VarContext ctx);
  /// I_i = entries[i] for i < entries.size(); entries[0] is taken as given.
  static Filtration table(std::vector<MonomialIdeal> entries);
  /// I_(0) = R, I_(i) = first symbolic power of inner.eval(i)
  static Filtration symbolic_of(Filtration inner);

  Kind kind() const noexcept;
  const VarContext& context() const noexcept;
  /// Base ideal of powers, symbolic and closure filtrations.
  const MonomialIdeal* base() const noexcept;
  std::span<const MonomialIdeal> table_entries() const noexcept;
  const Filtration* inner() const noexcept;

  /// Largest valid index, when finite (tables).
  std::optional<std::size_t> max_index() const noexcept;

  /// Throws DomainError past max_index().
  MonomialIdeal eval(std::size_t i) const;

  /// e.g. "powers(x^2, x*y)", "symbolic_of(powers(x*y))"
  std::string describe() const;

private:
  struct State;
  explicit Filtration(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

std::string to_string(Filtration::Kind kind);

} // namespace filtra
