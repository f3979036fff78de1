#pragma once

// Ideals and filtrations of a direct product R ⊕ R'. Every ideal of the
// product is I ⊕ J, so everything is carried componentwise.

#include <optional>
#include <string>

#include "filtra/filtration.hpp"
#include "filtra/ring.hpp"

namespace filtra {

struct PairIdeal {
  MonomialIdeal left;
  MonomialIdeal right;

  static PairIdeal unit(const VarContext& l, const VarContext& r) {
    return {MonomialIdeal::unit(l), MonomialIdeal::unit(r)};
  }

  bool is_unit() const noexcept { return left.is_unit() && right.is_unit(); }

  friend bool operator==(const PairIdeal&, const PairIdeal&) = default;
};

PairIdeal add(const PairIdeal& a, const PairIdeal& b);
/// (I ⊕ J)(I' ⊕ J') = II' ⊕ JJ'
PairIdeal mul(const PairIdeal& a, const PairIdeal& b);
PairIdeal intersect(const PairIdeal& a, const PairIdeal& b);
/// (A ⊕ B : C ⊕ D) = (A : C) ⊕ (B : D)
PairIdeal colon(const PairIdeal& a, const PairIdeal& b);
/// A ⊕ B ⊆ A' ⊕ B' iff A ⊆ A' and B ⊆ B'
bool is_subset(const PairIdeal& a, const PairIdeal& b);

std::string to_string(const PairIdeal& p);

/// {I_i ⊕ J_i} built from a filtration of each factor.
class PairFiltration {
public:
  PairFiltration(Filtration left, Filtration right) : left_(std::move(left)), right_(std::move(right)) {}

  const Filtration& left() const noexcept { return left_; }
  const Filtration& right() const noexcept { return right_; }

  PairIdeal eval(std::size_t i) const { return {left_.eval(i), right_.eval(i)}; }
  std::optional<std::size_t> max_index() const noexcept;
  std::string describe() const { return "pair(" + left_.describe() + ", " + right_.describe() + ")"; }

private:
  Filtration left_;
  Filtration right_;
};

/// Componentwise symbolic filtration.
PairFiltration symbolic_of(const PairFiltration& F);

} // namespace filtra
