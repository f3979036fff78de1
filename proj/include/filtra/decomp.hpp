#pragma once

// Irreducible and primary decomposition of monomial ideals, minimal and
// associated primes, localization at monomial primes, symbolic powers.
//
// Every operation that needs a decomposition takes a proper nonzero ideal
// and throws DomainError otherwise.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "filtra/ring.hpp"

namespace filtra {

/// Prime generated by a nonempty set of variables.
class MonomialPrime {
public:
  MonomialPrime(VarContext ctx, VarMask support);
  /// Throws DomainError unless `I` is generated by distinct variables.
  static MonomialPrime from_ideal(const MonomialIdeal& I);
  static MonomialPrime maximal(VarContext ctx) { return MonomialPrime(ctx, ctx.all_vars()); }

  const VarContext& context() const noexcept { return ctx_; }
  VarMask support() const noexcept { return support_; }
  std::size_t height() const noexcept;
  bool contains_variable(std::size_t i) const noexcept { return (support_ >> i) & 1u; }
  /// this ⊆ other
  bool is_subset_of(const MonomialPrime& other) const noexcept {
    return (support_ & ~other.support_) == 0;
  }
  /// I ⊆ this
  bool contains(const MonomialIdeal& I) const;
  MonomialIdeal to_ideal() const { return MonomialIdeal::from_variables(ctx_, support_); }
  std::vector<std::string> variable_names() const;

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) noexcept {
    return a.support_ == b.support_ && a.ctx_ == b.ctx_;
  }
  /// Fewer variables first, then by the sorted index lists.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) noexcept;

private:
  VarContext ctx_;
  VarMask support_;
};

/// An ideal (x_{i1}^{a1}, ..., x_{ik}^{ak}) generated by pure powers.
class IrreducibleComponent {
public:
  /// `powers[i] == 0` means x_i does not occur.
  IrreducibleComponent(VarContext ctx, Exponents powers);
  /// Throws DomainError unless `I` is a proper nonzero ideal of pure powers.
  static IrreducibleComponent from_ideal(const MonomialIdeal& I);

  const Exponents& powers() const noexcept { return powers_; }
  MonomialIdeal to_ideal() const;
  MonomialPrime radical() const { return MonomialPrime(ctx_, powers_.support()); }

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) noexcept {
    return a.powers_ == b.powers_ && a.ctx_ == b.ctx_;
  }

private:
  VarContext ctx_;
  Exponents powers_;
};

struct PrimaryComponent {
  MonomialIdeal ideal;
  MonomialPrime prime;
};

struct Decomposition {
  MonomialIdeal ideal;
  std::vector<PrimaryComponent> components;

  MonomialIdeal intersection() const;
};

/// Irredundant irreducible decomposition, sorted by radical and then by the
/// canonical order of the exponent vectors. Results are cached per ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I);
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I);

/// Minimal primary decomposition, components in canonical prime order.
Decomposition primary_decomposition(const MonomialIdeal& I);

/// I R_p ∩ R: every variable outside p is set to 1.
MonomialIdeal localize_contract(const MonomialIdeal& I, const MonomialPrime& p);

/// Intersection of the primary components belonging to minimal primes.
MonomialIdeal first_symbolic(const MonomialIdeal& I);
/// ⋂_{p ∈ Min(I)} localize_contract(I, p); agrees with first_symbolic.
MonomialIdeal first_symbolic_via_localization(const MonomialIdeal& I);

/// ⋂_{p ∈ Min(I)} localize_contract(I^t, p). t = 0 gives the unit ideal.
MonomialIdeal symbolic_power(const MonomialIdeal& I, std::size_t t);

/// All monomials f supported on p with (localize_contract(I, p) : f) = p,
/// exponents bounded by the localized generators, canonical order.
std::vector<Monomial> socle_witnesses(const MonomialIdeal& I, const MonomialPrime& p);
/// First element of socle_witnesses(I, p); present iff p ∈ Ass(R/I).
std::optional<Monomial> witness_for_prime(const MonomialIdeal& I, const MonomialPrime& p);

std::string to_string(const MonomialPrime& p);

/// Drops every cached decomposition.
void clear_decomposition_cache();

} // namespace filtra
