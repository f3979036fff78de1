#pragma once

// Monomials and monomial ideals over a fixed variable context.
//
// A MonomialIdeal is always stored in canonical form: a minimal generating
// set (no generator divides another), sorted by the graded order below and
// free of duplicates. Two ideals are equal iff their generator lists are
// identical. The zero ideal has no generators; the unit ideal has the
// single generator 1.
//
// Canonical order: smaller total degree first; within a degree, the vector
// with the larger exponent at the first differing variable comes first
// (variable 1 most significant). So (x, y)^2 lists x^2, x*y, y^2.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace filtra {

inline constexpr std::size_t kMaxVars = 16;

using Exponent = std::uint32_t;
using VarMask = std::uint32_t;

/// Ordered list of variable names shared by every monomial and ideal built
/// over it. Copies are cheap; two contexts compare equal iff their names do.
class VarContext {
public:
  explicit VarContext(std::vector<std::string> names);

  /// x1, ..., xn
  static VarContext standard(std::size_t n);

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  /// Index of `name`, or size() if absent.
  std::size_t index_of(std::string_view name) const;

  VarMask all_vars() const noexcept { return (VarMask{1} << size()) - 1; }

  friend bool operator==(const VarContext& a, const VarContext& b) noexcept {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws ContextMismatch unless a == b.
void require_same_context(const VarContext& a, const VarContext& b);

/// Fixed-capacity exponent vector. Arithmetic that would overflow Exponent
/// throws ExponentOverflow.
class Exponents {
public:
  Exponents() = default;
  explicit Exponents(std::size_t n);
  Exponents(std::initializer_list<Exponent> values);

  std::size_t size() const noexcept { return n_; }
  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, Exponent v) noexcept { e_[i] = v; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  /// Mask of variables with positive exponent.
  VarMask support() const noexcept;
  /// True when at most one variable occurs.
  bool is_pure_power() const noexcept;

  bool divides(const Exponents& other) const noexcept;

  friend Exponents operator*(const Exponents& a, const Exponents& b);
  friend Exponents lcm(const Exponents& a, const Exponents& b) noexcept;
  friend Exponents gcd(const Exponents& a, const Exponents& b) noexcept;
  /// a / gcd(a, b): componentwise max(a_i - b_i, 0).
  friend Exponents quotient(const Exponents& a, const Exponents& b) noexcept;
  Exponents pow(Exponent k) const;
  /// Every variable outside `mask` set to exponent 0.
  Exponents restricted(VarMask mask) const noexcept;
  /// Every exponent clamped to at most 1.
  Exponents square_free_part() const noexcept;

  friend bool operator==(const Exponents& a, const Exponents& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  /// Canonical order, see the file comment.
  friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) noexcept;

  std::size_t hash() const noexcept;

private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

/// A monomial bound to its variable context.
class Monomial {
public:
  Monomial(VarContext ctx, Exponents exps);
  static Monomial one(VarContext ctx);
  static Monomial variable(VarContext ctx, std::size_t i, Exponent power = 1);

  const VarContext& context() const noexcept { return ctx_; }
  const Exponents& exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint64_t degree() const noexcept { return exps_.degree(); }
  bool is_one() const noexcept { return exps_.is_one(); }

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_ && a.ctx_ == b.ctx_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ <=> b.exps_;
  }

private:
  VarContext ctx_;
  Exponents exps_;
};

/// Sorts canonically, removes duplicates and every entry divisible by
/// another entry.
void minimalize(std::vector<Exponents>& gens);

class MonomialIdeal {
public:
  /// Canonical minimal form of the ideal generated by `gens`.
  MonomialIdeal(VarContext ctx, std::vector<Exponents> gens);

  static MonomialIdeal from_monomials(VarContext ctx, std::span<const Monomial> ms);
  static MonomialIdeal zero(VarContext ctx);
  static MonomialIdeal unit(VarContext ctx);
  /// (x_i : i in mask)
  static MonomialIdeal from_variables(VarContext ctx, VarMask mask);

  const VarContext& context() const noexcept { return ctx_; }
  std::span<const Exponents> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  Monomial generator(std::size_t i) const { return Monomial(ctx_, gens_[i]); }
  std::vector<Monomial> monomials() const;

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  bool contains(const Monomial& m) const;
  /// Membership for a raw exponent vector of this context's arity.
  bool contains(const Exponents& e) const noexcept;

  /// Componentwise maximum over the generators.
  Exponents max_exponents() const noexcept;
  /// Union of generator supports.
  VarMask support() const noexcept;
  bool is_square_free() const noexcept;

  std::size_t hash() const noexcept;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
    return a.gens_ == b.gens_ && a.ctx_ == b.ctx_;
  }

private:
  struct Canonical {};
  MonomialIdeal(Canonical, VarContext ctx, std::vector<Exponents> gens)
      : ctx_(std::move(ctx)), gens_(std::move(gens)) {}
  friend MonomialIdeal make_canonical_unchecked(VarContext, std::vector<Exponents>);

  VarContext ctx_;
  std::vector<Exponents> gens_;
};

/// Builds `I` from generators the caller guarantees to be canonical.
MonomialIdeal make_canonical_unchecked(VarContext ctx, std::vector<Exponents> gens);

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mul(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::size_t t);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of a nonempty list; throws DomainError on an empty list.
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f);
/// (a : b); (a : 0) is the unit ideal.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);
/// a ⊆ b
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// First generator of `a` (canonical order) lying outside `b`, if any.
std::optional<Monomial> first_generator_outside(const MonomialIdeal& a, const MonomialIdeal& b);

std::string to_string(const Monomial& m);
/// Inline form: "(x^2, x*y)", "(1)" for the unit ideal and "(0)" for zero.
std::string to_string(const MonomialIdeal& I);

} // namespace filtra

template <>
struct std::hash<filtra::Exponents> {
  std::size_t operator()(const filtra::Exponents& e) const noexcept { return e.hash(); }
};

template <>
struct std::hash<filtra::MonomialIdeal> {
  std::size_t operator()(const filtra::MonomialIdeal& I) const noexcept { return I.hash(); }
};
