#include "filtra/decomp.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "filtra/errors.hpp"

namespace filtra {

namespace {

void require_proper_nonzero(const MonomialIdeal& I, const char* op) {
  if (I.is_zero()) throw DomainError(std::string(op) + ": the zero ideal has no decomposition");
  if (I.is_unit()) throw DomainError(std::string(op) + ": the unit ideal has no decomposition");
}

/// Q_a ⊆ Q_b for irreducible ideals given by their pure-power exponents.
bool irreducible_subset(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (b[i] == 0 || b[i] > a[i]) return false;
  }
  return true;
}

// Generators are added one at a time. For an irreducible Q and a monomial
// m outside Q, Q + (m) = ⋂_{i ∈ supp(m)} (Q + (x_i^{m_i})), so each step
// refines the components that miss m and then drops the non-minimal ones.
// The irredundant irreducible decomposition is unique, so the order of
// insertion does not affect the result.
std::vector<Exponents> compute_irreducible(const MonomialIdeal& I) {
  const std::size_t n = I.context().size();
  auto member = [](const Exponents& q, const Exponents& m) {
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0 && m[i] >= q[i]) return true;
    return false;
  };

  std::vector<Exponents> components{Exponents(n)}; // empty powers: the unit ideal
  bool unit = true;
  for (const auto& m : I.generators()) {
    std::vector<Exponents> kept, fresh;
    for (const auto& q : components) {
      if (!unit && member(q, m)) {
        kept.push_back(q);
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] == 0) continue;
        Exponents r = unit ? Exponents(n) : q;
        if (r[i] == 0 || m[i] < r[i]) r.set(i, m[i]);
        fresh.push_back(r);
      }
    }
    unit = false;
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    // Old components are pairwise incomparable and each refinement contains
    // its parent, so only fresh components can be redundant.
    std::vector<Exponents> next = kept;
    for (const auto& b : fresh) {
      bool redundant = false;
      for (const auto& a : kept)
        if (irreducible_subset(a, b)) {
          redundant = true;
          break;
        }
      for (const auto& a : fresh)
        if (!redundant && !(a == b) && irreducible_subset(a, b)) redundant = true;
      if (!redundant) next.push_back(b);
    }
    components = std::move(next);
  }

  const VarContext& ctx = I.context();
  std::sort(components.begin(), components.end(), [&](const Exponents& a, const Exponents& b) {
    const MonomialPrime pa(ctx, a.support()), pb(ctx, b.support());
    if (auto c = pa <=> pb; c != 0) return c < 0;
    return a < b;
  });
  return components;
}

class DecompositionCache {
public:
  std::optional<std::vector<Exponents>> find(const MonomialIdeal& I) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(I);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const MonomialIdeal& I, std::vector<Exponents> value) {
    std::unique_lock lock(mutex_);
    table_.emplace(I, std::move(value));
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<MonomialIdeal, std::vector<Exponents>> table_;
};

DecompositionCache& cache() {
  static DecompositionCache instance;
  return instance;
}

std::vector<Exponents> irreducible_powers(const MonomialIdeal& I) {
  if (auto hit = cache().find(I)) return *hit;
  auto value = compute_irreducible(I);
  cache().insert(I, value);
  return value;
}

} // namespace

// --- MonomialPrime ---------------------------------------------------------

MonomialPrime::MonomialPrime(VarContext ctx, VarMask support) : ctx_(std::move(ctx)), support_(support) {
  if (support_ == 0) throw DomainError("a monomial prime needs at least one variable");
  if ((support_ & ~ctx_.all_vars()) != 0) throw DomainError("prime support outside the variable context");
}

MonomialPrime MonomialPrime::from_ideal(const MonomialIdeal& I) {
  VarMask mask = 0;
  for (const auto& g : I.generators()) {
    if (g.degree() != 1) throw DomainError("ideal " + to_string(I) + " is not generated by variables");
    mask |= g.support();
  }
  return MonomialPrime(I.context(), mask);
}

std::size_t MonomialPrime::height() const noexcept { return static_cast<std::size_t>(std::popcount(support_)); }

bool MonomialPrime::contains(const MonomialIdeal& I) const {
  require_same_context(ctx_, I.context());
  for (const auto& g : I.generators())
    if ((g.support() & support_) == 0) return false;
  return true;
}

std::vector<std::string> MonomialPrime::variable_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ctx_.size(); ++i)
    if (contains_variable(i)) out.push_back(ctx_.name(i));
  return out;
}

std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) noexcept {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  // Same size: the set whose lowest differing index is present comes first.
  const VarMask diff = a.support_ ^ b.support_;
  if (diff == 0) return std::strong_ordering::equal;
  const VarMask low = diff & (~diff + 1);
  return (a.support_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(const MonomialPrime& p) { return to_string(p.to_ideal()); }

// --- IrreducibleComponent --------------------------------------------------

IrreducibleComponent::IrreducibleComponent(VarContext ctx, Exponents powers) : ctx_(std::move(ctx)), powers_(powers) {
  if (powers_.size() != ctx_.size()) throw ContextMismatch("irreducible component arity mismatch");
  if (powers_.is_one()) throw DomainError("an irreducible component needs at least one variable power");
}

IrreducibleComponent IrreducibleComponent::from_ideal(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) throw DomainError("irreducible components are proper and nonzero");
  Exponents powers(I.context().size());
  for (const auto& g : I.generators()) {
    if (!g.is_pure_power()) throw DomainError(to_string(I) + " is not generated by pure powers");
    const auto i = static_cast<std::size_t>(std::countr_zero(g.support()));
    powers.set(i, g[i]);
  }
  return IrreducibleComponent(I.context(), powers);
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Exponents> gens;
  for (std::size_t i = 0; i < powers_.size(); ++i)
    if (powers_[i] != 0) {
      Exponents e(powers_.size());
      e.set(i, powers_[i]);
      gens.push_back(e);
    }
  return MonomialIdeal(ctx_, std::move(gens));
}

// --- decompositions --------------------------------------------------------

MonomialIdeal Decomposition::intersection() const {
  std::vector<MonomialIdeal> parts;
  for (const auto& c : components) parts.push_back(c.ideal);
  return intersect(parts);
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  require_proper_nonzero(I, "irreducible_decomposition");
  std::vector<IrreducibleComponent> out;
  for (const auto& powers : irreducible_powers(I)) out.emplace_back(I.context(), powers);
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
  require_proper_nonzero(I, "associated_primes");
  std::vector<MonomialPrime> out;
  for (const auto& powers : irreducible_powers(I)) {
    MonomialPrime p(I.context(), powers.support());
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
  const auto ass = associated_primes(I);
  std::vector<MonomialPrime> out;
  for (const auto& p : ass) {
    bool minimal = std::none_of(ass.begin(), ass.end(),
                                [&](const MonomialPrime& q) { return !(q == p) && q.is_subset_of(p); });
    if (minimal) out.push_back(p);
  }
  return out;
}

Decomposition primary_decomposition(const MonomialIdeal& I) {
  require_proper_nonzero(I, "primary_decomposition");
  const VarContext& ctx = I.context();
  Decomposition out{I, {}};
  for (const auto& powers : irreducible_powers(I)) {
    const IrreducibleComponent q(ctx, powers);
    const MonomialPrime p = q.radical();
    auto it = std::find_if(out.components.begin(), out.components.end(),
                           [&](const PrimaryComponent& c) { return c.prime == p; });
    if (it == out.components.end())
      out.components.push_back({q.to_ideal(), p});
    else
      it->ideal = intersect(it->ideal, q.to_ideal());
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.prime < b.prime; });

  // Greedy redundancy removal to a fixpoint. Grouping an irredundant
  // irreducible decomposition never leaves anything to remove, but the pass
  // keeps the result irredundant by construction.
  for (bool changed = true; changed && out.components.size() > 1;) {
    changed = false;
    for (std::size_t k = 0; k < out.components.size(); ++k) {
      std::vector<MonomialIdeal> rest;
      for (std::size_t j = 0; j < out.components.size(); ++j)
        if (j != k) rest.push_back(out.components[j].ideal);
      if (intersect(rest) == I) {
        out.components.erase(out.components.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
    }
  }
  return out;
}

MonomialIdeal localize_contract(const MonomialIdeal& I, const MonomialPrime& p) {
  require_same_context(I.context(), p.context());
  if (I.is_zero()) throw DomainError("localize_contract: the zero ideal");
  std::vector<Exponents> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(g.restricted(p.support()));
  return MonomialIdeal(I.context(), std::move(gens));
}

MonomialIdeal first_symbolic(const MonomialIdeal& I) {
  const auto mins = minimal_primes(I);
  std::vector<MonomialIdeal> parts;
  for (const auto& c : primary_decomposition(I).components)
    if (std::find(mins.begin(), mins.end(), c.prime) != mins.end()) parts.push_back(c.ideal);
  return intersect(parts);
}

MonomialIdeal first_symbolic_via_localization(const MonomialIdeal& I) {
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(I)) parts.push_back(localize_contract(I, p));
  return intersect(parts);
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, std::size_t t) {
  if (t == 0) return MonomialIdeal::unit(I.context());
  require_proper_nonzero(I, "symbolic_power");
  const MonomialIdeal It = power(I, t);
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(I)) parts.push_back(localize_contract(It, p));
  return intersect(parts);
}

std::vector<Monomial> socle_witnesses(const MonomialIdeal& I, const MonomialPrime& p) {
  require_proper_nonzero(I, "socle_witnesses");
  require_same_context(I.context(), p.context());
  const MonomialIdeal J = localize_contract(I, p);
  std::vector<Exponents> found;
  if (J.is_unit()) return {};
  const std::size_t n = I.context().size();

  // J only involves the variables of p, so (J : f) = p iff f ∉ J and
  // x_i f ∈ J for every x_i ∈ p. If f ∉ Q_c while every x_i f ∈ Q_c, then
  // supp(c) = p and f = x^(c - 1): candidates come from the components.
  for (const auto& c : irreducible_powers(J)) {
    if (c.support() != p.support()) continue;
    Exponents f(n);
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] != 0) f.set(i, c[i] - 1);
    bool socle = !J.contains(f);
    for (std::size_t i = 0; i < n && socle; ++i) {
      if (!p.contains_variable(i)) continue;
      Exponents g = f;
      g.set(i, f[i] + 1);
      socle = J.contains(g);
    }
    if (socle) found.push_back(f);
  }
  std::sort(found.begin(), found.end());
  std::vector<Monomial> out;
  for (const auto& e : found) out.emplace_back(I.context(), e);
  return out;
}

std::optional<Monomial> witness_for_prime(const MonomialIdeal& I, const MonomialPrime& p) {
  auto all = socle_witnesses(I, p);
  if (all.empty()) return std::nullopt;
  return all.front();
}

void clear_decomposition_cache() { cache().clear(); }

} // namespace filtra
