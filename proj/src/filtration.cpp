#include "filtra/filtration.hpp"

#include <map>
#include <mutex>

#include "filtra/closure.hpp"
#include "filtra/decomp.hpp"
#include "filtra/errors.hpp"

namespace filtra {

struct Filtration::State {
  Kind kind;
  VarContext ctx;
  std::optional<MonomialIdeal> base;
  std::vector<MonomialIdeal> entries;
  std::optional<Filtration> inner;

  mutable std::mutex memo_mutex;
  mutable std::map<std::size_t, MonomialIdeal> memo;

  State(Kind k, VarContext c) : kind(k), ctx(std::move(c)) {}
};

namespace {

void require_nonzero(const MonomialIdeal& I, const char* what) {
  if (I.is_zero()) throw DomainError(std::string(what) + " filtration of the zero ideal");
}

} // namespace

Filtration Filtration::powers(MonomialIdeal base) {
  require_nonzero(base, "powers");
  auto s = std::make_shared<State>(Kind::powers, base.context());
  s->base = std::move(base);
  return Filtration(std::move(s));
}

Filtration Filtration::symbolic(MonomialIdeal base) {
  if (!base.is_proper_nonzero()) throw DomainError("symbolic filtration needs a proper nonzero ideal");
  auto s = std::make_shared<State>(Kind::symbolic, base.context());
  s->base = std::move(base);
  return Filtration(std::move(s));
}

Filtration Filtration::closure(MonomialIdeal base) {
  require_nonzero(base, "integral closure");
  auto s = std::make_shared<State>(Kind::closure, base.context());
  s->base = std::move(base);
  return Filtration(std::move(s));
}

Filtration Filtration::irrelevant(VarContext ctx) {
  return Filtration(std::make_shared<State>(Kind::irrelevant, std::move(ctx)));
}

Filtration Filtration::table(std::vector<MonomialIdeal> entries) {
  if (entries.empty()) throw DomainError("a table filtration needs at least the entry I_0");
  for (const auto& e : entries) require_same_context(entries.front().context(), e.context());
  auto s = std::make_shared<State>(Kind::table, entries.front().context());
  s->entries = std::move(entries);
  return Filtration(std::move(s));
}

Filtration Filtration::symbolic_of(Filtration inner) {
  auto s = std::make_shared<State>(Kind::symbolic_of, inner.context());
  s->inner = std::move(inner);
  return Filtration(std::move(s));
}

Filtration::Kind Filtration::kind() const noexcept { return state_->kind; }
const VarContext& Filtration::context() const noexcept { return state_->ctx; }
const MonomialIdeal* Filtration::base() const noexcept { return state_->base ? &*state_->base : nullptr; }
std::span<const MonomialIdeal> Filtration::table_entries() const noexcept { return state_->entries; }
const Filtration* Filtration::inner() const noexcept { return state_->inner ? &*state_->inner : nullptr; }

std::optional<std::size_t> Filtration::max_index() const noexcept {
  if (state_->kind == Kind::table) return state_->entries.size() - 1;
  if (state_->kind == Kind::symbolic_of) return state_->inner->max_index();
  return std::nullopt;
}

MonomialIdeal Filtration::eval(std::size_t i) const {
  if (auto top = max_index(); top && i > *top)
    throw DomainError(describe() + ": index " + std::to_string(i) + " is past the last entry " + std::to_string(*top));
  if (state_->kind == Kind::table) return state_->entries[i];
  if (i == 0) return MonomialIdeal::unit(state_->ctx);
  {
    std::lock_guard lock(state_->memo_mutex);
    if (auto it = state_->memo.find(i); it != state_->memo.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate computes the same value.
  MonomialIdeal value = [&] {
    switch (state_->kind) {
    case Kind::powers:
      return power(*state_->base, i);
    case Kind::symbolic:
      return symbolic_power(*state_->base, i);
    case Kind::closure:
      return integral_closure(power(*state_->base, i));
    case Kind::irrelevant:
      return power(MonomialIdeal::from_variables(state_->ctx, state_->ctx.all_vars()), i);
    case Kind::symbolic_of: {
      MonomialIdeal inner = state_->inner->eval(i);
      if (inner.is_unit()) return inner;
      return first_symbolic(inner);
    }
    case Kind::table:
      break;
    }
    throw DomainError("unreachable filtration kind");
  }();
  std::lock_guard lock(state_->memo_mutex);
  return state_->memo.emplace(i, std::move(value)).first->second;
}

std::string Filtration::describe() const {
  switch (state_->kind) {
  case Kind::powers:
    return "powers" + to_string(*state_->base);
  case Kind::symbolic:
    return "symbolic" + to_string(*state_->base);
  case Kind::closure:
    return "closure" + to_string(*state_->base);
  case Kind::irrelevant:
    return "irrelevant" + to_string(MonomialIdeal::from_variables(state_->ctx, state_->ctx.all_vars()));
  case Kind::table: {
    std::string out = "table[";
    for (std::size_t i = 0; i < state_->entries.size(); ++i) {
      if (i) out += ", ";
      out += to_string(state_->entries[i]);
    }
    return out + "]";
  }
  case Kind::symbolic_of:
    return "symbolic_of(" + state_->inner->describe() + ")";
  }
  return "?";
}

std::string to_string(Filtration::Kind kind) {
  switch (kind) {
  case Filtration::Kind::powers:
    return "powers";
  case Filtration::Kind::symbolic:
    return "symbolic";
  case Filtration::Kind::closure:
    return "closure";
  case Filtration::Kind::irrelevant:
    return "irrelevant";
  case Filtration::Kind::table:
    return "table";
  case Filtration::Kind::symbolic_of:
    return "symbolic_of";
  }
  return "?";
}

} // namespace filtra
