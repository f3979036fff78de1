#include "filtra/ring.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <regex>
#include <set>

#include "filtra/errors.hpp"

namespace filtra {

namespace {

const std::regex& identifier_pattern() {
  static const std::regex re("[A-Za-z][A-Za-z0-9_]*");
  return re;
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw ExponentOverflow("exponent overflow in monomial product");
  return out;
}

void require_arity(const Exponents& e, const VarContext& ctx) {
  if (e.size() != ctx.size())
    throw ContextMismatch("exponent vector of length " + std::to_string(e.size()) + " used in a context of " +
                          std::to_string(ctx.size()) + " variables");
}

} // namespace

// --- VarContext ------------------------------------------------------------

VarContext::VarContext(std::vector<std::string> names) {
  if (names.empty() || names.size() > kMaxVars)
    throw DomainError("a variable context needs between 1 and " + std::to_string(kMaxVars) + " variables");
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!std::regex_match(name, identifier_pattern())) throw DomainError("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw DomainError("duplicate variable name '" + name + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarContext VarContext::standard(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarContext(std::move(names));
}

std::size_t VarContext::index_of(std::string_view name) const {
  const auto& v = *names_;
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), name) - v.begin());
}

void require_same_context(const VarContext& a, const VarContext& b) {
  if (!(a == b)) throw ContextMismatch("operands belong to different variable contexts");
}

// --- Exponents -------------------------------------------------------------

Exponents::Exponents(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n > kMaxVars) throw DomainError("too many variables");
}

Exponents::Exponents(std::initializer_list<Exponent> values) : Exponents(values.size()) {
  std::copy(values.begin(), values.end(), e_.begin());
}

std::uint64_t Exponents::degree() const noexcept {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Exponents::is_one() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

VarMask Exponents::support() const noexcept {
  VarMask m = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) m |= VarMask{1} << i;
  return m;
}

bool Exponents::is_pure_power() const noexcept { return std::popcount(support()) <= 1; }

bool Exponents::divides(const Exponents& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Exponents operator*(const Exponents& a, const Exponents& b) {
  Exponents out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) out.e_[i] = checked_add(a.e_[i], b.e_[i]);
  return out;
}

Exponents lcm(const Exponents& a, const Exponents& b) noexcept {
  Exponents out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) out.e_[i] = std::max(a.e_[i], b.e_[i]);
  return out;
}

Exponents gcd(const Exponents& a, const Exponents& b) noexcept {
  Exponents out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) out.e_[i] = std::min(a.e_[i], b.e_[i]);
  return out;
}

Exponents quotient(const Exponents& a, const Exponents& b) noexcept {
  Exponents out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) out.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] - b.e_[i] : 0;
  return out;
}

Exponents Exponents::pow(Exponent k) const {
  Exponents out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Exponent v;
    if (__builtin_mul_overflow(e_[i], k, &v)) throw ExponentOverflow("exponent overflow in monomial power");
    out.e_[i] = v;
  }
  return out;
}

Exponents Exponents::restricted(VarMask mask) const noexcept {
  Exponents out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (mask & (VarMask{1} << i)) out.e_[i] = e_[i];
  return out;
}

Exponents Exponents::square_free_part() const noexcept {
  Exponents out(n_);
  for (std::size_t i = 0; i < n_; ++i) out.e_[i] = e_[i] != 0 ? 1 : 0;
  return out;
}

std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < std::max(a.n_, b.n_); ++i)
    if (a.e_[i] != b.e_[i]) return b.e_[i] <=> a.e_[i];
  return a.n_ <=> b.n_;
}

std::size_t Exponents::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ (e_[i] + 0x9e3779b9u + (h << 6) + (h >> 2));
  return h;
}

// --- Monomial --------------------------------------------------------------

Monomial::Monomial(VarContext ctx, Exponents exps) : ctx_(std::move(ctx)), exps_(exps) {
  require_arity(exps_, ctx_);
}

Monomial Monomial::one(VarContext ctx) {
  Exponents e(ctx.size());
  return Monomial(std::move(ctx), e);
}

Monomial Monomial::variable(VarContext ctx, std::size_t i, Exponent power) {
  if (i >= ctx.size()) throw DomainError("variable index out of range");
  Exponents e(ctx.size());
  e.set(i, power);
  return Monomial(std::move(ctx), e);
}

bool Monomial::divides(const Monomial& other) const {
  require_same_context(ctx_, other.ctx_);
  return exps_.divides(other.exps_);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_context(a.ctx_, b.ctx_);
  return Monomial(a.ctx_, a.exps_ * b.exps_);
}

// --- MonomialIdeal ---------------------------------------------------------

void minimalize(std::vector<Exponents>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // After sorting, a divisor always precedes its multiples.
  std::vector<Exponents> kept;
  kept.reserve(gens.size());
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

MonomialIdeal::MonomialIdeal(VarContext ctx, std::vector<Exponents> gens) : ctx_(std::move(ctx)), gens_(std::move(gens)) {
  for (const auto& g : gens_) require_arity(g, ctx_);
  minimalize(gens_);
}

MonomialIdeal make_canonical_unchecked(VarContext ctx, std::vector<Exponents> gens) {
  return MonomialIdeal(MonomialIdeal::Canonical{}, std::move(ctx), std::move(gens));
}

MonomialIdeal MonomialIdeal::from_monomials(VarContext ctx, std::span<const Monomial> ms) {
  std::vector<Exponents> gens;
  gens.reserve(ms.size());
  for (const auto& m : ms) {
    require_same_context(ctx, m.context());
    gens.push_back(m.exponents());
  }
  return MonomialIdeal(std::move(ctx), std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(VarContext ctx) { return MonomialIdeal(Canonical{}, std::move(ctx), {}); }

MonomialIdeal MonomialIdeal::unit(VarContext ctx) {
  Exponents one(ctx.size());
  return MonomialIdeal(Canonical{}, std::move(ctx), {one});
}

MonomialIdeal MonomialIdeal::from_variables(VarContext ctx, VarMask mask) {
  std::vector<Exponents> gens;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (mask & (VarMask{1} << i)) {
      Exponents e(ctx.size());
      e.set(i, 1);
      gens.push_back(e);
    }
  return MonomialIdeal(std::move(ctx), std::move(gens));
}

std::vector<Monomial> MonomialIdeal::monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.emplace_back(ctx_, g);
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_context(ctx_, m.context());
  return contains(m.exponents());
}

bool MonomialIdeal::contains(const Exponents& e) const noexcept {
  for (const auto& g : gens_)
    if (g.divides(e)) return true;
  return false;
}

Exponents MonomialIdeal::max_exponents() const noexcept {
  Exponents out(ctx_.size());
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

VarMask MonomialIdeal::support() const noexcept {
  VarMask m = 0;
  for (const auto& g : gens_) m |= g.support();
  return m;
}

bool MonomialIdeal::is_square_free() const noexcept {
  for (const auto& g : gens_)
    if (!(g.square_free_part() == g)) return false;
  return true;
}

std::size_t MonomialIdeal::hash() const noexcept {
  std::size_t h = gens_.size();
  for (const auto& g : gens_) h = h * 31 + g.hash();
  return h;
}

// --- arithmetic ------------------------------------------------------------

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exponents> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal mul(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exponents> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g * h);
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::size_t t) {
  MonomialIdeal out = MonomialIdeal::unit(a.context());
  for (std::size_t i = 0; i < t; ++i) out = mul(out, a);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exponents> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of an empty family of ideals");
  MonomialIdeal out = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) out = intersect(out, ideals[i]);
  return out;
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f) {
  require_same_context(a.context(), f.context());
  std::vector<Exponents> gens;
  gens.reserve(a.size());
  for (const auto& g : a.generators()) gens.push_back(quotient(g, f.exponents()));
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  if (b.is_zero()) return MonomialIdeal::unit(a.context());
  MonomialIdeal out = MonomialIdeal::unit(a.context());
  for (const auto& h : b.generators()) {
    out = intersect(out, colon(a, Monomial(a.context(), h)));
    if (out == a) break; // (a : h) ⊇ a, so the intersection cannot shrink further
  }
  return out;
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Exponents> gens;
  gens.reserve(a.size());
  for (const auto& g : a.generators()) gens.push_back(g.square_free_part());
  return MonomialIdeal(a.context(), std::move(gens));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

std::optional<Monomial> first_generator_outside(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  for (const auto& g : a.generators())
    if (!b.contains(g)) return Monomial(a.context(), g);
  return std::nullopt;
}

// --- printing --------------------------------------------------------------

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.context().size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += m.context().name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) out += ", ";
    out += to_string(I.generator(i));
  }
  return out + ")";
}

} // namespace filtra
