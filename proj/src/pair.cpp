#include "filtra/pair.hpp"

#include <algorithm>

namespace filtra {

PairIdeal add(const PairIdeal& a, const PairIdeal& b) { return {add(a.left, b.left), add(a.right, b.right)}; }

PairIdeal mul(const PairIdeal& a, const PairIdeal& b) { return {mul(a.left, b.left), mul(a.right, b.right)}; }

PairIdeal intersect(const PairIdeal& a, const PairIdeal& b) {
  return {intersect(a.left, b.left), intersect(a.right, b.right)};
}

PairIdeal colon(const PairIdeal& a, const PairIdeal& b) { return {colon(a.left, b.left), colon(a.right, b.right)}; }

bool is_subset(const PairIdeal& a, const PairIdeal& b) {
  return is_subset(a.left, b.left) && is_subset(a.right, b.right);
}

std::string to_string(const PairIdeal& p) { return to_string(p.left) + " ⊕ " + to_string(p.right); }

std::optional<std::size_t> PairFiltration::max_index() const noexcept {
  const auto l = left_.max_index();
  const auto r = right_.max_index();
  if (l && r) return std::min(*l, *r);
  return l ? l : r;
}

PairFiltration symbolic_of(const PairFiltration& F) {
  return PairFiltration(Filtration::symbolic_of(F.left()), Filtration::symbolic_of(F.right()));
}

} // namespace filtra
