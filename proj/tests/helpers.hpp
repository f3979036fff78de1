#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "filtra/ingest.hpp"
#include "filtra/ring.hpp"

namespace th {

inline filtra::VarContext xyz(std::size_t n = 3) {
  static const std::vector<std::string> names = {"x", "y", "z", "w"};
  return filtra::VarContext(std::vector<std::string>(names.begin(), names.begin() + n));
}

/// "x^2, x*y" over ctx; "0" is the zero ideal.
inline filtra::MonomialIdeal ideal(const filtra::VarContext& ctx, std::string_view list) {
  std::vector<filtra::Exponents> gens;
  if (list == "0") return filtra::MonomialIdeal::zero(ctx);
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view part = list.substr(start, comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) gens.push_back(filtra::parse_monomial(ctx, part).exponents());
    start = comma + 1;
  }
  return filtra::MonomialIdeal(ctx, std::move(gens));
}

inline filtra::Monomial mono(const filtra::VarContext& ctx, std::string_view text) {
  return filtra::parse_monomial(ctx, text);
}

} // namespace th
