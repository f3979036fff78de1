#include "filtra/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "filtra/errors.hpp"

namespace filtra {

namespace {

struct Line {
  std::size_t number;     // 1-based
  std::size_t offset;     // column of text.front(), 1-based
  std::string_view text;  // comment stripped, trimmed
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t begin = 0;
    while (begin < raw.size() && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
    std::size_t end = raw.size();
    while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
    if (end > begin) out.push_back({number, begin + 1, raw.substr(begin, end - begin)});
    if (nl == std::string_view::npos) break;
  }
  return out;
}

std::string_view trim(std::string_view s, std::size_t& shift) {
  shift = 0;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++shift;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with_key(std::string_view line, std::string_view key, std::string_view& rest) {
  if (line.substr(0, key.size()) != key) return false;
  std::string_view after = line.substr(key.size());
  std::size_t i = 0;
  while (i < after.size() && after[i] == ' ') ++i;
  if (i >= after.size() || after[i] != ':') return false;
  rest = after.substr(i + 1);
  return true;
}

Exponent parse_exponent(std::string_view digits, std::size_t line, std::size_t column) {
  if (digits.empty()) throw ParseError(line, column, "expected an exponent after '^'");
  Exponent value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, column, "exponent out of range");
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError(line, column, "invalid exponent '" + std::string(digits) + "'");
  return value;
}

Exponents parse_monomial_at(const VarContext& ctx, std::string_view text, std::size_t line, std::size_t column) {
  Exponents e(ctx.size());
  std::size_t pos = 0;
  bool first = true;
  for (;;) {
    const auto star = text.find('*', pos);
    std::string_view raw = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    std::size_t shift;
    std::string_view factor = trim(raw, shift);
    const std::size_t col = column + pos + shift;
    if (factor.empty()) throw ParseError(line, col, "empty factor");
    if (factor == "1") {
      if (!first || star != std::string_view::npos) throw ParseError(line, col, "'1' must be the whole monomial");
      return e;
    }
    const auto caret = factor.find('^');
    std::size_t name_shift;
    const std::string_view name = trim(factor.substr(0, caret), name_shift);
    const std::size_t index = ctx.index_of(name);
    if (index == ctx.size()) throw ParseError(line, col, "unknown variable '" + std::string(name) + "'");
    Exponent power = 1;
    if (caret != std::string_view::npos) {
      std::size_t exp_shift;
      const auto digits = trim(factor.substr(caret + 1), exp_shift);
      power = parse_exponent(digits, line, col + caret + 1 + exp_shift);
    }
    Exponent sum;
    if (__builtin_add_overflow(e[index], power, &sum)) throw ParseError(line, col, "exponent overflow");
    e.set(index, sum);
    first = false;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return e;
}

std::size_t parse_index(std::string_view token, std::size_t line, std::size_t column) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, column, "expected a vertex index, got '" + std::string(token) + "'");
  return value;
}

} // namespace

Monomial parse_monomial(const VarContext& ctx, std::string_view text) {
  return Monomial(ctx, parse_monomial_at(ctx, text, 1, 1));
}

MonomialIdeal parse_ideal(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "expected 'vars:' header");
  std::string_view rest;
  if (!starts_with_key(lines.front().text, "vars", rest))
    throw ParseError(lines.front().number, lines.front().offset, "expected 'vars:' header");

  std::vector<std::string> names;
  std::vector<std::size_t> columns;
  std::size_t pos = 0;
  const std::size_t rest_column = lines.front().offset + static_cast<std::size_t>(rest.data() - lines.front().text.data());
  for (;;) {
    const auto comma = rest.find(',', pos);
    std::size_t shift;
    const auto name = trim(rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos), shift);
    if (name.empty()) throw ParseError(lines.front().number, rest_column + pos + shift, "empty variable name");
    names.emplace_back(name);
    columns.push_back(rest_column + pos + shift);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  // Grow the context one name at a time so an error points at the offending name.
  std::optional<VarContext> ctx;
  for (std::size_t k = 1; k <= names.size(); ++k) {
    try {
      ctx.emplace(std::vector<std::string>(names.begin(), names.begin() + k));
    } catch (const DomainError& e) {
      throw ParseError(lines.front().number, k <= kMaxVars ? columns[k - 1] : rest_column, e.what());
    }
  }

  std::vector<Exponents> gens;
  bool explicit_zero = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (starts_with_key(line.text, "gens", rest)) {
      std::size_t shift;
      const auto value = trim(rest, shift);
      if (value == "0") {
        explicit_zero = true;
      } else if (value == "1") {
        gens.push_back(Exponents(ctx->size()));
      } else {
        throw ParseError(line.number, line.offset, "'gens:' takes 0 or 1");
      }
      continue;
    }
    gens.push_back(parse_monomial_at(*ctx, line.text, line.number, line.offset));
  }
  if (explicit_zero && !gens.empty()) throw ParseError(lines.back().number, 1, "'gens: 0' combined with generators");
  return MonomialIdeal(*ctx, std::move(gens));
}

std::string print_ideal(const MonomialIdeal& I) {
  std::string out = "vars: ";
  const auto& names = I.context().names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  out += '\n';
  if (I.is_zero()) return out + "gens: 0\n";
  if (I.is_unit()) return out + "gens: 1\n";
  for (const auto& m : I.monomials()) out += to_string(m) + '\n';
  return out;
}

// --- graphs ----------------------------------------------------------------

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) : n_(n) {
  if (n == 0 || n > kMaxGraphVertices)
    throw DomainError("graphs need between 1 and " + std::to_string(kMaxGraphVertices) + " vertices");
  for (auto [a, b] : edges) {
    if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
    if (a == 0 || b == 0 || a > n || b > n) throw DomainError("edge endpoint out of range 1.." + std::to_string(n));
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw DomainError("duplicate edge");
}

bool Graph::is_connected() const {
  std::vector<std::size_t> parent(n_ + 1);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : edges_) parent[find(a)] = find(b);
  for (std::size_t v = 2; v <= n_; ++v)
    if (find(v) != find(1)) return false;
  return true;
}

bool Graph::is_bipartite() const {
  std::vector<int> colour(n_ + 1, -1);
  for (std::size_t start = 1; start <= n_; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto [a, b] : edges_) {
        if (a != v && b != v) continue;
        const auto w = a == v ? b : a;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph parse_graph(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t max_index = 0;
  std::size_t last_line = 1;
  for (const auto& line : significant_lines(text)) {
    last_line = line.number;
    std::string_view rest;
    if (starts_with_key(line.text, "n", rest)) {
      if (!edges.empty() || declared) throw ParseError(line.number, line.offset, "'n:' must be the first line");
      std::size_t shift;
      const auto value = trim(rest, shift);
      declared = parse_index(value, line.number, line.offset + 2 + shift);
      continue;
    }
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.text.size()) {
      while (i < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[i]))) ++i;
      const std::size_t begin = i;
      while (i < line.text.size() && !std::isspace(static_cast<unsigned char>(line.text[i]))) ++i;
      if (i > begin) tokens.emplace_back(line.text.substr(begin, i - begin), line.offset + begin);
    }
    if (tokens.size() != 2) throw ParseError(line.number, line.offset, "an edge line needs exactly two vertices");
    const auto a = parse_index(tokens[0].first, line.number, tokens[0].second);
    const auto b = parse_index(tokens[1].first, line.number, tokens[1].second);
    if (a == b) throw ParseError(line.number, line.offset, "loop edge at vertex " + std::to_string(a));
    if (a == 0 || b == 0) throw ParseError(line.number, line.offset, "vertices are numbered from 1");
    if (declared && (a > *declared || b > *declared))
      throw ParseError(line.number, line.offset, "vertex exceeds declared n = " + std::to_string(*declared));
    max_index = std::max({max_index, a, b});
    edges.emplace_back(a, b);
  }
  const std::size_t n = declared.value_or(max_index);
  if (n == 0) throw ParseError(last_line, 1, "empty graph without an 'n:' header");
  try {
    return Graph(n, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(last_line, 1, e.what());
  }
}

std::string print_graph(const Graph& G) {
  std::string out = "n: " + std::to_string(G.vertex_count()) + '\n';
  for (auto [a, b] : G.edges()) out += std::to_string(a) + ' ' + std::to_string(b) + '\n';
  return out;
}

MonomialIdeal edge_ideal(const Graph& G) {
  const VarContext ctx = VarContext::standard(G.vertex_count());
  std::vector<Exponents> gens;
  for (auto [a, b] : G.edges()) {
    Exponents e(ctx.size());
    e.set(a - 1, 1);
    e.set(b - 1, 1);
    gens.push_back(e);
  }
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal cover_ideal(const Graph& G) {
  const VarContext ctx = VarContext::standard(G.vertex_count());
  MonomialIdeal out = MonomialIdeal::unit(ctx);
  for (auto [a, b] : G.edges())
    out = intersect(out, MonomialIdeal::from_variables(ctx, (VarMask{1} << (a - 1)) | (VarMask{1} << (b - 1))));
  return out;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) throw DomainError("alexander_dual needs a proper nonzero ideal");
  if (!I.is_square_free()) throw DomainError("alexander_dual needs a square-free ideal, got " + to_string(I));
  MonomialIdeal out = MonomialIdeal::unit(I.context());
  for (const auto& g : I.generators()) out = intersect(out, MonomialIdeal::from_variables(I.context(), g.support()));
  return out;
}

std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n) {
  if (n == 0 || n > 6) throw DomainError("graph enumeration supports 1..6 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  auto slot_of = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::pair{a, b}) - slots.begin());
  };

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::pair<int, std::uint32_t>> canon;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::uint32_t best = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (1u << s)) image |= 1u << slot_of(p[slots[s].first], p[slots[s].second]);
      best = std::min(best, image);
    }
    if (best == mask) canon.emplace(std::popcount(mask), mask);
  }

  std::vector<Graph> out;
  for (auto [count, mask] : canon) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (1u << s)) edges.emplace_back(slots[s].first + 1, slots[s].second + 1);
    Graph g(n, std::move(edges));
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

} // namespace filtra
