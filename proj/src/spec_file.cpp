#include "filtra/spec_file.hpp"

#include <cctype>

#include "filtra/errors.hpp"
#include "filtra/ingest.hpp"

namespace filtra {

namespace {

using Kind = FiltrationSpec::Kind;

struct RawLine {
  std::size_t number;
  std::string_view raw;
  std::string_view text; // comment stripped, trimmed
};

std::vector<RawLine> split_lines(std::string_view text) {
  std::vector<RawLine> out;
  std::size_t number = 0;
  for (;;) {
    ++number;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    std::string_view t = raw.substr(0, raw.find('#'));
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    out.push_back({number, raw, t});
    if (nl == std::string_view::npos) break;
    text = text.substr(nl + 1);
  }
  return out;
}

std::optional<Kind> kind_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, Kind> table[] = {
      {"powers", Kind::powers}, {"symbolic", Kind::symbolic},       {"closure", Kind::closure},
      {"irrelevant", Kind::irrelevant}, {"table", Kind::table}, {"symbolic_of", Kind::symbolic_of},
      {"pair", Kind::pair}};
  for (auto [n, k] : table)
    if (n == name) return k;
  return std::nullopt;
}

std::optional<std::string_view> value_of(std::string_view line, std::string_view key) {
  if (line.substr(0, key.size()) != key) return std::nullopt;
  auto rest = line.substr(key.size());
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest.empty() || rest.front() != ':') return std::nullopt;
  rest.remove_prefix(1);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  return rest;
}

class Parser {
public:
  explicit Parser(std::vector<RawLine> lines) : lines_(std::move(lines)) {}

  FiltrationSpec parse_all() { return parse_range(0, lines_.size()); }

private:
  std::vector<RawLine> lines_;

  std::size_t skip_blank(std::size_t i, std::size_t end) const {
    while (i < end && lines_[i].text.empty()) ++i;
    return i;
  }

  [[noreturn]] void fail(std::size_t i, const std::string& msg) const {
    const std::size_t line = i < lines_.size() ? lines_[i].number : lines_.back().number;
    throw ParseError(line, 1, msg);
  }

  // Rebuilds a parse_ideal input that keeps original line numbers: blank
  // lines pad everything before `begin`, and `header` (when given) is put on
  // line 1.
  std::string ideal_text(std::size_t begin, std::size_t end, std::string_view header) const {
    std::string out;
    if (!header.empty()) {
      out += header;
      out += '\n';
    }
    const std::size_t pad = lines_[begin].number - 1 - (header.empty() ? 0 : 1);
    out.append(pad, '\n');
    for (std::size_t i = begin; i < end; ++i) {
      out += lines_[i].raw;
      out += '\n';
    }
    return out;
  }

  MonomialIdeal parse_ideal_block(std::size_t begin, std::size_t end) const {
    if (skip_blank(begin, end) == end) fail(begin, "expected an ideal block");
    for (std::size_t i = begin; i < end; ++i)
      if (lines_[i].text == "{" || lines_[i].text == "}" || lines_[i].text == "---")
        fail(i, "unexpected '" + std::string(lines_[i].text) + "' inside an ideal block");
    return parse_ideal(ideal_text(begin, end, {}));
  }

  // Index of the `}` matching the `{` at `open`.
  std::size_t matching_brace(std::size_t open, std::size_t end) const {
    int depth = 0;
    for (std::size_t i = open; i < end; ++i) {
      if (lines_[i].text == "{") ++depth;
      if (lines_[i].text == "}" && --depth == 0) return i;
    }
    fail(open, "unbalanced '{'");
  }

  std::vector<FiltrationSpec> parse_children(std::size_t begin, std::size_t end, std::size_t count) {
    std::vector<FiltrationSpec> out;
    std::size_t i = skip_blank(begin, end);
    while (i < end) {
      if (lines_[i].text != "{") fail(i, "expected '{' opening a nested spec");
      const std::size_t close = matching_brace(i, end);
      out.push_back(parse_range(i + 1, close));
      i = skip_blank(close + 1, end);
    }
    if (out.size() != count)
      fail(begin, "expected " + std::to_string(count) + " nested spec" + (count == 1 ? "" : "s") + ", found " +
                      std::to_string(out.size()));
    return out;
  }

  FiltrationSpec parse_range(std::size_t begin, std::size_t end) {
    std::size_t i = skip_blank(begin, end);
    if (i == end) fail(begin, "expected 'kind:' header");
    const auto name = value_of(lines_[i].text, "kind");
    if (!name) fail(i, "expected 'kind:' header");
    const auto kind = kind_from_name(*name);
    if (!kind) fail(i, "unknown filtration kind '" + std::string(*name) + "'");

    FiltrationSpec spec;
    spec.kind = *kind;
    const std::size_t body = i + 1;
    switch (*kind) {
    case Kind::powers:
    case Kind::symbolic:
    case Kind::closure:
      spec.base = parse_ideal_block(body, end);
      break;
    case Kind::irrelevant: {
      const std::size_t v = skip_blank(body, end);
      if (v == end || !value_of(lines_[v].text, "vars")) fail(v, "expected 'vars:' line");
      if (skip_blank(v + 1, end) != end) fail(skip_blank(v + 1, end), "irrelevant takes only a 'vars:' line");
      spec.vars = parse_ideal_block(v, v + 1).context();
      break;
    }
    case Kind::table: {
      const std::size_t v = skip_blank(body, end);
      if (v == end || !value_of(lines_[v].text, "vars")) fail(v, "expected 'vars:' line");
      spec.vars = parse_ideal_block(v, v + 1).context();
      const std::string header(lines_[v].raw);
      std::size_t k = skip_blank(v + 1, end);
      if (k == end) fail(v, "a table needs at least one entry");
      while (k < end) {
        if (lines_[k].text != "---") fail(k, "expected '---' before a table entry");
        std::size_t stop = k + 1;
        while (stop < end && lines_[stop].text != "---") ++stop;
        for (std::size_t j = k + 1; j < stop; ++j)
          if (value_of(lines_[j].text, "vars")) fail(j, "table entries share the table's 'vars:' line");
        if (skip_blank(k + 1, stop) == stop)
          spec.entries.push_back(MonomialIdeal::zero(*spec.vars));
        else
          spec.entries.push_back(parse_ideal(ideal_text(k + 1, stop, header)));
        k = stop;
      }
      break;
    }
    case Kind::symbolic_of:
      spec.children = parse_children(body, end, 1);
      break;
    case Kind::pair:
      spec.children = parse_children(body, end, 2);
      break;
    }
    return spec;
  }
};

std::string vars_line(const VarContext& ctx) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) out += ", ";
    out += ctx.name(i);
  }
  return out + '\n';
}

void print_into(const FiltrationSpec& spec, std::string& out) {
  out += "kind: " + to_string(spec.kind) + '\n';
  switch (spec.kind) {
  case Kind::powers:
  case Kind::symbolic:
  case Kind::closure:
    out += print_ideal(*spec.base);
    break;
  case Kind::irrelevant:
    out += vars_line(*spec.vars);
    break;
  case Kind::table:
    out += vars_line(*spec.vars);
    for (const auto& entry : spec.entries) {
      const std::string text = print_ideal(entry);
      out += "---\n";
      out += text.substr(text.find('\n') + 1);
    }
    break;
  case Kind::symbolic_of:
  case Kind::pair:
    for (const auto& child : spec.children) {
      out += "{\n";
      print_into(child, out);
      out += "}\n";
    }
    break;
  }
}

} // namespace

bool FiltrationSpec::is_pair() const {
  if (kind == Kind::pair) return true;
  return kind == Kind::symbolic_of && !children.empty() && children.front().is_pair();
}

bool operator==(const FiltrationSpec& a, const FiltrationSpec& b) {
  return a.kind == b.kind && a.base == b.base && a.vars == b.vars && a.entries == b.entries &&
         a.children == b.children;
}

std::string to_string(FiltrationSpec::Kind kind) {
  switch (kind) {
  case Kind::powers:
    return "powers";
  case Kind::symbolic:
    return "symbolic";
  case Kind::closure:
    return "closure";
  case Kind::irrelevant:
    return "irrelevant";
  case Kind::table:
    return "table";
  case Kind::symbolic_of:
    return "symbolic_of";
  case Kind::pair:
    return "pair";
  }
  return "?";
}

FiltrationSpec parse_filtration_spec(std::string_view text) { return Parser(split_lines(text)).parse_all(); }

std::string print_filtration_spec(const FiltrationSpec& spec) {
  std::string out;
  print_into(spec, out);
  return out;
}

bool looks_like_filtration_spec(std::string_view text) {
  for (const auto& line : split_lines(text))
    if (!line.text.empty()) return value_of(line.text, "kind").has_value();
  return false;
}

AnyFiltration build(const FiltrationSpec& spec) {
  auto single = [](const AnyFiltration& f, const char* what) -> const Filtration& {
    if (const auto* p = std::get_if<Filtration>(&f)) return *p;
    throw DomainError(std::string(what) + " cannot nest a pair");
  };
  switch (spec.kind) {
  case Kind::powers:
    return Filtration::powers(*spec.base);
  case Kind::symbolic:
    return Filtration::symbolic(*spec.base);
  case Kind::closure:
    return Filtration::closure(*spec.base);
  case Kind::irrelevant:
    return Filtration::irrelevant(*spec.vars);
  case Kind::table:
    return Filtration::table(spec.entries);
  case Kind::symbolic_of: {
    const auto inner = build(spec.children.at(0));
    if (const auto* p = std::get_if<PairFiltration>(&inner)) return symbolic_of(*p);
    return Filtration::symbolic_of(std::get<Filtration>(inner));
  }
  case Kind::pair: {
    const auto l = build(spec.children.at(0));
    const auto r = build(spec.children.at(1));
    return PairFiltration(single(l, "pair"), single(r, "pair"));
  }
  }
  throw DomainError("unknown filtration kind");
}

FiltrationSpec spec_of(const Filtration& F) {
  FiltrationSpec spec;
  switch (F.kind()) {
  case Filtration::Kind::powers:
    spec.kind = Kind::powers;
    spec.base = *F.base();
    break;
  case Filtration::Kind::symbolic:
    spec.kind = Kind::symbolic;
    spec.base = *F.base();
    break;
  case Filtration::Kind::closure:
    spec.kind = Kind::closure;
    spec.base = *F.base();
    break;
  case Filtration::Kind::irrelevant:
    spec.kind = Kind::irrelevant;
    spec.vars = F.context();
    break;
  case Filtration::Kind::table:
    spec.kind = Kind::table;
    spec.vars = F.context();
    spec.entries.assign(F.table_entries().begin(), F.table_entries().end());
    break;
  case Filtration::Kind::symbolic_of:
    spec.kind = Kind::symbolic_of;
    spec.children.push_back(spec_of(*F.inner()));
    break;
  }
  return spec;
}

} // namespace filtra
