#include "filtra/closure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "filtra/errors.hpp"

namespace filtra {

namespace {

using lp::Rational;
using boost::multiprecision::cpp_int;

/// Facet inequality a·c >= b of a Newton polyhedron, a >= 0.
struct Facet {
  std::vector<std::int64_t> a;
  std::int64_t b;

  bool satisfied_by(const Exponents& c) const {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < a.size(); ++i) lhs += a[i] * static_cast<std::int64_t>(c[i]);
    return lhs >= b;
  }
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

/// Normal of the hyperplane through the origin orthogonal to every row, if
/// the rows have rank n - 1.
std::optional<std::vector<Rational>> normal_of(std::vector<std::vector<Rational>> rows, std::size_t n) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Rational f = rows[k][c];
      for (std::size_t j = 0; j < n; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r + 1 != n) return std::nullopt;
  std::size_t free = 0;
  while (free < n && std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) ++free;
  std::vector<Rational> a(n);
  a[free] = 1;
  for (std::size_t k = 0; k < r; ++k) a[pivot_col[k]] = -rows[k][free];
  return a;
}

/// H-representation of conv(vertices) + orthant. Every facet is spanned by
/// n affinely independent elements among the vertices and the coordinate
/// directions, at least one of them a vertex, so all such n-subsets are
/// tried and the valid supporting hyperplanes kept.
std::vector<Facet> newton_facets(std::span<const Exponents> vertices, std::size_t n) {
  const std::size_t k = vertices.size();
  const std::size_t total = k + n; // vertices, then directions e_0..e_{n-1}
  std::vector<Facet> out;
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  if (total < n) return out;
  for (;;) {
    if (pick[0] < k) {
      const Exponents& v0 = vertices[pick[0]];
      std::vector<std::vector<Rational>> rows;
      for (std::size_t t = 1; t < n; ++t) {
        std::vector<Rational> row(n);
        if (pick[t] < k)
          for (std::size_t i = 0; i < n; ++i)
            row[i] = Rational(static_cast<std::int64_t>(vertices[pick[t]][i]) - static_cast<std::int64_t>(v0[i]));
        else
          row[pick[t] - k] = 1;
        rows.push_back(std::move(row));
      }
      if (auto normal = normal_of(std::move(rows), n)) {
        cpp_int scale = 1;
        for (const auto& q : *normal) scale = boost::multiprecision::lcm(scale, denominator(q));
        std::vector<cpp_int> ints;
        cpp_int g = 0;
        for (const auto& q : *normal) {
          ints.push_back(numerator(Rational(q * scale)));
          g = boost::multiprecision::gcd(g, ints.back());
        }
        const bool nonneg = std::all_of(ints.begin(), ints.end(), [](const cpp_int& x) { return x >= 0; });
        const bool nonpos = std::all_of(ints.begin(), ints.end(), [](const cpp_int& x) { return x <= 0; });
        if (nonneg || nonpos) {
          Facet f;
          for (const auto& x : ints) {
            const cpp_int v = (nonneg ? x : cpp_int(-x)) / g;
            if (v > std::numeric_limits<std::int32_t>::max()) throw ExponentOverflow("Newton facet normal too large");
            f.a.push_back(static_cast<std::int64_t>(v));
          }
          f.b = 0;
          for (std::size_t i = 0; i < n; ++i) f.b += f.a[i] * static_cast<std::int64_t>(v0[i]);
          const bool valid = std::all_of(vertices.begin(), vertices.end(), [&](const Exponents& v) { return f.satisfied_by(v); });
          if (valid) out.push_back(std::move(f));
        }
      }
    }
    std::size_t t = n;
    while (t > 0 && pick[t - 1] == total - n + (t - 1)) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t u = t; u < n; ++u) pick[u] = pick[u - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

std::vector<Exponents> newton_vertices(const MonomialIdeal& I) {
  // Far points first: they are usually the vertices, so the set tested
  // against stays small.
  std::vector<Exponents> order(I.generators().begin(), I.generators().end());
  auto norm2 = [](const Exponents& e) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += std::uint64_t{e[i]} * e[i];
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](const Exponents& a, const Exponents& b) { return norm2(a) > norm2(b); });
  std::vector<Exponents> vertices;
  for (const auto& g : order)
    if (vertices.empty() || !lp::dominated_convex_combination(vertices, g)) vertices.push_back(g);
  // A later generator can swallow an earlier one.
  for (bool changed = true; changed && vertices.size() > 1;) {
    changed = false;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      std::vector<Exponents> rest;
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (i != j) rest.push_back(vertices[i]);
      if (lp::dominated_convex_combination(rest, vertices[j])) {
        vertices = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("integral_closure: the zero ideal");
  if (I.is_unit()) return I;
  const std::size_t n = I.context().size();
  const auto vertices = newton_vertices(I);
  const auto facets = newton_facets(vertices, n);
  const Exponents bound = I.max_exponents();

  // Odometer order visits every divisor of c before c, so nothing accepted
  // later can divide something accepted earlier.
  std::vector<Exponents> accepted;
  Exponents c(n);
  for (;;) {
    const bool covered = std::any_of(accepted.begin(), accepted.end(), [&](const Exponents& a) { return a.divides(c); });
    if (!covered) {
      const bool inside =
          I.contains(c) || std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.satisfied_by(c); });
      if (inside) accepted.push_back(c);
    }
    std::size_t i = 0;
    while (i < n && c[i] == bound[i]) c.set(i++, 0);
    if (i == n) break;
    c.set(i, c[i] + 1);
  }
  return MonomialIdeal(I.context(), std::move(accepted));
}

Monomial ClosureCertificate::product() const {
  if (weights.empty()) throw DomainError("empty closure certificate");
  Monomial out = Monomial::one(weights.front().first.context());
  for (const auto& [g, w] : weights) {
    const Rational scaled = w * denominator;
    const auto exponent = static_cast<Exponent>(numerator(scaled));
    out = out * Monomial(g.context(), g.exponents().pow(exponent));
  }
  return out;
}

std::optional<ClosureCertificate> closure_certificate(const MonomialIdeal& I, const Monomial& m) {
  require_same_context(I.context(), m.context());
  if (I.is_zero()) return std::nullopt;
  const auto vertices = newton_vertices(I);
  const auto lambda = lp::dominated_convex_combination(vertices, m.exponents());
  if (!lambda) return std::nullopt;
  ClosureCertificate cert;
  cpp_int k = 1;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if ((*lambda)[j] == 0) continue;
    cert.weights.emplace_back(Monomial(I.context(), vertices[j]), (*lambda)[j]);
    k = boost::multiprecision::lcm(k, denominator((*lambda)[j]));
  }
  cert.denominator = static_cast<std::uint64_t>(k);
  return cert;
}

} // namespace filtra
