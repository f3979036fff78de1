#include "filtra/lp.hpp"

#include <algorithm>

#include "filtra/errors.hpp"

namespace filtra::lp {

namespace {

bool row_less(const Inequality& a, const Inequality& b) {
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  return a.bound < b.bound;
}

/// Scales a row so its first nonzero coefficient is ±1. Returns false for
/// an all-zero row.
bool normalize(Inequality& row) {
  auto it = std::find_if(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return c != 0; });
  if (it == row.coeffs.end()) return false;
  const Rational scale = abs(*it);
  if (scale != 1) {
    for (auto& c : row.coeffs) c /= scale;
    row.bound /= scale;
  }
  return true;
}

/// Normalizes, drops trivial rows, flags contradictions, and deduplicates.
/// Among rows with identical coefficients only the tightest bound is kept.
Projection tidy(std::vector<Inequality> rows) {
  Projection out;
  for (auto& row : rows) {
    if (!normalize(row)) {
      if (row.bound < 0) out.infeasible = true;
      continue;
    }
    out.rows.push_back(std::move(row));
  }
  std::sort(out.rows.begin(), out.rows.end(), row_less);
  std::vector<Inequality> kept;
  for (auto& row : out.rows) {
    if (!kept.empty() && kept.back().coeffs == row.coeffs) continue; // sorted by bound: first is tightest
    kept.push_back(std::move(row));
  }
  out.rows = std::move(kept);
  return out;
}

} // namespace

Projection eliminate(std::span<const Inequality> rows, std::size_t var) {
  std::vector<const Inequality*> pos, neg;
  std::vector<Inequality> next;
  for (const auto& row : rows) {
    const Rational& c = row.coeffs.at(var);
    if (c > 0)
      pos.push_back(&row);
    else if (c < 0)
      neg.push_back(&row);
    else
      next.push_back(row);
  }
  for (const Inequality* p : pos)
    for (const Inequality* q : neg) {
      // p/cp + q/|cq| cancels `var`.
      const Rational sp = 1 / p->coeffs[var];
      const Rational sq = 1 / -q->coeffs[var];
      Inequality combo{std::vector<Rational>(p->coeffs.size()), p->bound * sp + q->bound * sq};
      for (std::size_t i = 0; i < combo.coeffs.size(); ++i) combo.coeffs[i] = p->coeffs[i] * sp + q->coeffs[i] * sq;
      combo.coeffs[var] = 0;
      next.push_back(std::move(combo));
    }
  return tidy(std::move(next));
}

Projection project(std::vector<Inequality> rows, std::span<const std::size_t> vars) {
  Projection current = tidy(std::move(rows));
  for (auto v : vars) {
    if (current.infeasible) return current;
    current = eliminate(current.rows, v);
  }
  return current;
}

std::optional<std::vector<Rational>> solve(std::vector<Inequality> rows, std::size_t num_vars) {
  for (const auto& r : rows)
    if (r.coeffs.size() != num_vars) throw DomainError("inequality width does not match variable count");

  // stages[j] involves variables 0..j only.
  std::vector<std::vector<Inequality>> stages(num_vars);
  Projection current = tidy(std::move(rows));
  for (std::size_t j = num_vars; j-- > 0;) {
    if (current.infeasible) return std::nullopt;
    stages[j] = current.rows;
    current = eliminate(current.rows, j);
  }
  if (current.infeasible) return std::nullopt;

  std::vector<Rational> x(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) {
    std::optional<Rational> lower, upper;
    for (const auto& row : stages[j]) {
      const Rational& c = row.coeffs[j];
      if (c == 0) continue;
      Rational rhs = row.bound;
      for (std::size_t k = 0; k < j; ++k) rhs -= row.coeffs[k] * x[k];
      const Rational v = rhs / c;
      if (c > 0) {
        if (!upper || v < *upper) upper = v;
      } else if (!lower || v > *lower) {
        lower = v;
      }
    }
    if (lower)
      x[j] = *lower;
    else if (upper)
      x[j] = *upper;
    else
      x[j] = 0;
  }
  return x;
}

namespace {

std::vector<Inequality> dominated_rows(std::span<const Exponents> points, const Exponents& target) {
  const std::size_t k = points.size();
  const std::size_t n = target.size();
  std::vector<Inequality> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality r{std::vector<Rational>(k), Rational(target[i])};
    for (std::size_t j = 0; j < k; ++j) r.coeffs[j] = points[j][i];
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < k; ++j) {
    Inequality r{std::vector<Rational>(k), Rational(0)};
    r.coeffs[j] = -1;
    rows.push_back(std::move(r));
  }
  rows.push_back({std::vector<Rational>(k, Rational(1)), Rational(1)});
  rows.push_back({std::vector<Rational>(k, Rational(-1)), Rational(-1)});
  return rows;
}

} // namespace

std::optional<std::vector<Rational>> dominated_convex_combination_fm(std::span<const Exponents> points,
                                                                      const Exponents& target) {
  if (points.empty()) return std::nullopt;
  return solve(dominated_rows(points, target), points.size());
}

std::optional<std::vector<Rational>> dominated_convex_combination(std::span<const Exponents> points,
                                                                   const Exponents& target) {
  const std::size_t k = points.size();
  if (k == 0) return std::nullopt;
  const std::size_t n = target.size();

  // Columns: λ_0..λ_{k-1}, slacks s_0..s_{n-1}, artificial a, then rhs.
  // Rows: Σ_j p_j[i] λ_j + s_i = t_i, and Σ_j λ_j + a = 1. Phase one
  // minimizes a from the basis {s, a}; all right-hand sides start >= 0.
  const std::size_t cols = k + n + 1;
  const std::size_t rhs = cols;
  const std::size_t rows = n + 1;
  std::vector<std::vector<Rational>> T(rows, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) T[i][j] = points[j][i];
    T[i][k + i] = 1;
    T[i][rhs] = target[i];
    basis[i] = k + i;
  }
  for (std::size_t j = 0; j < k; ++j) T[n][j] = 1;
  T[n][k + n] = 1;
  T[n][rhs] = 1;
  basis[n] = k + n;

  // Reduced costs of the phase-one objective (cost 1 on a).
  std::vector<Rational> d(cols + 1);
  d[k + n] = 1;
  for (std::size_t j = 0; j <= cols; ++j) d[j] -= T[n][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (T[r][enter] <= 0) continue;
      const Rational ratio = T[r][rhs] / T[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break; // unbounded direction; cannot happen as a >= 0 bounds the objective
    const Rational pivot = T[leave][enter];
    for (auto& v : T[leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      const Rational f = T[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) T[r][j] -= f * T[leave][j];
    }
    if (d[enter] != 0) {
      const Rational f = d[enter];
      for (std::size_t j = 0; j <= cols; ++j) d[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < rows; ++r) x[basis[r]] = T[r][rhs];
  if (x[k + n] != 0) return std::nullopt;
  x.resize(k);
  return x;
}

} // namespace filtra::lp
