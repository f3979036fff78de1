#pragma once

// Exact linear feasibility over the rationals: Fourier-Motzkin elimination
// and a phase-one simplex with Bland's rule.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "filtra/ring.hpp"

namespace filtra::lp {

using Rational = boost::multiprecision::cpp_rational;

/// coeffs · x <= bound
struct Inequality {
  std::vector<Rational> coeffs;
  Rational bound;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Result of eliminating variables: the projected rows, or infeasible when a
/// row 0 <= b with b < 0 appeared.
struct Projection {
  std::vector<Inequality> rows;
  bool infeasible = false;
};

/// Eliminates `var` from `rows` (all rows must have the same width). The
/// surviving rows are scaled so that their first nonzero coefficient has
/// absolute value 1, deduplicated, and trivial rows 0 <= b >= 0 removed.
Projection eliminate(std::span<const Inequality> rows, std::size_t var);

/// Eliminates every variable in `vars`, in order.
Projection project(std::vector<Inequality> rows, std::span<const std::size_t> vars);

/// A point satisfying every row, found by elimination of all variables
/// followed by back-substitution, or nullopt when the system is infeasible.
std::optional<std::vector<Rational>> solve(std::vector<Inequality> rows, std::size_t num_vars);

/// Weights λ_j >= 0 with Σ λ_j = 1 and Σ λ_j points_j <= target
/// componentwise, i.e. a certificate that `target` lies in the convex hull
/// of `points` plus the nonnegative orthant. Solved by simplex, which stays
/// cheap for many points; the returned λ is a basic solution.
std::optional<std::vector<Rational>> dominated_convex_combination(std::span<const Exponents> points,
                                                                   const Exponents& target);

/// Same system solved by elimination; used to cross-check the simplex.
std::optional<std::vector<Rational>> dominated_convex_combination_fm(std::span<const Exponents> points,
                                                                      const Exponents& target);

} // namespace filtra::lp
