#pragma once

// Integral closure of monomial ideals via the Newton polyhedron
// NP(I) = conv(exponents of the generators) + R^n_{>=0}.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "filtra/lp.hpp"
#include "filtra/ring.hpp"

namespace filtra {

/// The closure is generated by the lattice points of NP(I). Minimal
/// generators never exceed the componentwise maximum generator exponent:
/// if c_i exceeds every generator's i-th exponent then c - e_i is still in
/// NP(I). Throws DomainError for the zero ideal.
MonomialIdeal integral_closure(const MonomialIdeal& I);

/// Convex weights λ on generators of I with m >= Σ λ_g g componentwise.
/// With k = denominator, Π g^{k λ_g} is a product of k generators dividing
/// m^k, so m^k ∈ I^k.
struct ClosureCertificate {
  std::vector<std::pair<Monomial, lp::Rational>> weights;
  std::uint64_t denominator = 1;

  /// Π g^{k λ_g}
  Monomial product() const;
};

std::optional<ClosureCertificate> closure_certificate(const MonomialIdeal& I, const Monomial& m);

/// Generators of I that are vertices of NP(I), canonical order.
std::vector<Exponents> newton_vertices(const MonomialIdeal& I);

} // namespace filtra
