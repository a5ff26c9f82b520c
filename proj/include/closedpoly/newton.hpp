#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monomial.hpp"
#include "multipoly.hpp"
#include "order.hpp"
#include "rational.hpp"

namespace closedpoly {

/// Strictly positive weights, one per variable.
struct WeightVector {
    std::vector<Rational> weights;
    Rational apply(const Monomial& m) const;
};

/// Newton-polytope data of a polynomial under one order.
struct NewtonSummary {
    std::vector<Monomial> support;        // canonical order
    std::vector<Monomial> v0;             // canonical order
    std::uint64_t d_leading = 0;          // multiplicity of the leading monomial
    std::uint64_t d1 = 0;                 // GCD of multiplicities over v0
    std::vector<std::uint64_t> divisors_plain;  // D(f)
    std::vector<std::uint64_t> divisors_pruned; // D1(f)
};

/// GCD of the exponents. Throws DomainError for the unit monomial.
std::uint64_t multiplicity(const Monomial& m);

/// All divisors of n greater than 1, descending.
std::vector<std::uint64_t> divisors_above_one(std::uint64_t n);

/// Support points that are the leading monomial under some monomial order,
/// via positive strict-separation weights (one LP per candidate).
std::vector<Monomial> v0_by_weights(std::span<const Monomial> support);

/// Same set via the primal route: hull vertices (v is not a convex
/// combination of the other points), filtered by dominance against the
/// other vertices and then against the whole hull.
std::vector<Monomial> v0_by_hull(std::span<const Monomial> support);

/// Vertices of the convex hull of the support.
std::vector<Monomial> hull_vertices(std::span<const Monomial> support);

/// v0_by_weights on f's support, cross-checked against v0_by_hull.
/// Throws InternalError if the two routes disagree.
std::vector<Monomial> v0_set(const MultiPoly& f);

/// Weights w >= 1 with <w, v - u> >= 1 for every other support point u, or
/// nullopt when v is not a potential leading term.
std::optional<WeightVector> realizing_weights(std::span<const Monomial> support, const Monomial& v);
std::optional<WeightVector> realizing_weights(const MultiPoly& f, const Monomial& v);

/// GCD of multiplicities over V0 (d1). Tests V0 membership lazily, only for
/// points whose multiplicity could still lower the running GCD.
std::uint64_t pruned_multiplicity(const MultiPoly& f, const OrderSpec& order);

/// D(f) (pruned = false) or D1(f) (pruned = true); empty means f is closed.
std::vector<std::uint64_t> divisor_sequence(const MultiPoly& f, const OrderSpec& order, bool pruned);

/// Full summary including V0; throws DomainError for constant f.
NewtonSummary analyze(const MultiPoly& f, const OrderSpec& order);

} // namespace closedpoly
