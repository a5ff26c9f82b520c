#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rational.hpp"

namespace closedpoly::lp {

enum class Relation { less_equal, equal, greater_equal };

/// sum_i coeffs[i] * x_i  (rel)  rhs
struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::equal;
    Rational rhs;
};

/// Finds x >= 0 satisfying every constraint, or nullopt when the system is
/// infeasible. Exact phase-1 simplex with Bland's rule, so it always
/// terminates. Every constraint must have exactly nvars coefficients.
std::optional<std::vector<Rational>> find_feasible_point(std::size_t nvars,
                                                         std::span<const Constraint> constraints);

/// Checks a candidate point against the constraints (x >= 0 included).
bool satisfies(std::span<const Rational> x, std::span<const Constraint> constraints);

} // namespace closedpoly::lp
