#pragma once

#include "multipoly.hpp"
#include "order.hpp"
#include "rational.hpp"

namespace closedpoly {

/// original = leading_scalar * core + constant_term, where core is
/// leading-monic under the chosen order and has no constant term.
struct NormalizedForm {
    MultiPoly core;
    Rational leading_scalar;
    Rational constant_term;
};

/// Throws DomainError for constant input.
NormalizedForm normalize(const MultiPoly& f, const OrderSpec& order);

} // namespace closedpoly
