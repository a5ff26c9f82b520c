#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "multipoly.hpp"

namespace closedpoly {

/// 2x2 minors of the Jacobian of (f, g), keyed by 0-based (i, j), i < j:
/// df/dx_i * dg/dx_j - df/dx_j * dg/dx_i.
using MinorGrid = std::map<std::pair<std::size_t, std::size_t>, MultiPoly>;

MinorGrid jacobian_minors(const MultiPoly& f, const MultiPoly& g);

/// Algebraic dependence over Q: true iff every Jacobian minor vanishes.
bool alg_dependent(const MultiPoly& f, const MultiPoly& g);

/// D_ij(g) = df/dx_i * dg/dx_j - df/dx_j * dg/dx_i, 0-based i < j.
MultiPoly apply_derivation(const MultiPoly& f, std::size_t i, std::size_t j, const MultiPoly& g);

} // namespace closedpoly
