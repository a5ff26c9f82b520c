#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace closedpoly {

using ExponentVector = std::vector<std::int64_t>;

/// Exponent vectors of monomial generators of a subalgebra, together with
/// the coordinate-sum bound used for enumeration.
struct MonoidGens {
    std::size_t nvars = 0;
    std::vector<ExponentVector> gens;
    std::int64_t bound = 0;
};

inline constexpr std::size_t kDefaultLatticeCap = 200000;

/// Builds generators with the default bound (max coordinate sum). Throws
/// DomainError for zero, negative or ragged vectors.
MonoidGens make_monoid_gens(std::vector<ExponentVector> gens, std::int64_t bound = 0);

/// Parses "a1,b1;a2,b2;...". Throws DomainError.
std::vector<ExponentVector> parse_generators(const std::string& text);

/// v in Q>=0 * gens.
bool cone_member(const ExponentVector& v, const MonoidGens& gens);

/// v in Z>=0 * gens (bounded search over coordinate sums).
bool monoid_member(const ExponentVector& v, const MonoidGens& gens);

/// Irreducible lattice points of the cone with coordinate sum <= bound, in
/// ascending coordinate-sum order. Exact for nvars <= 2.
std::vector<ExponentVector> saturation_generators(const MonoidGens& gens,
                                                  std::size_t cap = kDefaultLatticeCap);

bool is_saturated(const MonoidGens& gens, std::size_t cap = kDefaultLatticeCap);

} // namespace closedpoly
