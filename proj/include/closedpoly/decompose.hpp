#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "multipoly.hpp"
#include "order.hpp"
#include "unipoly.hpp"

namespace closedpoly {

enum class AttemptOutcome { verified, mismatch };

struct TraceEntry {
    std::uint64_t divisor;
    AttemptOutcome outcome;
    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// f = outer(h) with h the generative polynomial: h(0) = 0 and h is
/// leading-monic under `order`.
struct DecompositionResult {
    MultiPoly h;
    UniPoly outer;
    bool closed = false;
    std::vector<TraceEntry> trace; // descending divisors, in attempt order
    OrderSpec order;
};

struct DecomposeOptions {
    bool pruned = true; // walk D1(f) instead of D(f)
    std::size_t monomial_cap = kDefaultMonomialCap;
};

/// One pass of the coefficient-matching scheme for a fixed degree k of the
/// outer polynomial. f_norm must be leading-monic with zero constant term,
/// and k must divide the multiplicity of its leading monomial. Returns
/// (h, F) with F monic, F(0) = 0, deg F = k and f_norm = F(h), or nullopt
/// when the candidate fails verification.
std::optional<std::pair<MultiPoly, UniPoly>> attempt_divisor(const MultiPoly& f_norm, std::uint64_t k,
                                                             const OrderSpec& order,
                                                             std::size_t monomial_cap = kDefaultMonomialCap);

/// Generative polynomial of an arbitrary non-constant f. The order must be
/// graded. Throws DomainError for constant f or a weighted order.
DecompositionResult generative(const MultiPoly& f, const OrderSpec& order = OrderSpec::grlex(),
                               const DecomposeOptions& options = {});

bool is_closed(const MultiPoly& f, const OrderSpec& order = OrderSpec::grlex());

} // namespace closedpoly
