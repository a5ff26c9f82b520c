#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "decompose.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace closedpoly {

struct RootMultiplicity {
    Rational value;
    unsigned multiplicity;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// Rational roots with multiplicities, in descending order of value.
/// Throws DomainError for the zero polynomial.
std::vector<RootMultiplicity> rational_roots(const UniPoly& g);

/// f + mu = alpha * prod (h + lambda_i)^{e_i} * residual(h), split over Q.
struct FamilyFactorization {
    Rational mu;
    Rational alpha;
    std::vector<RootMultiplicity> shifts; // (lambda, e), descending lambda
    UniPoly residual;                     // monic, no rational roots
    bool verified = false;
};

/// Splits F(t) + mu over Q and checks the product identity against f + mu
/// exactly. Throws InternalError if the identity fails.
FamilyFactorization factor_shift(const DecompositionResult& result, const Rational& mu);

/// { -F(-lambda) : lambda in E(h) }
std::set<Rational> exceptional_image(const UniPoly& outer, const std::set<Rational>& eh);

struct FactorSpec {
    std::uint64_t degree;
    std::uint64_t multiplicity;
};

struct DecompositionEntry {
    std::optional<Rational> shift; // nullopt marks the generic fiber
    std::vector<FactorSpec> factors;
};

struct DecompositionData {
    std::vector<DecompositionEntry> entries;
    std::optional<std::uint64_t> d;
};

enum class SteinMode { h_form, f_form };

struct SteinReport {
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

/// Evaluates both sides of the Stein-Lorenzini-Najib inequality (h-form)
/// or its f-form counterpart on supplied factorization data. Throws
/// DomainError for malformed data.
SteinReport stein_check(const DecompositionData& data, SteinMode mode);

/// Parses lines "shift: deg^mult, deg^mult, ..."; shift is a rational or
/// "generic"/"*". Blank lines and '#' comments are skipped. Throws ParseError.
DecompositionData parse_decomposition_data(std::string_view text);

} // namespace closedpoly
