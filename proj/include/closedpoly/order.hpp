#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace closedpoly {

enum class OrderKind { graded_lex, graded_revlex, weighted };

/// A monomial order. Graded kinds compare total degree first; the weighted
/// kind compares <w, exponents> and breaks ties by graded-lex, which agrees
/// with the order induced by Q-independent weights on any finite support
/// where the weight functional is injective.
struct OrderSpec {
    OrderKind kind = OrderKind::graded_lex;
    std::vector<Rational> weights; // required (all > 0) iff kind == weighted

    static OrderSpec grlex() { return {}; }
    static OrderSpec grevlex() { return {OrderKind::graded_revlex, {}}; }
    static OrderSpec weighted(std::vector<Rational> w);

    bool is_graded() const noexcept { return kind != OrderKind::weighted; }
    /// "grlex", "grevlex" or "weighted(w1,...,wn)".
    std::string name() const;

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

/// Parses "grlex" or "grevlex". Throws DomainError.
OrderSpec parse_order(const std::string& name);

/// Default cap on monomials_below output.
inline constexpr std::size_t kDefaultMonomialCap = 200000;

std::strong_ordering compare(const Monomial& a, const Monomial& b, const OrderSpec& order);

/// Strict-weak "less" functor for std::sort and friends.
struct OrderLess {
    const OrderSpec* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, *order) == std::strong_ordering::less;
    }
};

/// The largest monomial of f's support and its coefficient. Throws
/// DomainError for the zero polynomial.
std::pair<Monomial, Rational> leading_monomial(const MultiPoly& f, const OrderSpec& order);

/// Monomials of f sorted descending under order.
std::vector<std::pair<Monomial, Rational>> sorted_terms(const MultiPoly& f, const OrderSpec& order);

/// Every monomial m with top > m > 1, strictly descending. Only for graded
/// orders. Throws CapacityError when C(deg(top) + n, n) exceeds cap.
std::vector<Monomial> monomials_below(const Monomial& top, const OrderSpec& order,
                                      std::size_t cap = kDefaultMonomialCap);

/// Number of monomials of total degree <= degree in nvars variables,
/// saturating at SIZE_MAX.
std::size_t count_monomials_up_to(std::size_t nvars, std::uint64_t degree);

} // namespace closedpoly
