#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace closedpoly {

/// Sparse polynomial over Q in a fixed number of variables. Stored
/// coefficients are never zero; equality is structural (same nvars, same
/// terms).
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, CanonicalLess>;

    /// The zero polynomial in nvars variables (nvars >= 1).
    explicit MultiPoly(std::size_t nvars = 1);
    MultiPoly(std::size_t nvars, std::span<const std::pair<Monomial, Rational>> terms);
    MultiPoly(std::size_t nvars, std::initializer_list<std::pair<Monomial, Rational>> terms);

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly term(const Monomial& m, const Rational& c);
    /// x_{index+1}
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// True for the zero polynomial and for nonzero constants.
    bool is_constant() const noexcept;
    std::uint64_t total_degree() const noexcept;

    Rational coefficient_of(const Monomial& m) const;
    Rational constant_term() const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
    MultiPoly operator-() const;

    MultiPoly pow(unsigned k) const;

    /// Formal partial derivative with respect to x_{index+1}.
    MultiPoly partial_derivative(std::size_t index) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Same polynomial viewed in more variables.
    MultiPoly extended(std::size_t nvars) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    std::size_t nvars_;
    TermMap terms_;
};

MultiPoly mul(const MultiPoly& p, const MultiPoly& q);

/// Coefficient of target in p^k, computed over the divisors of target only.
Rational coefficient_in_power(const MultiPoly& p, unsigned k, const Monomial& target);

} // namespace closedpoly
