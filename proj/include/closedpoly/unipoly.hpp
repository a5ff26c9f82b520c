#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "multipoly.hpp"
#include "rational.hpp"

namespace closedpoly {

/// Dense univariate polynomial in t; coeffs[i] multiplies t^i. The highest
/// stored coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs);
    explicit UniPoly(std::vector<Rational> coeffs);

    /// t
    static UniPoly identity();
    /// a*t + b
    static UniPoly linear(const Rational& a, const Rational& b);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t power) const;
    Rational leading_coefficient() const;
    bool is_monic() const;

    Rational evaluate(const Rational& t) const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

    /// Exact division by (t - root); requires root to be a root.
    UniPoly deflate(const Rational& root) const;

    /// Rendering with variable name t, e.g. "t^2 + 1".
    std::string to_string() const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// F(h), evaluated by Horner's scheme.
MultiPoly compose_uni(const UniPoly& outer, const MultiPoly& inner);

} // namespace closedpoly
