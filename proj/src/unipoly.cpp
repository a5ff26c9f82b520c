#include "closedpoly/unipoly.hpp"

#include "closedpoly/error.hpp"

namespace closedpoly {

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    trim();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::identity() {
    return UniPoly{Rational(0), Rational(1)};
}

UniPoly UniPoly::linear(const Rational& a, const Rational& b) {
    return UniPoly{b, a};
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational UniPoly::leading_coefficient() const {
    return coeffs_.empty() ? Rational() : coeffs_.back();
}

bool UniPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::deflate(const Rational& root) const {
    if (coeffs_.empty()) {
        return {};
    }
    // synthetic division, highest power first
    std::vector<Rational> quotient(coeffs_.size() - 1);
    Rational carry;
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        carry = carry * root + coeffs_[i];
        quotient[i - 1] = carry;
    }
    const Rational remainder = carry * root + coeffs_[0];
    if (!remainder.is_zero()) {
        throw DomainError(root.to_string() + " is not a root");
    }
    return UniPoly(std::move(quotient));
}

std::string UniPoly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) {
            out += mag.to_string() + "*";
        }
        out += "t";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

MultiPoly compose_uni(const UniPoly& outer, const MultiPoly& inner) {
    MultiPoly acc(inner.nvars());
    const auto& c = outer.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * inner;
        acc.add_term(Monomial(inner.nvars()), *it);
    }
    return acc;
}

} // namespace closedpoly
