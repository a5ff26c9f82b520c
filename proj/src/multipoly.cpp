#include "closedpoly/multipoly.hpp"

#include <algorithm>

#include "closedpoly/error.hpp"

namespace closedpoly {

namespace {

void require_same_nvars(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars() != q.nvars()) {
        throw DomainError("variable-count mismatch: " + std::to_string(p.nvars()) + " vs " +
                          std::to_string(q.nvars()));
    }
}

// Product restricted to monomials dividing bound.
MultiPoly truncated_product(const MultiPoly& p, const MultiPoly& q, const Monomial& bound) {
    MultiPoly out(p.nvars());
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            auto m = mp * mq;
            if (m.divides(bound)) {
                out.add_term(m, cp * cq);
            }
        }
    }
    return out;
}

} // namespace

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) {
        throw DomainError("a polynomial needs at least one variable");
    }
}

MultiPoly::MultiPoly(std::size_t nvars, std::span<const std::pair<Monomial, Rational>> terms)
    : MultiPoly(nvars) {
    for (const auto& [m, c] : terms) {
        add_term(m, c);
    }
}

MultiPoly::MultiPoly(std::size_t nvars, std::initializer_list<std::pair<Monomial, Rational>> terms)
    : MultiPoly(nvars, std::span<const std::pair<Monomial, Rational>>(terms.begin(), terms.size())) {}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
    MultiPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    return term(Monomial::variable(nvars, index), Rational(1));
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::uint64_t MultiPoly::total_degree() const noexcept {
    // canonical order is degree-ascending
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Rational MultiPoly::coefficient_of(const Monomial& m) const {
    if (m.nvars() != nvars_) {
        throw DomainError("monomial variable-count mismatch");
    }
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

Rational MultiPoly::constant_term() const {
    return coefficient_of(Monomial(nvars_));
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) {
        throw DomainError("monomial variable-count mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_nvars(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_nvars(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    require_same_nvars(lhs, rhs);
    MultiPoly out(lhs.nvars());
    for (const auto& [mp, cp] : lhs.terms_) {
        for (const auto& [mq, cq] : rhs.terms_) {
            out.add_term(mp * mq, cp * cq);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(nvars_, Rational(1));
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

MultiPoly MultiPoly::partial_derivative(std::size_t index) const {
    if (index >= nvars_) {
        throw DomainError("variable index out of range");
    }
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        const auto e = m[index];
        if (e == 0) {
            continue;
        }
        out.add_term(m / Monomial::variable(nvars_, index), c * Rational(static_cast<std::int64_t>(e)));
    }
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) {
        throw DomainError("evaluation point has wrong dimension");
    }
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] != 0) {
                value *= point[i].pow(m[i]);
            }
        }
        sum += value;
    }
    return sum;
}

MultiPoly MultiPoly::extended(std::size_t n) const {
    if (n == nvars_) {
        return *this;
    }
    MultiPoly out(n);
    for (const auto& [m, c] : terms_) {
        out.add_term(m.extended(n), c);
    }
    return out;
}

MultiPoly mul(const MultiPoly& p, const MultiPoly& q) {
    return p * q;
}

Rational coefficient_in_power(const MultiPoly& p, unsigned k, const Monomial& target) {
    MultiPoly relevant(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.divides(target)) {
            relevant.add_term(m, c);
        }
    }
    MultiPoly acc = MultiPoly::constant(p.nvars(), Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        acc = truncated_product(acc, relevant, target);
        if (acc.is_zero()) {
            break;
        }
    }
    return acc.coefficient_of(target);
}

} // namespace closedpoly
