#include "closedpoly/newton.hpp"

#include <algorithm>
#include <numeric>

#include "closedpoly/error.hpp"
#include "closedpoly/lp.hpp"

namespace closedpoly {

namespace {

Rational as_rational(std::int64_t v) {
    return Rational(v);
}

std::int64_t diff(const Monomial& a, const Monomial& b, std::size_t s) {
    return static_cast<std::int64_t>(a[s]) - static_cast<std::int64_t>(b[s]);
}

// Support points not strictly dominated by another support point. A
// dominated point never maximizes a positive functional, and separation
// constraints against dominated points follow from those against their
// dominators.
std::vector<Monomial> maximal_points(std::span<const Monomial> support) {
    std::vector<Monomial> out;
    for (const auto& v : support) {
        const bool dominated = std::any_of(support.begin(), support.end(),
                                           [&](const Monomial& u) { return u.strictly_dominates(v); });
        if (!dominated) {
            out.push_back(v);
        }
    }
    return out;
}

std::optional<WeightVector> separate(std::span<const Monomial> maximal, const Monomial& v) {
    const std::size_t n = v.nvars();
    // w = 1 + y with y >= 0; <w, v - u> >= 1 becomes <y, v - u> >= 1 - sum(v - u)
    std::vector<lp::Constraint> constraints;
    for (const auto& u : maximal) {
        if (u == v) {
            continue;
        }
        lp::Constraint c;
        c.rel = lp::Relation::greater_equal;
        std::int64_t total = 0;
        for (std::size_t s = 0; s < n; ++s) {
            const auto d = diff(v, u, s);
            c.coeffs.push_back(as_rational(d));
            total += d;
        }
        c.rhs = as_rational(1 - total);
        constraints.push_back(std::move(c));
    }
    auto y = lp::find_feasible_point(n, constraints);
    if (!y) {
        return std::nullopt;
    }
    WeightVector w;
    for (auto& yi : *y) {
        w.weights.push_back(yi + Rational(1));
    }
    return w;
}

void require_member(std::span<const Monomial> support, const Monomial& v) {
    if (std::find(support.begin(), support.end(), v) == support.end()) {
        throw DomainError(v.to_string() + " is not in the support");
    }
}

void require_uniform(std::span<const Monomial> support) {
    for (const auto& m : support) {
        if (m.nvars() != support.front().nvars()) {
            throw DomainError("support points have different dimensions");
        }
    }
}

// Is there a convex combination of the other points that equals v
// (as_equality) or dominates it coordinatewise?
bool covered_by_others(std::span<const Monomial> support, const Monomial& v, bool as_equality) {
    std::vector<const Monomial*> others;
    for (const auto& u : support) {
        if (u != v) {
            others.push_back(&u);
        }
    }
    if (others.empty()) {
        return false;
    }
    const std::size_t n = v.nvars();
    std::vector<lp::Constraint> constraints;
    for (std::size_t s = 0; s < n; ++s) {
        lp::Constraint c;
        c.rel = as_equality ? lp::Relation::equal : lp::Relation::greater_equal;
        for (const auto* u : others) {
            c.coeffs.push_back(as_rational((*u)[s]));
        }
        c.rhs = as_rational(v[s]);
        constraints.push_back(std::move(c));
    }
    lp::Constraint simplex;
    simplex.rel = lp::Relation::equal;
    simplex.coeffs.assign(others.size(), Rational(1));
    simplex.rhs = Rational(1);
    constraints.push_back(std::move(simplex));
    return lp::find_feasible_point(others.size(), constraints).has_value();
}

std::vector<Monomial> support_of(const MultiPoly& f) {
    std::vector<Monomial> out;
    out.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        out.push_back(m);
    }
    return out;
}

void sort_canonical(std::vector<Monomial>& v) {
    std::sort(v.begin(), v.end(), CanonicalLess{});
}

} // namespace

Rational WeightVector::apply(const Monomial& m) const {
    if (weights.size() != m.nvars()) {
        throw DomainError("weight vector has wrong dimension");
    }
    Rational sum;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        sum += weights[i] * Rational(static_cast<std::int64_t>(m[i]));
    }
    return sum;
}

std::uint64_t multiplicity(const Monomial& m) {
    std::uint64_t g = 0;
    for (auto e : m.exponents()) {
        g = std::gcd(g, std::uint64_t{e});
    }
    if (g == 0) {
        throw DomainError("multiplicity of the unit monomial is undefined");
    }
    return g;
}

std::vector<std::uint64_t> divisors_above_one(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        if (d > 1) {
            out.push_back(d);
        }
        if (n / d != d && n / d > 1) {
            out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Monomial> v0_by_weights(std::span<const Monomial> support) {
    require_uniform(support);
    const auto maximal = maximal_points(support);
    std::vector<Monomial> out;
    for (const auto& v : maximal) {
        if (separate(maximal, v)) {
            out.push_back(v);
        }
    }
    sort_canonical(out);
    return out;
}

std::vector<Monomial> hull_vertices(std::span<const Monomial> support) {
    require_uniform(support);
    std::vector<Monomial> out;
    for (const auto& v : support) {
        if (!covered_by_others(support, v, true)) {
            out.push_back(v);
        }
    }
    sort_canonical(out);
    return out;
}

std::vector<Monomial> v0_by_hull(std::span<const Monomial> support) {
    const auto vertices = hull_vertices(support);
    std::vector<Monomial> out;
    for (const auto& v : vertices) {
        const bool vertex_dominated = std::any_of(vertices.begin(), vertices.end(),
                                                  [&](const Monomial& u) { return u.strictly_dominates(v); });
        if (vertex_dominated) {
            continue;
        }
        // a vertex can escape every other vertex yet sit below an edge point
        if (covered_by_others(support, v, false)) {
            continue;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Monomial> v0_set(const MultiPoly& f) {
    if (f.is_zero()) {
        throw DomainError("V0 of the zero polynomial");
    }
    const auto support = support_of(f);
    auto by_weights = v0_by_weights(support);
    auto by_hull = v0_by_hull(support);
    if (by_weights != by_hull) {
        throw InternalError("weight and hull characterizations of V0 disagree");
    }
    return by_weights;
}

std::optional<WeightVector> realizing_weights(std::span<const Monomial> support, const Monomial& v) {
    require_uniform(support);
    require_member(support, v);
    const auto maximal = maximal_points(support);
    if (std::find(maximal.begin(), maximal.end(), v) == maximal.end()) {
        return std::nullopt;
    }
    auto w = separate(maximal, v);
    if (w) {
        const Rational top = w->apply(v);
        for (const auto& u : support) {
            if (u != v && !(w->apply(u) < top)) {
                throw InternalError("realizing weights fail strict separation");
            }
        }
    }
    return w;
}

std::optional<WeightVector> realizing_weights(const MultiPoly& f, const Monomial& v) {
    return realizing_weights(support_of(f), v);
}

std::uint64_t pruned_multiplicity(const MultiPoly& f, const OrderSpec& order) {
    if (f.is_constant()) {
        throw DomainError("constant polynomial has no leading monomial of positive degree");
    }
    const auto support = support_of(f);
    const auto maximal = maximal_points(support);
    std::uint64_t g = multiplicity(leading_monomial(f, order).first);
    for (const auto& m : maximal) {
        if (g == 1) {
            break;
        }
        if (m.is_unit()) {
            continue;
        }
        const auto d = multiplicity(m);
        if (d % g == 0) {
            continue;
        }
        if (separate(maximal, m)) {
            g = std::gcd(g, d);
        }
    }
    return g;
}

std::vector<std::uint64_t> divisor_sequence(const MultiPoly& f, const OrderSpec& order, bool pruned) {
    if (f.is_constant()) {
        throw DomainError("divisor sequence of a constant polynomial");
    }
    const auto d = pruned ? pruned_multiplicity(f, order) : multiplicity(leading_monomial(f, order).first);
    return divisors_above_one(d);
}

NewtonSummary analyze(const MultiPoly& f, const OrderSpec& order) {
    if (f.is_constant()) {
        throw DomainError("Newton analysis of a constant polynomial");
    }
    NewtonSummary s;
    s.support = support_of(f);
    s.v0 = v0_set(f);
    s.d_leading = multiplicity(leading_monomial(f, order).first);
    s.d1 = 0;
    for (const auto& v : s.v0) {
        s.d1 = std::gcd(s.d1, multiplicity(v));
    }
    if (s.d_leading % s.d1 != 0 || s.d1 != pruned_multiplicity(f, order)) {
        throw InternalError("d1 inconsistent with the leading multiplicity");
    }
    s.divisors_plain = divisors_above_one(s.d_leading);
    s.divisors_pruned = divisors_above_one(s.d1);
    return s;
}

} // namespace closedpoly
