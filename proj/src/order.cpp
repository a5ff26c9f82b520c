#include "closedpoly/order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "closedpoly/error.hpp"

namespace closedpoly {

namespace {

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) {
            return a[i] <=> b[i];
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_revlex_tail(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) {
            return b[i] <=> a[i];
        }
    }
    return std::strong_ordering::equal;
}

void enumerate(std::size_t nvars, std::size_t index, std::uint64_t remaining,
               std::vector<std::uint32_t>& current, std::vector<Monomial>& out) {
    if (index == nvars) {
        out.emplace_back(current);
        return;
    }
    for (std::uint64_t e = 0; e <= remaining; ++e) {
        current[index] = static_cast<std::uint32_t>(e);
        enumerate(nvars, index + 1, remaining - e, current, out);
    }
    current[index] = 0;
}

} // namespace

OrderSpec OrderSpec::weighted(std::vector<Rational> w) {
    for (const auto& x : w) {
        if (x.sign() <= 0) {
            throw DomainError("order weights must be positive");
        }
    }
    return {OrderKind::weighted, std::move(w)};
}

std::string OrderSpec::name() const {
    switch (kind) {
    case OrderKind::graded_lex:
        return "grlex";
    case OrderKind::graded_revlex:
        return "grevlex";
    case OrderKind::weighted:
        break;
    }
    std::string out = "weighted(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        out += (i ? "," : "") + weights[i].to_string();
    }
    return out + ")";
}

OrderSpec parse_order(const std::string& name) {
    if (name == "grlex") {
        return OrderSpec::grlex();
    }
    if (name == "grevlex") {
        return OrderSpec::grevlex();
    }
    throw DomainError("unknown order '" + name + "' (expected grlex or grevlex)");
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const OrderSpec& order) {
    if (a.nvars() != b.nvars()) {
        throw DomainError("monomial variable-count mismatch");
    }
    if (order.kind == OrderKind::weighted) {
        if (order.weights.size() != a.nvars()) {
            throw DomainError("weighted order needs one weight per variable");
        }
        Rational wa;
        Rational wb;
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            wa += order.weights[i] * Rational(static_cast<std::int64_t>(a[i]));
            wb += order.weights[i] * Rational(static_cast<std::int64_t>(b[i]));
        }
        if (auto c = wa <=> wb; c != 0) {
            return c;
        }
    }
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    return order.kind == OrderKind::graded_revlex ? compare_revlex_tail(a, b) : compare_lex(a, b);
}

std::pair<Monomial, Rational> leading_monomial(const MultiPoly& f, const OrderSpec& order) {
    if (f.is_zero()) {
        throw DomainError("leading monomial of the zero polynomial");
    }
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it) {
        if (compare(it->first, best->first, order) == std::strong_ordering::greater) {
            best = it;
        }
    }
    return *best;
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const MultiPoly& f, const OrderSpec& order) {
    std::vector<std::pair<Monomial, Rational>> out(f.terms().begin(), f.terms().end());
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        return compare(x.first, y.first, order) == std::strong_ordering::greater;
    });
    return out;
}

std::size_t count_monomials_up_to(std::size_t nvars, std::uint64_t degree) {
    // C(degree + nvars, nvars) as a running product of binomials; i / g
    // always divides degree + i because every prefix is an integer
    constexpr auto saturated = std::numeric_limits<std::size_t>::max();
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= nvars; ++i) {
        const std::uint64_t g = std::gcd(result, i);
        std::uint64_t next = 0;
        if (degree > saturated - i || __builtin_mul_overflow(result / g, (degree + i) / (i / g), &next)) {
            return saturated;
        }
        result = next;
    }
    return static_cast<std::size_t>(result);
}

std::vector<Monomial> monomials_below(const Monomial& top, const OrderSpec& order, std::size_t cap) {
    if (!order.is_graded()) {
        throw DomainError("monomials_below needs a graded order");
    }
    const std::size_t nvars = top.nvars();
    const std::uint64_t degree = top.degree();
    const std::size_t estimate = count_monomials_up_to(nvars, degree);
    if (estimate > cap) {
        throw CapacityError("monomial enumeration below " + top.to_string() + " needs " +
                            std::to_string(estimate) + " monomials (cap " + std::to_string(cap) + ")");
    }
    std::vector<Monomial> all;
    all.reserve(estimate);
    std::vector<std::uint32_t> current(nvars, 0);
    enumerate(nvars, 0, degree, current, all);
    std::vector<Monomial> out;
    for (auto& m : all) {
        if (!m.is_unit() && compare(m, top, order) == std::strong_ordering::less) {
            out.push_back(std::move(m));
        }
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return compare(a, b, order) == std::strong_ordering::greater;
    });
    return out;
}

} // namespace closedpoly
