#include "closedpoly/decompose.hpp"

#include "closedpoly/error.hpp"
#include "closedpoly/newton.hpp"
#include "closedpoly/normal_form.hpp"

namespace closedpoly {

namespace {

Monomial exponent_quotient(const Monomial& m, std::uint64_t k) {
    std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
    for (auto& e : exps) {
        e = static_cast<std::uint32_t>(e / k);
    }
    return Monomial(std::move(exps));
}

} // namespace

std::optional<std::pair<MultiPoly, UniPoly>> attempt_divisor(const MultiPoly& f_norm, std::uint64_t k,
                                                             const OrderSpec& order, std::size_t monomial_cap) {
    if (f_norm.is_constant()) {
        throw DomainError("attempt_divisor needs a non-constant polynomial");
    }
    if (!f_norm.constant_term().is_zero()) {
        throw DomainError("attempt_divisor needs a zero constant term");
    }
    const auto [lead, lead_coeff] = leading_monomial(f_norm, order);
    if (!lead_coeff.is_one()) {
        throw DomainError("attempt_divisor needs a leading-monic polynomial");
    }
    if (k < 2 || multiplicity(lead) % k != 0) {
        throw DomainError("divisor " + std::to_string(k) + " does not divide the leading multiplicity");
    }
    const auto power = static_cast<unsigned>(k);
    const std::size_t n = f_norm.nvars();

    // Step 2: h = m1 + sum alpha_j m_j. Only h^k can produce m1^(k-1) m_j,
    // and alpha_j enters that coefficient exactly as k * alpha_j.
    const Monomial m1 = exponent_quotient(lead, k);
    const Monomial m1_pow = m1.pow(k - 1);
    MultiPoly h = MultiPoly::term(m1, Rational(1));
    const Rational k_inv = Rational(static_cast<std::int64_t>(k)).inverse();
    for (const auto& mj : monomials_below(m1, order, monomial_cap)) {
        const Monomial target = m1_pow * mj;
        const Rational b = f_norm.coefficient_of(target);
        const Rational known = coefficient_in_power(h, power, target);
        h.add_term(mj, (b - known) * k_inv);
    }

    // Step 3: beta_l from the coefficient of m1^(k-l); the coefficient of
    // m1^(k-l) in h^(k-l) is 1 and h^(k-i), i > l, cannot reach it.
    std::vector<MultiPoly> h_pow;
    h_pow.reserve(power + 1);
    h_pow.push_back(MultiPoly::constant(n, Rational(1)));
    for (unsigned i = 1; i <= power; ++i) {
        h_pow.push_back(h_pow.back() * h);
    }
    std::vector<Rational> beta(power, Rational());
    beta[0] = Rational(1);
    for (unsigned l = 1; l < power; ++l) {
        const Monomial target = m1.pow(power - l);
        if (!h_pow[power - l].coefficient_of(target).is_one()) {
            throw InternalError("leading coefficient of a power of h is not 1");
        }
        Rational c = f_norm.coefficient_of(target);
        for (unsigned i = 0; i < l; ++i) {
            c -= beta[i] * h_pow[power - i].coefficient_of(target);
        }
        beta[l] = c;
    }

    // Step 4
    std::vector<Rational> outer_coeffs(power + 1);
    MultiPoly candidate(n);
    for (unsigned i = 0; i < power; ++i) {
        outer_coeffs[power - i] = beta[i];
        candidate += h_pow[power - i] * beta[i];
    }
    if (candidate != f_norm) {
        return std::nullopt;
    }
    return std::make_pair(std::move(h), UniPoly(std::move(outer_coeffs)));
}

DecompositionResult generative(const MultiPoly& f, const OrderSpec& order, const DecomposeOptions& options) {
    if (!order.is_graded()) {
        throw DomainError("decomposition needs a graded order (grlex or grevlex)");
    }
    if (f.is_constant()) {
        throw DomainError("cannot decompose a constant polynomial");
    }
    const NormalizedForm nf = normalize(f, order);
    DecompositionResult result;
    result.order = order;
    for (auto k : divisor_sequence(nf.core, order, options.pruned)) {
        auto attempt = attempt_divisor(nf.core, k, order, options.monomial_cap);
        if (!attempt) {
            result.trace.push_back({k, AttemptOutcome::mismatch});
            continue;
        }
        result.trace.push_back({k, AttemptOutcome::verified});
        result.h = std::move(attempt->first);
        result.outer = attempt->second * nf.leading_scalar + UniPoly{nf.constant_term};
        result.closed = false;
        break;
    }
    if (result.trace.empty() || result.trace.back().outcome == AttemptOutcome::mismatch) {
        result.h = nf.core;
        result.outer = UniPoly::linear(nf.leading_scalar, nf.constant_term);
        result.closed = true;
    }
    if (compose_uni(result.outer, result.h) != f) {
        throw InternalError("decomposition does not reproduce the input");
    }
    return result;
}

bool is_closed(const MultiPoly& f, const OrderSpec& order) {
    return generative(f, order).closed;
}

} // namespace closedpoly
