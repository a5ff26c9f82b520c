#include "closedpoly/family.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <string>

#include "closedpoly/error.hpp"

namespace closedpoly {

namespace {

// Prime factorization: trial division by small numbers, then Pollard rho
// (Brent variant) for whatever is left.
void pollard_factor(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) {
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2;
        mpz_class y = 2;
        mpz_class d = 1;
        auto step = [&](mpz_class& v) { v = (v * v + c) % n; };
        while (d == 1) {
            step(x);
            step(y);
            step(y);
            mpz_class delta = x - y;
            mpz_gcd(d.get_mpz_t(), delta.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) {
            pollard_factor(d, out);
            pollard_factor(n / d, out);
            return;
        }
    }
}

std::map<mpz_class, unsigned> prime_factors(mpz_class n) {
    std::map<mpz_class, unsigned> out;
    n = abs(n);
    for (unsigned long p = 2; p < 10000 && p * p <= n; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n > 1) {
        pollard_factor(n, out);
    }
    return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : prime_factors(n)) {
        const std::size_t base = out.size();
        mpz_class power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * power);
            }
        }
    }
    return out;
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return std::string(s);
}

std::uint64_t parse_positive(const std::string& text, std::size_t line, std::size_t column) {
    if (text.empty() || text.size() > 18 ||
        !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("expected a positive integer, got '" + text + "'", line, column);
    }
    const auto v = std::stoull(text);
    if (v == 0) {
        throw ParseError("expected a positive integer, got '" + text + "'", line, column);
    }
    return v;
}

} // namespace

std::vector<RootMultiplicity> rational_roots(const UniPoly& g) {
    if (g.is_zero()) {
        throw DomainError("rational roots of the zero polynomial");
    }
    std::vector<RootMultiplicity> roots;
    UniPoly rest = g;
    unsigned zero_mult = 0;
    while (rest.degree() > 0 && rest.coefficient(0).is_zero()) {
        rest = rest.deflate(Rational(0));
        ++zero_mult;
    }
    if (zero_mult > 0) {
        roots.push_back({Rational(0), zero_mult});
    }
    if (rest.degree() > 0) {
        mpz_class scale = 1;
        for (const auto& c : rest.coeffs()) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.denominator().get_mpz_t());
        }
        const mpz_class constant = (rest.coefficient(0) * Rational(scale)).numerator();
        const mpz_class leading = (rest.leading_coefficient() * Rational(scale)).numerator();
        const auto numerators = positive_divisors(constant);
        const auto denominators = positive_divisors(leading);
        std::vector<Rational> candidates;
        for (const auto& p : numerators) {
            for (const auto& q : denominators) {
                candidates.emplace_back(p, q);
                candidates.emplace_back(-p, q);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            unsigned mult = 0;
            while (rest.degree() > 0 && rest.evaluate(r).is_zero()) {
                rest = rest.deflate(r);
                ++mult;
            }
            if (mult > 0) {
                roots.push_back({r, mult});
            }
            if (rest.degree() <= 0) {
                break;
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
    return roots;
}

FamilyFactorization factor_shift(const DecompositionResult& result, const Rational& mu) {
    const UniPoly shifted = result.outer + UniPoly{mu};
    if (shifted.degree() < 1) {
        throw DomainError("outer polynomial must be non-constant");
    }
    FamilyFactorization out;
    out.mu = mu;
    out.alpha = shifted.leading_coefficient();
    UniPoly residual = shifted * out.alpha.inverse();
    for (const auto& root : rational_roots(shifted)) {
        for (unsigned i = 0; i < root.multiplicity; ++i) {
            residual = residual.deflate(root.value);
        }
        out.shifts.push_back({-root.value, root.multiplicity});
    }
    std::sort(out.shifts.begin(), out.shifts.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
    out.residual = std::move(residual);

    const std::size_t n = result.h.nvars();
    const MultiPoly target = compose_uni(result.outer, result.h) + MultiPoly::constant(n, mu);
    MultiPoly product = compose_uni(out.residual, result.h) * out.alpha;
    for (const auto& s : out.shifts) {
        product = product * (result.h + MultiPoly::constant(n, s.value)).pow(s.multiplicity);
    }
    out.verified = product == target;
    if (!out.verified) {
        throw InternalError("shift factorization does not reproduce f + mu");
    }
    return out;
}

std::set<Rational> exceptional_image(const UniPoly& outer, const std::set<Rational>& eh) {
    std::set<Rational> out;
    for (const auto& lambda : eh) {
        out.insert(-outer.evaluate(-lambda));
    }
    return out;
}

SteinReport stein_check(const DecompositionData& data, SteinMode mode) {
    if (data.entries.empty()) {
        throw DomainError("decomposition data has no entries");
    }
    if (mode == SteinMode::f_form && (!data.d || *data.d == 0)) {
        throw DomainError("f-form needs the generic factor degree d");
    }
    std::optional<std::uint64_t> total_degree;
    std::uint64_t min_degree_sum = std::numeric_limits<std::uint64_t>::max();
    Rational lhs;
    std::vector<std::pair<bool, std::uint64_t>> counts; // (generic, n)
    for (const auto& entry : data.entries) {
        if (entry.factors.empty()) {
            throw DomainError("entry without factors");
        }
        std::uint64_t degree_sum = 0;
        std::uint64_t total = 0;
        for (const auto& factor : entry.factors) {
            if (factor.degree == 0 || factor.multiplicity == 0) {
                throw DomainError("factor degrees and multiplicities must be positive");
            }
            if (mode == SteinMode::f_form && factor.degree > *data.d) {
                throw DomainError("factor degree " + std::to_string(factor.degree) + " exceeds d = " +
                                  std::to_string(*data.d));
            }
            degree_sum += factor.degree;
            total += factor.degree * factor.multiplicity;
        }
        if (total_degree && *total_degree != total) {
            throw DomainError("entries disagree on the total degree (" + std::to_string(*total_degree) + " vs " +
                              std::to_string(total) + ")");
        }
        total_degree = total;
        min_degree_sum = std::min(min_degree_sum, degree_sum);
        counts.emplace_back(!entry.shift.has_value(), entry.factors.size());
    }
    const Rational generic_count = mode == SteinMode::f_form
                                       ? Rational(static_cast<std::int64_t>(*total_degree)) /
                                             Rational(static_cast<std::int64_t>(*data.d))
                                       : Rational(1);
    for (const auto& [generic, n] : counts) {
        if (!generic) {
            lhs += Rational(static_cast<std::int64_t>(n)) - generic_count;
        }
    }
    SteinReport report;
    report.lhs = lhs;
    report.rhs = Rational(static_cast<std::int64_t>(min_degree_sum));
    report.holds = report.lhs < report.rhs;
    return report;
}

DecompositionData parse_decomposition_data(std::string_view text) {
    DecompositionData data;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (trim(line).empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("expected 'shift: deg^mult, ...'", line_no, 1);
        }
        DecompositionEntry entry;
        const std::string shift = trim(line.substr(0, colon));
        if (shift != "generic" && shift != "*") {
            try {
                entry.shift = Rational::from_string(shift);
            } catch (const DomainError&) {
                throw ParseError("bad shift value '" + shift + "'", line_no, 1);
            }
        }
        std::size_t pos = colon + 1;
        while (pos <= line.size()) {
            const auto comma = std::min(line.find(',', pos), line.size());
            const std::string item = trim(line.substr(pos, comma - pos));
            const std::size_t column = pos + 1;
            const auto caret = item.find('^');
            FactorSpec spec{};
            spec.degree = parse_positive(trim(item.substr(0, caret)), line_no, column);
            spec.multiplicity =
                caret == std::string::npos ? 1 : parse_positive(trim(item.substr(caret + 1)), line_no, column);
            entry.factors.push_back(spec);
            pos = comma + 1;
        }
        data.entries.push_back(std::move(entry));
        if (end == text.size()) {
            break;
        }
    }
    return data;
}

} // namespace closedpoly
