#include "closedpoly/text.hpp"

#include <cctype>
#include <vector>

#include "closedpoly/error.hpp"

namespace closedpoly {

namespace {

// Variable indices above this are rejected; every monomial stores one
// exponent per variable.
constexpr std::size_t kMaxVariableIndex = 4096;

[[noreturn]] void throw_at(std::string_view text, const std::string& what, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw ParseError(what, line, column);
}

struct RawTerm {
    std::size_t offset = 0;
    Rational coeff;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors; // (0-based index, exponent)
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<RawTerm> parse() {
        skip_space();
        if (at_end()) {
            fail("empty polynomial");
        }
        std::vector<RawTerm> terms;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = next() == '-';
        }
        for (;;) {
            RawTerm t = parse_term();
            if (negative) {
                t.coeff = -t.coeff;
            }
            terms.push_back(std::move(t));
            skip_space();
            if (at_end()) {
                break;
            }
            if (peek() != '+' && peek() != '-') {
                fail(std::string("unexpected '") + peek() + "'");
            }
            negative = next() == '-';
        }
        return terms;
    }

    std::size_t max_index() const noexcept { return max_index_; }

private:
    RawTerm parse_term() {
        skip_space();
        if (at_end()) {
            fail("expected a term");
        }
        RawTerm term;
        term.offset = pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const mpz_class num = parse_digits();
            skip_space();
            mpz_class den = 1;
            if (!at_end() && peek() == '/') {
                next();
                skip_space();
                const std::size_t at = pos_;
                den = parse_digits();
                if (den == 0) {
                    fail_at("zero denominator", at);
                }
            }
            term.coeff = Rational(num, den);
            skip_space();
            if (at_end() || peek() != '*') {
                return term;
            }
            next();
            skip_space();
            parse_mono(term);
            return term;
        }
        if (peek() == 'x') {
            term.coeff = Rational(1);
            parse_mono(term);
            return term;
        }
        fail(std::string("expected a coefficient or a variable, found '") + peek() + "'");
    }

    void parse_mono(RawTerm& term) {
        parse_factor(term);
        for (;;) {
            skip_space();
            if (at_end() || peek() != '*') {
                return;
            }
            next();
            skip_space();
            parse_factor(term);
        }
    }

    void parse_factor(RawTerm& term) {
        if (at_end() || peek() != 'x') {
            fail("expected a variable like x1");
        }
        next();
        const std::size_t index_at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected a variable index after 'x'");
        }
        const mpz_class index = parse_digits();
        if (index == 0) {
            fail_at("variable index must be at least 1", index_at);
        }
        if (index > kMaxVariableIndex) {
            fail_at("variable index exceeds " + std::to_string(kMaxVariableIndex), index_at);
        }
        std::uint32_t exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
            next();
            skip_space();
            const std::size_t exp_at = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("expected an exponent after '^'");
            }
            const mpz_class e = parse_digits();
            if (e > kMaxExponent) {
                fail_at("exponent overflow (limit 2^31 - 1)", exp_at);
            }
            exponent = static_cast<std::uint32_t>(e.get_ui());
        }
        const auto idx = static_cast<std::size_t>(index.get_ui());
        max_index_ = std::max(max_index_, idx);
        term.factors.emplace_back(idx - 1, exponent);
    }

    mpz_class parse_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char next() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

    [[noreturn]] void fail_at(const std::string& what, std::size_t offset) const {
        throw_at(text_, what, offset);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t max_index_ = 0;
};

} // namespace

ParsedInput parse_poly(std::string_view text, std::size_t min_nvars) {
    Parser parser(text);
    const auto raw = parser.parse();
    const std::size_t inferred = std::max<std::size_t>(parser.max_index(), 1);
    const std::size_t nvars = std::max(inferred, min_nvars);
    MultiPoly poly(nvars);
    for (const auto& t : raw) {
        Monomial m(nvars);
        try {
            for (const auto& [index, exponent] : t.factors) {
                m = m * Monomial::variable(nvars, index, exponent);
            }
        } catch (const DomainError&) {
            throw_at(text, "exponent overflow (limit 2^31 - 1)", t.offset);
        }
        poly.add_term(m, t.coeff);
    }
    return {std::move(poly), inferred, std::string(text)};
}

std::string render_poly(const MultiPoly& f, const OrderSpec& order) {
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : sorted_terms(f, order)) {
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (m.is_unit()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += m.to_string();
        } else {
            out += mag.to_string() + "*" + m.to_string();
        }
    }
    return out;
}

} // namespace closedpoly
