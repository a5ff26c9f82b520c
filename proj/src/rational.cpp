#include "closedpoly/rational.hpp"

#include <cctype>
#include <ostream>

#include "closedpoly/error.hpp"

namespace closedpoly {

static_assert(sizeof(long) == sizeof(std::int64_t));

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& n) : value_(n) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
    if (value_.get_den() == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class integer_from(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::from_string(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(integer_from(num_text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
        throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    return Rational(integer_from(num_text), integer_from(den_text));
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DomainError("division by zero");
    }
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    Rational r;
    r.value_ = mpq_class(num, den); // already in lowest terms
    return r;
}

std::string Rational::to_string() const {
    return value_.get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace closedpoly
