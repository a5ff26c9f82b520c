#include "closedpoly/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "closedpoly/error.hpp"

namespace closedpoly {

namespace {

void check_exponents(const std::vector<std::uint32_t>& exps) {
    for (auto e : exps) {
        if (e > kMaxExponent) {
            throw DomainError("exponent exceeds 2^31 - 1");
        }
    }
}

} // namespace

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {
    check_exponents(exps_);
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    check_exponents(exps_);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    if (index >= nvars) {
        throw DomainError("variable index out of range");
    }
    Monomial m(nvars);
    m.exps_[index] = power;
    check_exponents(m.exps_);
    return m;
}

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) {
        throw DomainError("monomial variable-count mismatch");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

bool Monomial::strictly_dominates(const Monomial& other) const {
    return *this != other && other.divides(*this);
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (nvars() != other.nvars()) {
        throw DomainError("monomial variable-count mismatch");
    }
    Monomial out(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const std::uint64_t e = std::uint64_t{exps_[i]} + other.exps_[i];
        if (e > kMaxExponent) {
            throw DomainError("exponent overflow");
        }
        out.exps_[i] = static_cast<std::uint32_t>(e);
    }
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this)) {
        throw DomainError("monomial does not divide");
    }
    Monomial out(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.exps_[i] = exps_[i] - other.exps_[i];
    }
    return out;
}

Monomial Monomial::pow(std::uint64_t k) const {
    Monomial out(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != 0 && k > kMaxExponent / exps_[i]) {
            throw DomainError("exponent overflow");
        }
        out.exps_[i] = static_cast<std::uint32_t>(exps_[i] * k);
    }
    return out;
}

Monomial Monomial::extended(std::size_t n) const {
    if (n < nvars()) {
        throw DomainError("cannot shrink monomial");
    }
    Monomial out(n);
    std::copy(exps_.begin(), exps_.end(), out.exps_.begin());
    return out;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'x' + std::to_string(i + 1);
        if (exps_[i] != 1) {
            out += '^' + std::to_string(exps_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

bool CanonicalLess::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) {
        return da < db;
    }
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return a.nvars() < b.nvars();
}

} // namespace closedpoly
