#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace closedpoly {

/// Largest exponent accepted anywhere (2^31 - 1).
inline constexpr std::uint32_t kMaxExponent = 0x7fffffffu;

/// Exponent vector x1^e1 ... xn^en. The length is the ambient variable count;
/// the unit monomial is the all-zero vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<std::uint32_t> exps);
    explicit Monomial(std::vector<std::uint32_t> exps);

    /// x_{index+1}^power in nvars variables.
    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::size_t nvars() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept;
    bool is_unit() const noexcept;

    /// True iff this divides other (componentwise <=).
    bool divides(const Monomial& other) const;

    /// Componentwise >= and not equal.
    bool strictly_dominates(const Monomial& other) const;

    /// Componentwise sum. Throws DomainError on length mismatch or overflow.
    Monomial operator*(const Monomial& other) const;
    /// Componentwise difference; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    Monomial pow(std::uint64_t k) const;

    /// Copy with more variables (zero exponents appended).
    Monomial extended(std::size_t nvars) const;

    /// "x1^2*x3", or "1" for the unit monomial.
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Canonical storage order: total degree ascending, then reverse colex
/// (the last variable where the vectors differ decides, smaller exponent
/// first). Used only for deterministic iteration, never as the active order.
struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

} // namespace closedpoly
