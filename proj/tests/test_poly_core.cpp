#include <doctest.h>

#include "closedpoly/error.hpp"
#include "closedpoly/multipoly.hpp"
#include "closedpoly/normal_form.hpp"
#include "closedpoly/unipoly.hpp"
#include "support/generators.hpp"
#include "support/poly_literals.hpp"

using namespace closedpoly;
using closedpoly::testing::P;

namespace {

const MultiPoly kSquare = P("x1^4 + 2*x1^2*x2 + x2^2");
const MultiPoly kFamilyH = P("x1*x2^2 - x1*x2 + x2");
const MultiPoly kFamilyF = P("x1^2*x2^4 - 2*x1^2*x2^3 + x1^2*x2^2 + 2*x1*x2^3 - 2*x1*x2^2 + x2^2 + 1");

} // namespace

TEST_CASE("rational stays in lowest terms") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational::from_string("-10/4").to_string() == "-5/2");
    CHECK(Rational::from_string("12").to_string() == "12");
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), DomainError);
    CHECK_THROWS_AS(Rational::from_string("abc"), DomainError);
    CHECK_THROWS_AS(Rational(3) / Rational(0), DomainError);
}

TEST_CASE("rational arithmetic on large values is exact") {
    const auto big = Rational(3, 7).pow(60);
    CHECK((big * Rational(7, 3).pow(60)).is_one());
    CHECK(big.numerator() % 3 == 0);
}

TEST_CASE("monomial exponent overflow is rejected") {
    const Monomial big = Monomial::variable(2, 0, kMaxExponent);
    CHECK_THROWS_AS(big * Monomial::variable(2, 0), DomainError);
    CHECK_THROWS_AS(Monomial::variable(2, 1).pow(std::uint64_t{1} << 32), DomainError);
    CHECK_THROWS_AS(Monomial({0x80000000u}), DomainError);
}

TEST_CASE("mul") {
    CHECK(mul(P("x1 + x2"), P("x1 - x2")) == P("x1^2 - x2^2"));
    CHECK(mul(kFamilyH, kFamilyH) == kFamilyF - MultiPoly::constant(2, Rational(1)));
    // the factored form x2^2 (x1 x2 - x1 + 1)^2
    CHECK(kFamilyF - MultiPoly::constant(2, Rational(1)) == P("x2^2") * P("x1*x2 - x1 + 1").pow(2));
    CHECK(mul(kSquare, MultiPoly(2)).is_zero());
    CHECK_THROWS_AS(mul(P("x1", 1), P("x1", 2)), DomainError);

    const auto p = P("x1 + 2*x2 + 3");
    const auto q = P("x1^3 - x2 + 1/2");
    CHECK(mul(p, q).size() <= p.size() * q.size());
}

TEST_CASE("compose_uni") {
    CHECK(compose_uni(UniPoly{0, 0, 1}, P("x1^2 + x2")) == kSquare);
    CHECK(compose_uni(UniPoly::identity(), kFamilyH) == kFamilyH);
    CHECK(compose_uni(UniPoly{1, 0, 1}, kFamilyH) == kFamilyF);
    CHECK(compose_uni(UniPoly{}, kFamilyH).is_zero());
    CHECK(compose_uni(UniPoly{Rational(5)}, kFamilyH) == MultiPoly::constant(2, Rational(5)));
}

TEST_CASE("partial_derivative") {
    CHECK(P("x1^2*x2").partial_derivative(0) == P("2*x1*x2"));
    // termwise: d/dx2 of x1^4 is 0, of 2x1^2x2 is 2x1^2, of x2^2 is 2x2
    CHECK(kSquare.partial_derivative(1) == P("2*x1^2 + 2*x2"));
    CHECK(MultiPoly::constant(2, Rational(7)).partial_derivative(0).is_zero());
    CHECK_THROWS_AS(kSquare.partial_derivative(2), DomainError);
}

TEST_CASE("normalize") {
    const auto ord = OrderSpec::grlex();
    auto nf = normalize(P("2*x1^2 + 4*x2 + 6"), ord);
    CHECK(nf.core == P("x1^2 + 2*x2"));
    CHECK(nf.leading_scalar == Rational(2));
    CHECK(nf.constant_term == Rational(6));

    nf = normalize(kFamilyF, ord);
    CHECK(nf.core == kFamilyF - MultiPoly::constant(2, Rational(1)));
    CHECK(nf.leading_scalar == Rational(1));
    CHECK(nf.constant_term == Rational(1));

    nf = normalize(P("x1^2 + x2"), ord);
    CHECK(nf.core == P("x1^2 + x2"));
    CHECK(nf.leading_scalar.is_one());
    CHECK(nf.constant_term.is_zero());

    CHECK_THROWS_AS(normalize(MultiPoly::constant(2, Rational(3)), ord), DomainError);
    CHECK_THROWS_AS(normalize(MultiPoly(2), ord), DomainError);
}

TEST_CASE("coefficient_of") {
    CHECK(kSquare.coefficient_of(Monomial{2, 1}) == Rational(2));
    CHECK(kSquare.coefficient_of(Monomial{1, 1}).is_zero());
    CHECK(P("3/2*x1", 1).coefficient_of(Monomial{1}) == Rational(3, 2));
    CHECK_THROWS_AS(kSquare.coefficient_of(Monomial{1}), DomainError);
}

TEST_CASE("coefficient_in_power matches full expansion") {
    closedpoly::testing::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = closedpoly::testing::random_poly(rng, 3, 5, 3);
        const auto k = static_cast<unsigned>(closedpoly::testing::uniform_int(rng, 0, 4));
        const auto full = p.pow(k);
        for (const auto& [m, c] : full.terms()) {
            CHECK(coefficient_in_power(p, k, m) == c);
        }
        CHECK(coefficient_in_power(p, k, Monomial{9, 9, 9}) == full.coefficient_of(Monomial{9, 9, 9}));
    }
}

TEST_CASE("ring laws on random polynomials") {
    closedpoly::testing::Rng rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(closedpoly::testing::uniform_int(rng, 1, 4));
        const auto a = closedpoly::testing::random_poly(rng, n, 30, 4);
        const auto b = closedpoly::testing::random_poly(rng, n, 30, 4);
        const auto c = closedpoly::testing::random_poly(rng, n, 10, 3);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        const auto product = a * b;
        for (const auto& [m, coeff] : product.terms()) {
            CHECK_FALSE(coeff.is_zero());
        }
    }
}

TEST_CASE("compose_uni is an evaluation homomorphism") {
    closedpoly::testing::Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(closedpoly::testing::uniform_int(rng, 1, 3));
        const auto h = closedpoly::testing::random_poly(rng, n, 6, 3);
        std::vector<Rational> fc;
        for (int i = 0; i < closedpoly::testing::uniform_int(rng, 1, 4); ++i) {
            fc.push_back(closedpoly::testing::random_rational(rng));
        }
        const UniPoly outer(fc);
        const auto point = closedpoly::testing::random_point(rng, n);
        CHECK(compose_uni(outer, h).evaluate(point) == outer.evaluate(h.evaluate(point)));
    }
}

TEST_CASE("normalize round trip") {
    closedpoly::testing::Rng rng(3);
    for (const auto& order : {OrderSpec::grlex(), OrderSpec::grevlex()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = closedpoly::testing::random_nonconstant_poly(rng, 3, 8, 4);
            const auto nf = normalize(f, order);
            CHECK(nf.core * nf.leading_scalar + MultiPoly::constant(3, nf.constant_term) == f);
            CHECK(nf.core.constant_term().is_zero());
            CHECK(leading_monomial(nf.core, order).second.is_one());
        }
    }
}

TEST_CASE("product rule for partial derivatives") {
    closedpoly::testing::Rng rng(4);
    for (int trial = 0; trial < 80; ++trial) {
        const auto n = static_cast<std::size_t>(closedpoly::testing::uniform_int(rng, 1, 4));
        const auto p = closedpoly::testing::random_poly(rng, n, 10, 4);
        const auto q = closedpoly::testing::random_poly(rng, n, 10, 4);
        const auto i = static_cast<std::size_t>(closedpoly::testing::uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
        CHECK((p * q).partial_derivative(i) == p * q.partial_derivative(i) + q * p.partial_derivative(i));
    }
}

TEST_CASE("unipoly helpers") {
    const UniPoly g{-1, 0, 1};
    CHECK(g.degree() == 2);
    CHECK(g.deflate(Rational(1)) == UniPoly{1, 1});
    CHECK_THROWS_AS(g.deflate(Rational(2)), DomainError);
    CHECK(UniPoly{0, 0, 0}.is_zero());
    CHECK(UniPoly{1, 0, 1}.to_string() == "t^2 + 1");
    CHECK(UniPoly{Rational(0), Rational(-3, 2), Rational(1)}.to_string() == "t^2 - 3/2*t");
    CHECK(UniPoly{}.to_string() == "0");
}
