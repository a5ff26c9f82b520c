#include <doctest.h>

#include "closedpoly/decompose.hpp"
#include "closedpoly/error.hpp"
#include "closedpoly/newton.hpp"
#include "closedpoly/normal_form.hpp"
#include "support/generators.hpp"
#include "support/poly_literals.hpp"

using namespace closedpoly;
using closedpoly::testing::P;

namespace {

const MultiPoly kSquare = P("x1^4 + 2*x1^2*x2 + x2^2");
const MultiPoly kFamilyF = P("x1^2*x2^4 - 2*x1^2*x2^3 + x1^2*x2^2 + 2*x1*x2^3 - 2*x1*x2^2 + x2^2 + 1");
const MultiPoly kFamilyH = P("x1*x2^2 - x1*x2 + x2");

using Trace = std::vector<TraceEntry>;

} // namespace

TEST_CASE("attempt_divisor on the worked example") {
    const auto gl = OrderSpec::grlex();
    CHECK_FALSE(attempt_divisor(kSquare, 4, gl));

    const auto r = attempt_divisor(kSquare, 2, gl);
    REQUIRE(r);
    CHECK(r->first == P("x1^2 + x2"));
    CHECK(r->second == (UniPoly{0, 0, 1}));
    // alpha_2 = alpha_3 = alpha_4 = 0 and alpha_5 = 1 for the ansatz
    // x1^2 + a2 x1x2 + a3 x2^2 + a4 x1 + a5 x2
    CHECK(r->first.coefficient_of(Monomial{1, 1}).is_zero());
    CHECK(r->first.coefficient_of(Monomial{0, 2}).is_zero());
    CHECK(r->first.coefficient_of(Monomial{1, 0}).is_zero());
    CHECK(r->first.coefficient_of(Monomial{0, 1}) == Rational(1));
}

TEST_CASE("attempt_divisor on f - 1 from the factorization example") {
    const auto f_norm = kFamilyF - MultiPoly::constant(2, Rational(1));
    const auto r = attempt_divisor(f_norm, 2, OrderSpec::grlex());
    REQUIRE(r);
    CHECK(r->first == kFamilyH);
    CHECK(r->second == (UniPoly{0, 0, 1}));
    CHECK(r->first * r->first == f_norm);
}

TEST_CASE("attempt_divisor preconditions") {
    const auto gl = OrderSpec::grlex();
    CHECK_THROWS_AS(attempt_divisor(kSquare, 3, gl), DomainError);
    CHECK_THROWS_AS(attempt_divisor(kSquare, 1, gl), DomainError);
    CHECK_THROWS_AS(attempt_divisor(kSquare * Rational(2), 2, gl), DomainError);
    CHECK_THROWS_AS(attempt_divisor(kFamilyF, 2, gl), DomainError);
    CHECK_THROWS_AS(attempt_divisor(P("x1^40*x2^40 + x2", 2), 2, gl, 100), CapacityError);
}

TEST_CASE("generative examples") {
    auto r = generative(kSquare);
    CHECK(r.h == P("x1^2 + x2"));
    CHECK(r.outer == (UniPoly{0, 0, 1}));
    CHECK_FALSE(r.closed);
    CHECK(r.trace == Trace{{2, AttemptOutcome::verified}});

    r = generative(kSquare, OrderSpec::grlex(), {.pruned = false});
    CHECK(r.trace == Trace{{4, AttemptOutcome::mismatch}, {2, AttemptOutcome::verified}});
    CHECK(r.h == P("x1^2 + x2"));

    r = generative(kFamilyF);
    CHECK(r.h == kFamilyH);
    CHECK(r.outer == (UniPoly{1, 0, 1}));

    r = generative(P("x1^2 + x1", 1));
    CHECK(r.h == P("x1", 1));
    CHECK(r.outer == (UniPoly{0, 1, 1}));
}

TEST_CASE("generative de-normalizes scalar and constant") {
    const auto f = P("x1^2 + x2").pow(2) * Rational(3) + MultiPoly::constant(2, Rational(5));
    const auto r = generative(f);
    CHECK(r.h == P("x1^2 + x2"));
    CHECK(r.outer == (UniPoly{5, 0, 3}));

    const auto closed = generative(P("-2*x1*x2 + 7"));
    CHECK(closed.closed);
    CHECK(closed.h == P("x1*x2"));
    CHECK(closed.outer == (UniPoly{7, -2}));
    CHECK(closed.trace.empty());
}

TEST_CASE("largest verified divisor wins") {
    // f = (x2^2 + x1)^6: D(f) = (12, 6, 4, 3, 2) and k = 6 is the first success
    const auto h = P("x2^2 + x1");
    const auto r = generative(h.pow(6), OrderSpec::grlex(), {.pruned = false});
    CHECK(r.h == h);
    CHECK(r.outer.degree() == 6);
    CHECK(r.trace == Trace{{12, AttemptOutcome::mismatch}, {6, AttemptOutcome::verified}});
}

TEST_CASE("univariate polynomials of degree above one are never closed") {
    closedpoly::testing::Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = closedpoly::testing::random_nonconstant_poly(rng, 1, 5, 6);
        const auto r = generative(f);
        CHECK(r.h == P("x1", 1));
        CHECK(r.closed == (f.total_degree() == 1));
    }
}

TEST_CASE("is_closed") {
    CHECK(is_closed(P("x1*x2 + x1")));
    CHECK_FALSE(is_closed(kSquare));
    CHECK(is_closed(P("x1^2 + x2")));
    CHECK_THROWS_AS(is_closed(MultiPoly::constant(2, Rational(4))), DomainError);
}

TEST_CASE("generative rejects constants and non-graded orders") {
    CHECK_THROWS_AS(generative(MultiPoly(2)), DomainError);
    CHECK_THROWS_AS(generative(kSquare, OrderSpec::weighted({Rational(1), Rational(2)})), DomainError);
}

TEST_CASE("random round trips recover (h, F) exactly") {
    closedpoly::testing::Rng rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(closedpoly::testing::uniform_int(rng, 1, 3));
        const auto h = closedpoly::testing::random_closed_h(rng, n, 4);
        const auto outer = closedpoly::testing::random_outer(rng, static_cast<int>(closedpoly::testing::uniform_int(rng, 1, 3)));
        const auto f = compose_uni(outer, h);
        const auto pruned = generative(f);
        CHECK(pruned.h == h);
        CHECK(pruned.outer == outer);
        CHECK(pruned.closed == (outer.degree() == 1));
        CHECK(f.total_degree() == static_cast<std::uint64_t>(pruned.outer.degree()) * pruned.h.total_degree());
        CHECK(generative(pruned.h).closed);

        const auto plain = generative(f, OrderSpec::grlex(), {.pruned = false});
        CHECK(plain.h == pruned.h);
        CHECK(plain.outer == pruned.outer);
        CHECK(plain.closed == pruned.closed);
    }
}

TEST_CASE("generative polynomial is order independent up to a scalar") {
    closedpoly::testing::Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(closedpoly::testing::uniform_int(rng, 2, 3));
        const auto h = closedpoly::testing::random_closed_h(rng, n, 3);
        const auto outer = closedpoly::testing::random_outer(rng, 2);
        const auto f = compose_uni(outer, h) * closedpoly::testing::random_nonzero_rational(rng);
        const auto a = generative(f, OrderSpec::grlex());
        const auto b = generative(f, OrderSpec::grevlex());
        CHECK(compose_uni(b.outer, b.h) == f);
        const auto scale = leading_monomial(b.h, OrderSpec::grlex()).second;
        CHECK(b.h == a.h * scale);
        CHECK(a.outer.degree() == b.outer.degree());
    }
}

TEST_CASE("only h^k reaches the monomials that determine h") {
    closedpoly::testing::Rng rng(54);
    const auto gl = OrderSpec::grlex();
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(closedpoly::testing::uniform_int(rng, 1, 3));
        const auto h = closedpoly::testing::random_closed_h(rng, n, 3);
        const int k = static_cast<int>(closedpoly::testing::uniform_int(rng, 2, 3));
        const auto m1 = leading_monomial(h, gl).first;
        for (const auto& mj : monomials_below(m1, gl)) {
            const auto target = m1.pow(static_cast<std::uint64_t>(k - 1)) * mj;
            for (int i = 1; i < k; ++i) {
                CHECK(h.pow(static_cast<unsigned>(k - i)).coefficient_of(target).is_zero());
            }
        }
    }
}
