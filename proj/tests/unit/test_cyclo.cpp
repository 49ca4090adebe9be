#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "qspine/cyclo.hpp"

using namespace qspine;

namespace {

RingElem random_elem(long p, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> expd(0, 2 * p);
    std::uniform_int_distribution<long> numd(-9, 9);
    std::uniform_int_distribution<int> dend(1, 6);
    std::uniform_int_distribution<int> nterms(0, 4);
    std::map<long, Rational> raw;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        long den = dend(rng);
        while (den % p == 0) den = dend(rng);
        raw[expd(rng)] += Rational(numd(rng), den);
    }
    return RingElem::make(p, raw);
}

}  // namespace

TEST_CASE("ring_make canonicalizes into the power basis") {
    auto one = RingElem::make(5, {{0, 1}});
    REQUIRE(one == RingElem::one(5));
    REQUIRE(one.coeffs() == std::vector<Rational>{1, 0, 0, 0});

    // v^4 = -1 - v - v^2 - v^3
    auto v4 = RingElem::make(5, {{4, 1}});
    REQUIRE(v4.coeffs() == std::vector<Rational>{-1, -1, -1, -1});

    // v^5 = 1
    REQUIRE(RingElem::make(5, {{5, 1}}) == RingElem::one(5));

    REQUIRE_THROWS_AS(RingElem::make(6, {{0, 1}}), NotPrime);
    REQUIRE_THROWS_AS(RingElem::make(3, {{0, 1}}), PrimeTooSmall);
    REQUIRE_THROWS_AS(RingElem::make(5, {{0, Rational(1, 5)}}), DenominatorDivisibleByP);
}

TEST_CASE("basic arithmetic closes in the ring") {
    long p = 5;
    auto v = RingElem::v_power(p, 1);
    auto v4 = RingElem::v_power(p, 4);
    REQUIRE(v * v4 == RingElem::one(p));

    auto a = RingElem::one(p) - v;
    REQUIRE(a + (v - RingElem::one(p)) == RingElem::zero(p));

    // the cyclotomic relation itself
    REQUIRE(RingElem::make(p, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}) == RingElem::zero(p));

    REQUIRE_THROWS_AS(RingElem::one(5) + RingElem::one(7), MixedPrime);
}

TEST_CASE("quantum integers") {
    for (long p : {5L, 7L}) {
        REQUIRE(quantum_int(p, 1) == RingElem::one(p));
        REQUIRE(quantum_int(p, 0) == RingElem::zero(p));
        REQUIRE(quantum_int(p, p).is_zero());
        REQUIRE(quantum_int(p, -3) == -quantum_int(p, 3));
        for (long n = 0; n < 2 * p; ++n)
            REQUIRE(phi_p(quantum_int(p, n)) == n % p);
    }
    // Chebyshev identity [n+1][n-1] = [n]^2 - 1
    for (long p : {5L, 7L, 11L})
        for (long n = -10; n <= 10; ++n)
            REQUIRE(quantum_int(p, n + 1) * quantum_int(p, n - 1) ==
                    quantum_int(p, n) * quantum_int(p, n) - RingElem::one(p));
}

TEST_CASE("gauss sum and legendre") {
    // squares mod 5 are 0,1,4,4,1
    REQUIRE(gauss_sum(5) == RingElem::make(5, {{0, 1}, {1, 2}, {4, 2}}));
    REQUIRE(gauss_sum(5) * gauss_sum(5) == RingElem::from_integer(5, 5));
    for (long p : {5L, 7L, 11L, 13L}) {
        Integer expect = ((p - 1) / 2) % 2 == 0 ? Integer(p) : Integer(-p);
        REQUIRE(gauss_sum(p) * gauss_sum(p) == RingElem::from_integer(p, expect));
    }
    REQUIRE(legendre(0, 7) == 0);
    REQUIRE(legendre(1, 7) == 1);
    REQUIRE(legendre(1, 13) == 1);
    REQUIRE(legendre(2, 5) == -1);
}

TEST_CASE("phi_p evaluates at v = 1 mod p") {
    long p = 5;
    REQUIRE(phi_p(RingElem::one(p) - RingElem::v_power(p, 1)) == 0);
    for (long k = 0; k < p; ++k) REQUIRE(phi_p(RingElem::v_power(p, k)) == 1);

    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        auto x = random_elem(p, rng);
        auto y = random_elem(p, rng);
        REQUIRE(phi_p(x + y) == (phi_p(x) + phi_p(y)) % p);
        REQUIRE(phi_p(x * y) == phi_p(x) * phi_p(y) % p);
    }
}

TEST_CASE("ohtsuki coefficients") {
    long p = 7;
    auto c1 = ohtsuki_coeffs(RingElem::one(p));
    REQUIRE(c1[0] == 1);
    for (std::size_t i = 1; i < c1.size(); ++i) REQUIRE(c1[i] == 0);

    // v = 1 - (1-v)
    auto cv = ohtsuki_coeffs(RingElem::v_power(p, 1));
    REQUIRE(cv[0] == 1);
    REQUIRE(cv[1] == p - 1);
    for (std::size_t i = 2; i < cv.size(); ++i) REQUIRE(cv[i] == 0);

    std::mt19937_64 rng(7);
    auto one_minus_v = RingElem::one(p) - RingElem::v_power(p, 1);
    for (int t = 0; t < 100; ++t) {
        auto x = random_elem(p, rng);
        auto c = ohtsuki_coeffs(x);
        REQUIRE(c[0] == phi_p(x));
        // lift and reconstruct: x - sum a_i (1-v)^i must lie in p*R
        RingElem rec = RingElem::zero(p);
        for (std::size_t i = 0; i < c.size(); ++i)
            rec += one_minus_v.pow(static_cast<long>(i)).scaled(Rational(c[i]));
        RingElem diff = x - rec;
        for (const auto& q : diff.coeffs()) {
            REQUIRE(is_p_local(q, p));
            REQUIRE(mod_p_of(q, p) == 0);
        }
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(1234);
    for (long p : {5L, 7L}) {
        for (int t = 0; t < 150; ++t) {
            auto a = random_elem(p, rng);
            auto b = random_elem(p, rng);
            auto c = random_elem(p, rng);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a + b == b + a);
        }
    }
}

TEST_CASE("field inverse and exact division") {
    long p = 5;
    auto v = RingElem::v_power(p, 1);
    REQUIRE(field_inv(to_field(v)) == to_field(RingElem::v_power(p, p - 1)));

    auto vmv = v - RingElem::v_power(p, p - 1);  // v - v^-1
    REQUIRE(!to_field(vmv).is_zero());
    REQUIRE(field_mul(field_inv(to_field(vmv)), to_field(vmv)) == FieldElem::one(p));

    REQUIRE_THROWS_AS(field_inv(FieldElem::zero(p)), DivisionByZero);

    // X^2 for p=5 in the canonical basis: 4 + v + 2v^2 + 2v^3 + v^4
    auto x2 = RingElem::make(p, {{0, 4}, {1, 1}, {2, 2}, {3, 2}, {4, 1}});
    REQUIRE(field_mul(field_inv(to_field(x2)), to_field(x2)) == FieldElem::one(p));
    REQUIRE(exact_div(x2, x2) == RingElem::one(p));
    REQUIRE(exact_div(x2 * x2, x2) == x2);
    REQUIRE_THROWS_AS(exact_div(RingElem::one(p), x2), NotDivisibleInR);
    REQUIRE_THROWS_AS(exact_div(x2, RingElem::zero(p)), DivisionByZero);

    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 60) {
        auto q = random_elem(p, rng);
        auto y = random_elem(p, rng);
        if (y.is_zero()) continue;
        REQUIRE(exact_div(q * y, y) == q);
        ++done;
    }
}

TEST_CASE("field_pow handles negative exponents") {
    long p = 7;
    auto v = to_field(RingElem::v_power(p, 1));
    REQUIRE(field_pow(v, -3) == to_field(RingElem::v_power(p, p - 3)));
    REQUIRE(field_pow(v, 0) == FieldElem::one(p));
}
