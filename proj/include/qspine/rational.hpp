#pragma once

#include <gmpxx.h>

#include "qspine/errors.hpp"

namespace qspine {

using Integer = mpz_class;
// mpq_class keeps fractions in lowest terms with positive denominator, which is
// exactly the normal form PLocalRational requires; the coprime-to-p invariant is
// checked where ring elements are built (see require_p_local).
using Rational = mpq_class;

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void check_odd_prime_ge5(long p) {
    if (!is_prime(p)) throw NotPrime(p);
    if (p < 5) throw PrimeTooSmall(p);
}

inline bool is_p_local(const Rational& q, long p) {
    return !mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
}

inline void require_p_local(const Rational& q, long p) {
    if (!is_p_local(q, p))
        throw DenominatorDivisibleByP("denominator " + q.get_den().get_str() +
                                      " divisible by p = " + std::to_string(p));
}

inline long mod_reduce(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

inline long mod_reduce(const Integer& a, long p) {
    Integer r = a % p;
    if (r < 0) r += p;
    return r.get_si();
}

// Inverse mod p by extended Euclid; a must be nonzero mod p.
inline long mod_inverse(long a, long p) {
    a = mod_reduce(a, p);
    if (a == 0) throw DivisionByZero();
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, p);
}

inline long mod_pow(long base, long e, long p) {
    long r = 1 % p;
    base = mod_reduce(base, p);
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// p-local rational reduced mod p: num * den^-1.
inline long mod_p_of(const Rational& q, long p) {
    require_p_local(q, p);
    long num = mod_reduce(q.get_num(), p);
    long den = mod_reduce(q.get_den(), p);
    return num * mod_inverse(den, p) % p;
}

inline int legendre(const Integer& a, long p) {
    Integer pp(p);
    return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

inline int legendre(long a, long p) { return legendre(Integer(a), p); }

}  // namespace qspine
