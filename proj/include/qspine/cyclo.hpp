#pragma once

// Exact arithmetic in the cyclotomic ring R = Z_(p)[v]/<1+v+...+v^(p-1)> and in
// its fraction field Q[v]/<1+v+...+v^(p-1)>, for an odd prime p >= 5.
//
// Elements are stored in the canonical power basis {1, v, ..., v^(p-2)}; the
// relation v^(p-1) = -(1 + v + ... + v^(p-2)) (equivalently v^p = 1) folds
// everything into that basis. Coefficients of RingElem are rationals whose
// denominators are coprime to p; FieldElem drops that constraint.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qspine/errors.hpp"
#include "qspine/rational.hpp"

namespace qspine {

namespace detail {

// Fold a length-p exponent vector (indices = powers of v mod p) into the
// canonical length-(p-1) basis by eliminating the v^(p-1) coordinate.
inline std::vector<Rational> fold_cyclotomic(long p, std::vector<Rational> acc) {
    Rational top = acc[p - 1];
    std::vector<Rational> out(p - 1);
    for (long i = 0; i + 1 < p; ++i) out[i] = acc[i] - top;
    return out;
}

}  // namespace detail

class FieldElem;

class RingElem {
  public:
    RingElem() : p_(0) {}

    // Sparse constructor: exponents are arbitrary integers, reduced mod p.
    static RingElem make(long p, const std::map<long, Rational>& raw) {
        check_odd_prime_ge5(p);
        std::vector<Rational> acc(p);
        for (const auto& [e, c] : raw) {
            require_p_local(c, p);
            acc[mod_reduce(e, p)] += c;
        }
        return RingElem(p, detail::fold_cyclotomic(p, std::move(acc)));
    }

    static RingElem zero(long p) { return RingElem(p, std::vector<Rational>(p - 1)); }

    static RingElem one(long p) {
        std::vector<Rational> c(p - 1);
        c[0] = 1;
        return RingElem(p, std::move(c));
    }

    static RingElem from_integer(long p, const Integer& n) {
        std::vector<Rational> c(p - 1);
        c[0] = Rational(n);
        return RingElem(p, std::move(c));
    }

    static RingElem v_power(long p, long e) {
        std::vector<Rational> acc(p);
        acc[mod_reduce(e, p)] = 1;
        return RingElem(p, detail::fold_cyclotomic(p, std::move(acc)));
    }

    long prime() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
    }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    RingElem operator-() const {
        RingElem r(*this);
        for (auto& q : r.c_) q = -q;
        return r;
    }

    RingElem& operator+=(const RingElem& o) {
        match(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    RingElem& operator-=(const RingElem& o) {
        match(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }

    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        a.match(b);
        long p = a.p_;
        std::vector<Rational> acc(p);
        for (long i = 0; i + 1 < p; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; j + 1 < p; ++j) {
                if (b.c_[j] == 0) continue;
                long e = i + j;
                if (e >= p) e -= p;
                acc[e] += a.c_[i] * b.c_[j];
            }
        }
        return RingElem(p, detail::fold_cyclotomic(p, std::move(acc)));
    }

    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    // Scalar multiple by a p-local rational.
    RingElem scaled(const Rational& s) const {
        require_p_local(s, p_);
        RingElem r(*this);
        for (auto& q : r.c_) q *= s;
        return r;
    }

    // Multiplication by v^e: an exponent rotation, O(p).
    RingElem times_v_power(long e) const {
        long p = p_;
        long k = mod_reduce(e, p);
        std::vector<Rational> acc(p);
        for (long i = 0; i + 1 < p; ++i) {
            long t = i + k;
            if (t >= p) t -= p;
            acc[t] = c_[i];
        }
        return RingElem(p, detail::fold_cyclotomic(p, std::move(acc)));
    }

    RingElem pow(long e) const;  // e >= 0

    // Deterministic display form, e.g. "4 + v + 2v^2 - v^3".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rational a = c_[i];
            bool neg = a < 0;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (neg) a = -a;
            std::string mag = a.get_str();
            if (i == 0)
                s += mag;
            else {
                if (mag != "1") s += mag + "*";
                s += (i == 1) ? "v" : "v^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

  private:
    friend class FieldElem;
    friend RingElem ring_from_field(const FieldElem&);

    RingElem(long p, std::vector<Rational> c) : p_(p), c_(std::move(c)) {
        for (const auto& q : c_) require_p_local(q, p_);
    }

    void match(const RingElem& o) const {
        if (p_ != o.p_) throw MixedPrime(p_, o.p_);
    }

    long p_;
    std::vector<Rational> c_;
};

inline RingElem RingElem::pow(long e) const {
    RingElem r = RingElem::one(p_);
    RingElem b = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

// Quantum integer [n] = (v^n - v^-n)/(v - v^-1); for n > 0 this is the Laurent
// sum v^(n-1) + v^(n-3) + ... + v^(1-n), [0] = 0, [-n] = -[n].
inline RingElem quantum_int(long p, long n) {
    if (n == 0) return RingElem::zero(p);
    bool neg = n < 0;
    if (neg) n = -n;
    std::map<long, Rational> raw;
    for (long k = 0; k < n; ++k) raw[mod_reduce(n - 1 - 2 * k, p)] += 1;
    RingElem r = RingElem::make(p, raw);
    return neg ? -r : r;
}

// Gauss sum g_1 = sum_{z=0}^{p-1} v^(z^2); satisfies g_1^2 = (-1)^((p-1)/2) p.
inline RingElem gauss_sum(long p) {
    check_odd_prime_ge5(p);
    std::map<long, Rational> raw;
    for (long z = 0; z < p; ++z) raw[(z * z) % p] += 1;
    return RingElem::make(p, raw);
}

// Mod-p reduction: evaluate at v = 1, reduce mod p. Kills (1-v); well defined
// because the cyclotomic relation evaluates to p = 0 mod p.
inline long phi_p(const RingElem& x) {
    Rational s = 0;
    for (const auto& c : x.coeffs()) s += c;
    return mod_p_of(s, x.prime());
}

// Coefficients of x in the basis {(1-v)^i}, i = 0..p-2, each reduced mod p.
// Entry 0 equals phi_p(x).
inline std::vector<long> ohtsuki_coeffs(const RingElem& x) {
    long p = x.prime();
    long n = p - 1;
    // Pascal triangle mod p up to row p-2 (indices stay below p, no Lucas needed).
    std::vector<std::vector<long>> binom(n, std::vector<long>(n, 0));
    for (long k = 0; k < n; ++k) {
        binom[k][0] = 1;
        for (long i = 1; i <= k; ++i)
            binom[k][i] = (binom[k - 1][i - 1] + (i <= k - 1 ? binom[k - 1][i] : 0)) % p;
    }
    std::vector<long> out(n, 0);
    for (long k = 0; k < n; ++k) {
        long ck = mod_p_of(x.coeffs()[k], p);
        if (ck == 0) continue;
        // v^k = (1 - u)^k with u = 1 - v: coefficient of u^i is C(k,i)(-1)^i.
        for (long i = 0; i <= k; ++i) {
            long term = ck * binom[k][i] % p;
            if (i % 2 == 1) term = (p - term) % p;
            out[i] = (out[i] + term) % p;
        }
    }
    return out;
}

// Element of the field Q[v]/<1+v+...+v^(p-1)>.
class FieldElem {
  public:
    FieldElem() : p_(0) {}

    explicit FieldElem(const RingElem& x) : p_(x.prime()), c_(x.coeffs()) {}

    static FieldElem zero(long p) { return FieldElem(p, std::vector<Rational>(p - 1)); }

    static FieldElem one(long p) {
        std::vector<Rational> c(p - 1);
        c[0] = 1;
        return FieldElem(p, std::move(c));
    }

    long prime() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem operator-() const {
        FieldElem r(*this);
        for (auto& q : r.c_) q = -q;
        return r;
    }

    FieldElem& operator+=(const FieldElem& o) {
        match(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }

    FieldElem& operator-=(const FieldElem& o) {
        match(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }

    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.match(b);
        long p = a.p_;
        std::vector<Rational> acc(p);
        for (long i = 0; i + 1 < p; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; j + 1 < p; ++j) {
                if (b.c_[j] == 0) continue;
                long e = i + j;
                if (e >= p) e -= p;
                acc[e] += a.c_[i] * b.c_[j];
            }
        }
        Rational top = acc[p - 1];
        std::vector<Rational> out(p - 1);
        for (long i = 0; i + 1 < p; ++i) out[i] = acc[i] - top;
        return FieldElem(p, std::move(out));
    }

    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inverse() const;

    FieldElem pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElem r = FieldElem::one(p_);
        FieldElem b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    std::string to_string() const { return FieldElem::render(c_); }

  private:
    friend RingElem ring_from_field(const FieldElem&);

    FieldElem(long p, std::vector<Rational> c) : p_(p), c_(std::move(c)) {}

    void match(const FieldElem& o) const {
        if (p_ != o.p_) throw MixedPrime(p_, o.p_);
    }

    static std::string render(const std::vector<Rational>& c) {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            Rational a = c[i];
            bool neg = a < 0;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (neg) a = -a;
            std::string mag = a.get_str();
            if (i == 0)
                s += mag;
            else {
                if (mag != "1") s += mag + "*";
                s += (i == 1) ? "v" : "v^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    long p_;
    std::vector<Rational> c_;
};

namespace detail {

// Dense rational polynomials, little-endian coefficients; helpers for the
// extended Euclid behind field inversion.
using Poly = std::vector<Rational>;

inline int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

inline Poly poly_sub_scaled(const Poly& a, const Poly& b, const Rational& s, int shift) {
    Poly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= s * b[i];
    return r;
}

// (quotient, remainder) of a / b over Q.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    int db = degree(b);
    Poly q(std::max<std::size_t>(1, a.size()), Rational(0));
    while (true) {
        int da = degree(a);
        if (da < db) break;
        Rational s = a[da] / b[db];
        q[da - db] += s;
        a = poly_sub_scaled(a, b, s, da - db);
    }
    return {q, a};
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

}  // namespace detail

inline FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DivisionByZero();
    long p = p_;
    // Extended Euclid for gcd(x, Phi_p) = 1; Phi_p is irreducible, so the gcd
    // of any nonzero representative (degree <= p-2) with Phi_p is a unit.
    detail::Poly phi(p, Rational(1));  // 1 + v + ... + v^(p-1)
    detail::Poly x(c_.begin(), c_.end());
    detail::Poly r0 = phi, r1 = x;
    detail::Poly t0(1, Rational(0)), t1(1, Rational(1));
    while (detail::degree(r1) > 0) {
        auto [q, rem] = detail::poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        detail::Poly tn = detail::poly_sub(t0, detail::poly_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    // r1 is a nonzero constant; inverse = t1 / r1, reduced mod Phi_p.
    Rational unit = r1[detail::degree(r1) == -1 ? 0 : detail::degree(r1)];
    auto [q2, rem2] = detail::poly_divmod(t1, phi);
    std::vector<Rational> out(p - 1);
    for (std::size_t i = 0; i < rem2.size() && i + 1 < static_cast<std::size_t>(p); ++i)
        out[i] = rem2[i] / unit;
    // rem2 may still have a v^(p-1) coordinate; fold it.
    if (rem2.size() >= static_cast<std::size_t>(p) && rem2[p - 1] != 0) {
        Rational top = rem2[p - 1] / unit;
        for (auto& c : out) c -= top;
    }
    return FieldElem(p, std::move(out));
}

inline FieldElem to_field(const RingElem& x) { return FieldElem(x); }

inline FieldElem field_inv(const FieldElem& x) { return x.inverse(); }

inline FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }

inline FieldElem field_pow(const FieldElem& x, long e) { return x.pow(e); }

// Field element back into R; throws NotDivisibleInR if any coefficient fails
// the p-locality test.
inline RingElem ring_from_field(const FieldElem& x) {
    for (const auto& c : x.coeffs())
        if (!is_p_local(c, x.prime()))
            throw NotDivisibleInR("coefficient " + c.get_str() + " not p-local for p = " +
                                  std::to_string(x.prime()));
    return RingElem(x.prime(), x.coeffs());
}

// The unique q in R with q*y = x, when it exists; otherwise NotDivisibleInR.
inline RingElem exact_div(const RingElem& x, const RingElem& y) {
    if (y.is_zero()) throw DivisionByZero();
    return ring_from_field(to_field(x) * to_field(y).inverse());
}

}  // namespace qspine
