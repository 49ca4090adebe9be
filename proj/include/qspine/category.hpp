#pragma once

// The class-0 SL(2) category at an odd prime p >= 5, reduced to its data:
// simple labels z = 0..(p-3)/2 (highest weight w = 2z), ranks [2z+1], twist
// exponents t(2z) = -2z(z+1) mod p, and the derived nondegeneracy constants
// X^2 = sum r^2 and C± = sum r^2 v^(±t).
//
// The table sits behind a small interface so other category data could be
// plugged in later; only this instantiation is provided.

#include <vector>

#include "qspine/cyclo.hpp"

namespace qspine {

class CategoryData {
  public:
    static CategoryData sl2_class0(long p) {
        check_odd_prime_ge5(p);
        CategoryData cat;
        cat.p_ = p;
        long count = (p - 1) / 2;
        cat.rank_.reserve(count);
        cat.twist_exp_.reserve(count);
        for (long z = 0; z < count; ++z) {
            cat.rank_.push_back(quantum_int(p, 2 * z + 1));
            cat.twist_exp_.push_back(mod_reduce(-2 * z * (z + 1), p));
        }
        cat.x2_ = RingElem::zero(p);
        cat.c_plus_ = RingElem::zero(p);
        cat.c_minus_ = RingElem::zero(p);
        for (long z = 0; z < count; ++z) {
            RingElem r2 = cat.rank_[z] * cat.rank_[z];
            cat.x2_ += r2;
            cat.c_plus_ += r2.times_v_power(cat.twist_exp_[z]);
            cat.c_minus_ += r2.times_v_power(-cat.twist_exp_[z]);
        }
        return cat;
    }

    long prime() const { return p_; }
    long label_count() const { return static_cast<long>(rank_.size()); }

    // Labels are z = 0..(p-3)/2; weight of label z is w = 2z.
    bool valid_label(long z) const { return z >= 0 && z < label_count(); }

    const RingElem& rank(long z) const {
        if (!valid_label(z)) throw ColorOutOfRange("label " + std::to_string(z));
        return rank_[z];
    }

    long twist_exp(long z) const {
        if (!valid_label(z)) throw ColorOutOfRange("label " + std::to_string(z));
        return twist_exp_[z];
    }

    const RingElem& global_dim() const { return x2_; }  // X^2
    const RingElem& c_plus() const { return c_plus_; }
    const RingElem& c_minus() const { return c_minus_; }

  private:
    CategoryData() = default;

    long p_ = 0;
    std::vector<RingElem> rank_;
    std::vector<long> twist_exp_;
    RingElem x2_, c_plus_, c_minus_;
};

inline CategoryData sl2_class0(long p) { return CategoryData::sl2_class0(p); }

// F(n) = sum_z rank(z)^2 v^(n t(2z)): the colored value of an n-twisted unknot
// summed over the universal label. Depends on n mod p only.
inline RingElem F(const CategoryData& cat, long n) {
    long p = cat.prime();
    RingElem s = RingElem::zero(p);
    for (long z = 0; z < cat.label_count(); ++z) {
        RingElem r2 = cat.rank(z) * cat.rank(z);
        s += r2.times_v_power(mod_reduce(n, p) * cat.twist_exp(z));
    }
    return s;
}

// Gauss-sum closed form of F(n) for n coprime to p:
//   F(n) = (-n/2 | p) * g_1 * v^(n/2 + 1/n) * [n^-1] / (v - v^-1)
// with all exponent arithmetic mod p. The v-exponent simplifies to
// (n^2+2)*(2n)^-1 mod p.
inline RingElem F_closed(const CategoryData& cat, long n) {
    long p = cat.prime();
    long nm = mod_reduce(n, p);
    if (nm == 0) throw NDivisibleByP(n, p);
    long inv2 = mod_inverse(2, p);
    int ell = legendre(mod_reduce(-nm * inv2, p), p);
    long e = mod_reduce((nm * nm + 2) * mod_inverse(2 * nm % p, p), p);
    long nbar = mod_inverse(nm, p);
    RingElem num = gauss_sum(p).times_v_power(e) * quantum_int(p, nbar);
    if (ell < 0) num = -num;
    RingElem vv = RingElem::v_power(p, 1) - RingElem::v_power(p, p - 1);
    return ring_from_field(to_field(num) * to_field(vv).inverse());
}

}  // namespace qspine
