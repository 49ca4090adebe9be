#pragma once

// Integer homology of a presentation 2-complex via Smith normal form, and the
// two closed-form routes to the mod-p invariant for chi >= 1: directly from
// (b2, t1), and through the wedge normal form with cyclic factors evaluated by
// the F-product.

#include <algorithm>
#include <vector>

#include "qspine/category.hpp"
#include "qspine/presentation.hpp"
#include "qspine/rational.hpp"

namespace qspine {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix to_integer_matrix(const std::vector<std::vector<long>>& M) {
    IntMatrix R(M.size());
    for (std::size_t i = 0; i < M.size(); ++i)
        R[i].assign(M[i].begin(), M[i].end());
    return R;
}

struct SnfResult {
    long rank = 0;
    std::vector<Integer> divisors;  // positive, d1 | d2 | ..., count == rank
};

// Unimodular row/column reduction over Z with smallest-pivot selection.
inline SnfResult smith_normal_form(IntMatrix M) {
    long rows = static_cast<long>(M.size());
    long cols = rows ? static_cast<long>(M[0].size()) : 0;
    std::vector<Integer> diag;
    long t = 0;
    while (t < rows && t < cols) {
        // pick the nonzero entry of smallest absolute value in the submatrix
        long pr = -1, pc = -1;
        Integer best;
        for (long i = t; i < rows; ++i)
            for (long j = t; j < cols; ++j) {
                if (M[i][j] == 0) continue;
                Integer a = abs(M[i][j]);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // submatrix is zero
        std::swap(M[t], M[pr]);
        for (long i = 0; i < rows; ++i) std::swap(M[i][t], M[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (long i = t + 1; i < rows; ++i) {
                if (M[i][t] == 0) continue;
                Integer q = M[i][t] / M[t][t];  // truncated division keeps remainders small
                if (q != 0)
                    for (long j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) {
                    std::swap(M[t], M[i]);  // remainder is smaller; continue Euclid
                    clean = false;
                }
            }
            for (long j = t + 1; j < cols; ++j) {
                if (M[t][j] == 0) continue;
                Integer q = M[t][j] / M[t][t];
                if (q != 0)
                    for (long i = 0; i < rows; ++i) M[i][j] -= q * M[i][t];
                if (M[t][j] != 0) {
                    for (long i = 0; i < rows; ++i) std::swap(M[i][t], M[i][j]);
                    clean = false;
                }
            }
        }
        // pivot must divide every remaining entry; if not, fold that row in
        for (long i = t + 1; i < rows && clean; ++i)
            for (long j = t + 1; j < cols; ++j)
                if (M[i][j] % M[t][t] != 0) {
                    for (long c = t; c < cols; ++c) M[t][c] += M[i][c];
                    clean = false;
                    break;
                }
        if (!clean) continue;  // redo elimination at the same t
        diag.push_back(abs(M[t][t]));
        ++t;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Integer g = gcd(diag[i], diag[j]);
            Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    SnfResult r;
    r.rank = static_cast<long>(diag.size());
    r.divisors = std::move(diag);
    return r;
}

struct HomologySummary {
    long b1 = 0;
    long b2 = 0;
    std::vector<Integer> torsion;  // elementary divisors > 1
    Integer t1 = 1;                // order of the torsion subgroup of H1
};

inline HomologySummary homology_of(const Presentation& P) {
    auto snf = smith_normal_form(to_integer_matrix(exponent_matrix(P)));
    HomologySummary h;
    h.b1 = P.generators() - snf.rank;
    h.b2 = P.relator_count() - snf.rank;
    for (const Integer& d : snf.divisors)
        if (d > 1) h.torsion.push_back(d);
    h.t1 = 1;
    for (const Integer& d : h.torsion) h.t1 *= d;
    return h;
}

// Invariant of <x | x^q> through the F-product: phi_p(F(q) F(-q) / X^2).
// Equals qbar^2 mod p, or 0 when p | q.
inline long q_invariant_cyclic(const CategoryData& cat, long q) {
    RingElem prod = F(cat, q) * F(cat, -q);
    return phi_p(exact_div(prod, cat.global_dim()));
}

// Closed form from homology: 0 if b2 > 0 or p | t1, else (t1 mod p)^-2.
inline long q_invariant_homological(const CategoryData& cat, const Presentation& P) {
    long chi = euler_char(P);
    if (chi < 1) throw ChiTooSmall(chi);
    HomologySummary h = homology_of(P);
    long p = cat.prime();
    long t1p = mod_reduce(h.t1, p);
    if (h.b2 > 0 || t1p == 0) return 0;
    long r = mod_inverse(t1p, p);
    return r * r % p;
}

struct WedgeNormalForm {
    long circles = 0;                    // copies of S^1 (b1)
    long spheres = 0;                    // copies of S^2 (b2)
    std::vector<Integer> cyclic_orders;  // elementary divisors refined to prime powers
};

namespace detail {

inline void prime_power_refine(Integer d, std::vector<Integer>& out) {
    for (Integer f = 2; f * f <= d; ++f) {
        if (d % f != 0) continue;
        Integer pw = 1;
        while (d % f == 0) {
            pw *= f;
            d /= f;
        }
        out.push_back(pw);
    }
    if (d > 1) out.push_back(d);
}

}  // namespace detail

inline WedgeNormalForm wedge_normal_form(const Presentation& P) {
    HomologySummary h = homology_of(P);
    WedgeNormalForm w;
    w.circles = h.b1;
    w.spheres = h.b2;
    for (const Integer& d : h.torsion) detail::prime_power_refine(d, w.cyclic_orders);
    std::sort(w.cyclic_orders.begin(), w.cyclic_orders.end());
    return w;
}

// Product over the wedge normal form: 1 per circle, 0 per sphere, the cyclic
// invariant per prime-power factor. Must agree with q_invariant_homological.
inline long q_invariant_generic(const CategoryData& cat, const Presentation& P) {
    long chi = euler_char(P);
    if (chi < 1) throw ChiTooSmall(chi);
    WedgeNormalForm w = wedge_normal_form(P);
    if (w.spheres > 0) return 0;
    long p = cat.prime();
    long acc = 1;
    for (const Integer& q : w.cyclic_orders) {
        acc = acc * q_invariant_cyclic(cat, mod_reduce(q, p)) % p;
        if (acc == 0) break;
    }
    return acc;
}

}  // namespace qspine
