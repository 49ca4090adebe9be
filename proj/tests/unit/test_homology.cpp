#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "qspine/homology.hpp"

using namespace qspine;

namespace {

// brute-force oracle for 2x2 diagonalizable data: d1 = gcd of all entries,
// d1 d2 = |det| (used on the spec's worked example)
IntMatrix mat(std::vector<std::vector<long>> rows) { return to_integer_matrix(rows); }

Presentation random_presentation(std::mt19937_64& rng, int max_gens = 3, int max_rels = 4,
                                 int max_len = 8) {
    std::uniform_int_distribution<int> gd(1, max_gens), rd(0, max_rels), ld(0, max_len);
    Presentation P;
    int n = gd(rng);
    for (int i = 0; i < n; ++i) P.generator_names.push_back(std::string(1, char('a' + i)));
    int m = rd(rng);
    std::uniform_int_distribution<int> gen(0, n - 1), sgn(0, 1);
    for (int r = 0; r < m; ++r) {
        Word w;
        int len = ld(rng);
        for (int i = 0; i < len; ++i) w.letters.push_back({gen(rng), sgn(rng) ? 1 : -1});
        P.relators.push_back(w);
    }
    return P;
}

}  // namespace

TEST_CASE("smith normal form basics") {
    auto r1 = smith_normal_form(mat({{2}}));
    REQUIRE(r1.rank == 1);
    REQUIRE(r1.divisors == std::vector<Integer>{2});

    // oracle: d1 = gcd of entries = 1, d1*d2 = |det| = 6
    auto r2 = smith_normal_form(mat({{2, 0}, {0, 3}}));
    REQUIRE(r2.rank == 2);
    REQUIRE(r2.divisors == std::vector<Integer>{1, 6});

    auto r0 = smith_normal_form(mat({{0, 0}, {0, 0}}));
    REQUIRE(r0.rank == 0);
    REQUIRE(r0.divisors.empty());

    auto r3 = smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    REQUIRE(r3.rank == 3);
    // divisibility chain and determinant product
    Integer prod = 1;
    for (std::size_t i = 0; i < r3.divisors.size(); ++i) {
        prod *= r3.divisors[i];
        if (i) REQUIRE(r3.divisors[i] % r3.divisors[i - 1] == 0);
    }
    REQUIRE(prod == 156);  // |det| of that matrix
}

TEST_CASE("snf is invariant under unimodular operations") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> dim(1, 4), val(-6, 6), pick(0, 3);
    for (int t = 0; t < 150; ++t) {
        int m = dim(rng), n = dim(rng);
        IntMatrix M(m, std::vector<Integer>(n));
        for (auto& row : M)
            for (auto& x : row) x = val(rng);
        auto base = smith_normal_form(M);
        IntMatrix N = M;
        for (int step = 0; step < 6; ++step) {
            switch (pick(rng)) {
                case 0: {  // add multiple of one row to another
                    if (m < 2) break;
                    int i = rng() % m, j = rng() % m;
                    if (i == j) break;
                    long f = val(rng);
                    for (int c = 0; c < n; ++c) N[i][c] += f * N[j][c];
                    break;
                }
                case 1: {
                    if (n < 2) break;
                    int i = rng() % n, j = rng() % n;
                    if (i == j) break;
                    long f = val(rng);
                    for (int r = 0; r < m; ++r) N[r][i] += f * N[r][j];
                    break;
                }
                case 2: {
                    int i = rng() % m;
                    for (int c = 0; c < n; ++c) N[i][c] = -N[i][c];
                    break;
                }
                case 3: {
                    if (m < 2) break;
                    std::swap(N[rng() % m], N[rng() % m]);
                    break;
                }
            }
        }
        auto after = smith_normal_form(N);
        REQUIRE(after.rank == base.rank);
        REQUIRE(after.divisors == base.divisors);
    }
}

TEST_CASE("homology of presentations") {
    auto h = homology_of(parse_presentation("<x | x^3>"));
    REQUIRE(h.b1 == 0);
    REQUIRE(h.b2 == 0);
    REQUIRE(h.t1 == 3);

    auto hc = homology_of(parse_presentation("<x,y | x y x^-1 y^-1>"));
    REQUIRE(hc.b1 == 2);
    REQUIRE(hc.b2 == 1);
    REQUIRE(hc.t1 == 1);

    auto hf = homology_of(parse_presentation("<x,y |>"));
    REQUIRE(hf.b1 == 2);
    REQUIRE(hf.b2 == 0);
    REQUIRE(hf.t1 == 1);

    // Euler-Poincare: b1 - b2 = 1 - chi
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 300; ++t) {
        auto P = random_presentation(rng);
        auto hh = homology_of(P);
        REQUIRE(hh.b1 - hh.b2 == 1 - euler_char(P));
    }
}

TEST_CASE("cyclic invariant via the F route") {
    auto c5 = sl2_class0(5);
    REQUIRE(q_invariant_cyclic(c5, 5) == 0);
    REQUIRE(q_invariant_cyclic(c5, 3) == 4);  // 3bar = 2, 2^2 = 4
    auto c7 = sl2_class0(7);
    REQUIRE(q_invariant_cyclic(c7, 1) == 1);
    for (long q = 1; q <= 14; ++q) {
        long expect = q % 7 == 0 ? 0 : mod_pow(mod_inverse(q, 7), 2, 7);
        REQUIRE(q_invariant_cyclic(c7, q) == expect);
    }
}

TEST_CASE("homological invariant") {
    auto c5 = sl2_class0(5);
    REQUIRE(q_invariant_homological(c5, parse_presentation("<x | x^3>")) == 4);
    REQUIRE(q_invariant_homological(c5, parse_presentation("<x,y | x^2, y^5>")) == 0);  // p | 10
    REQUIRE(q_invariant_homological(c5, parse_presentation("< | 1>")) == 0);            // b2 = 1
    REQUIRE_THROWS_AS(q_invariant_homological(c5, parse_presentation("<x,y | x y x^-1 y^-1>")),
                      ChiTooSmall);
}

TEST_CASE("wedge normal form") {
    auto w = wedge_normal_form(parse_presentation("<x | x^6>"));
    REQUIRE(w.circles == 0);
    REQUIRE(w.spheres == 0);
    REQUIRE(w.cyclic_orders == std::vector<Integer>{2, 3});

    auto w2 = wedge_normal_form(parse_presentation("<x,y |>"));
    REQUIRE(w2.circles == 2);
    REQUIRE(w2.spheres == 0);
    REQUIRE(w2.cyclic_orders.empty());

    auto w3 = wedge_normal_form(parse_presentation("< | 1>"));
    REQUIRE(w3.spheres == 1);
}

TEST_CASE("generic route equals homological route") {
    std::mt19937_64 rng(777);
    for (long p : {5L, 7L, 11L}) {
        auto cat = sl2_class0(p);
        REQUIRE(q_invariant_generic(cat, parse_presentation("<x | x^6>")) ==
                (p == 5 ? 1 : mod_pow(mod_inverse(6, p), 2, p)));
        int done = 0;
        while (done < 70) {
            auto P = random_presentation(rng);
            if (euler_char(P) < 1) continue;
            ++done;
            REQUIRE(q_invariant_generic(cat, P) == q_invariant_homological(cat, P));
        }
    }
}

TEST_CASE("homological invariant is AC-move invariant") {
    std::mt19937_64 rng(2718);
    auto c5 = sl2_class0(5);
    std::uniform_int_distribution<int> mv(0, 4);
    int done = 0;
    while (done < 60) {
        auto P = random_presentation(rng);
        if (euler_char(P) < 1 || P.relators.empty()) continue;
        ++done;
        long base = q_invariant_homological(c5, P);
        auto Q = P;
        for (int step = 0; step < 30; ++step) {
            switch (mv(rng)) {
                case 0:
                    Q = ac_move(Q, InvertRelator{rng() % Q.relators.size()});
                    break;
                case 1:
                    Q = ac_move(Q, ConjugateRelator{rng() % Q.relators.size(),
                                                    static_cast<int>(rng() % Q.generators()),
                                                    rng() % 2 ? 1 : -1});
                    break;
                case 2: {
                    if (Q.relators.size() < 2) break;
                    std::size_t i = rng() % Q.relators.size(), j = rng() % Q.relators.size();
                    if (i != j) Q = ac_move(Q, MultiplyRelator{i, j});
                    break;
                }
                case 3:
                    if (Q.generators() + Q.relator_count() < 12) Q = ac_move(Q, Stabilize{});
                    break;
                case 4:
                    try {
                        Q = ac_move(Q, Destabilize{});
                    } catch (const InvalidMove&) {
                    }
                    break;
            }
        }
        REQUIRE(q_invariant_homological(c5, Q) == base);
        // duality at the homology level: exponent matrices transpose
        auto M = exponent_matrix(Q);
        auto Mt = exponent_matrix(dual(Q));
        for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = 0; j < M[i].size(); ++j) REQUIRE(M[i][j] == Mt[j][i]);
    }
}

TEST_CASE("multiplicativity under wedge") {
    std::mt19937_64 rng(4242);
    auto c7 = sl2_class0(7);
    int done = 0;
    while (done < 50) {
        auto P = random_presentation(rng, 2, 3, 6);
        auto Q = random_presentation(rng, 2, 3, 6);
        if (euler_char(P) < 1 || euler_char(Q) < 1) continue;
        auto W = wedge(P, Q);
        if (euler_char(W) < 1) continue;
        ++done;
        REQUIRE(q_invariant_homological(c7, W) ==
                q_invariant_homological(c7, P) * q_invariant_homological(c7, Q) % 7);
    }
}
