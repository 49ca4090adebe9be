#pragma once

// Framed links as decorated braid closures. Strands are numbered 0..s-1 by
// their bottom position; the braid letter y_j (j = 2..s) crosses the strands
// at positions j-1 and j (1-based), positively when the strand coming from
// position j-1 passes over. Components are the cycles of the closure
// permutation, indexed by their smallest strand. Framing of a component is
// its blackboard self-writhe plus an explicit integer offset.

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "qspine/errors.hpp"
#include "qspine/presentation.hpp"
#include "qspine/rational.hpp"

namespace qspine {

struct BraidLetter {
    int pos;   // j in 2..strands
    int sign;  // +1 or -1
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    void check() const {
        if (strands < 0) throw IndexOutOfRange("strand count must be >= 0");
        for (const auto& l : letters) {
            if (l.pos < 2 || l.pos > strands)
                throw IndexOutOfRange("braid letter position " + std::to_string(l.pos) +
                                      " out of range for " + std::to_string(strands) +
                                      " strands");
            if (l.sign != 1 && l.sign != -1)
                throw IndexOutOfRange("braid letter sign must be +-1");
        }
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// r_{j,k} = y_{j+1} ... y_k moves the string at place j to place k; empty for j >= k.
inline std::vector<BraidLetter> r_word(int j, int k) {
    std::vector<BraidLetter> out;
    for (int t = j + 1; t <= k; ++t) out.push_back({t, 1});
    return out;
}

// psi_j(x_k^s) on n+m strands: route relator strand j next to generator
// strand k+m, cross it twice with sign s, route back.
inline std::vector<BraidLetter> psi(int j, int k, int m, int letter_sign = 1) {
    std::vector<BraidLetter> out = r_word(j, k + m - 1);
    std::vector<BraidLetter> conj = out;
    out.push_back({k + m, letter_sign});
    out.push_back({k + m, letter_sign});
    for (auto it = conj.rbegin(); it != conj.rend(); ++it)
        out.push_back({it->pos, -it->sign});
    return out;
}

class FramedLink {
  public:
    FramedLink() = default;

    // dotted_components: indices into the closure components; offsets sized to
    // the component count (empty means all zero).
    static FramedLink make(BraidWord braid, const std::vector<int>& dotted_components = {},
                           std::vector<long> offsets = {}) {
        braid.check();
        FramedLink L;
        L.braid_ = std::move(braid);
        L.components_ = closure_components(L.braid_);
        long c = static_cast<long>(L.components_.size());
        L.dotted_.assign(c, false);
        for (int d : dotted_components) {
            if (d < 0 || d >= c) throw IndexOutOfRange("dotted component index " + std::to_string(d));
            L.dotted_[d] = true;
        }
        if (offsets.empty()) offsets.assign(c, 0);
        if (static_cast<long>(offsets.size()) != c)
            throw IndexOutOfRange("offsets count != component count");
        L.offsets_ = std::move(offsets);
        return L;
    }

    const BraidWord& braid() const { return braid_; }
    const std::vector<std::vector<int>>& components() const { return components_; }
    long component_count() const { return static_cast<long>(components_.size()); }
    bool dotted(long c) const { return dotted_.at(c); }
    long dotted_count() const {
        long n = 0;
        for (bool d : dotted_) n += d;
        return n;
    }
    long offset(long c) const { return offsets_.at(c); }

    long component_of_strand(int s) const {
        for (std::size_t c = 0; c < components_.size(); ++c)
            for (int t : components_[c])
                if (t == s) return static_cast<long>(c);
        throw IndexOutOfRange("strand " + std::to_string(s));
    }

    friend bool operator==(const FramedLink&, const FramedLink&) = default;

  private:
    static std::vector<std::vector<int>> closure_components(const BraidWord& b) {
        int s = b.strands;
        // strand_at[pos] while sweeping bottom to top
        std::vector<int> strand_at(s);
        for (int i = 0; i < s; ++i) strand_at[i] = i;
        for (const auto& l : b.letters) std::swap(strand_at[l.pos - 2], strand_at[l.pos - 1]);
        // strand i ends at position endpos[i]; closure joins it to strand endpos[i]
        std::vector<int> next(s);
        for (int pos = 0; pos < s; ++pos) next[strand_at[pos]] = pos;
        std::vector<std::vector<int>> comps;
        std::vector<bool> seen(s, false);
        for (int i = 0; i < s; ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            int cur = i;
            while (!seen[cur]) {
                seen[cur] = true;
                cyc.push_back(cur);
                cur = next[cur];
            }
            comps.push_back(std::move(cyc));  // starts at its smallest strand
        }
        return comps;
    }

    BraidWord braid_;
    std::vector<std::vector<int>> components_;
    std::vector<bool> dotted_;
    std::vector<long> offsets_;
};

// Symmetric c x c matrix: off-diagonal = linking numbers (dots forgotten),
// diagonal = total framings (self-writhe + offset).
inline std::vector<std::vector<long>> linking_matrix(const FramedLink& L) {
    int s = L.braid().strands;
    long c = L.component_count();
    std::vector<long> comp_of(s);
    for (int i = 0; i < s; ++i) comp_of[i] = L.component_of_strand(i);
    std::vector<std::vector<long>> cross(c, std::vector<long>(c, 0));
    std::vector<int> strand_at(s);
    for (int i = 0; i < s; ++i) strand_at[i] = i;
    for (const auto& l : L.braid().letters) {
        int a = strand_at[l.pos - 2], b = strand_at[l.pos - 1];
        cross[comp_of[a]][comp_of[b]] += l.sign;
        if (comp_of[a] != comp_of[b]) cross[comp_of[b]][comp_of[a]] += l.sign;
        std::swap(strand_at[l.pos - 2], strand_at[l.pos - 1]);
    }
    std::vector<std::vector<long>> M(c, std::vector<long>(c, 0));
    for (long i = 0; i < c; ++i)
        for (long j = 0; j < c; ++j)
            M[i][j] = (i == j) ? cross[i][i] + L.offset(i) : cross[i][j] / 2;
    return M;
}

// Exact inertia (sigma+, sigma-, sigma0) by symmetric congruence reduction
// over the rationals.
inline std::array<long, 3> signature_counts(const std::vector<std::vector<long>>& M) {
    long n = static_cast<long>(M.size());
    for (long i = 0; i < n; ++i) {
        if (static_cast<long>(M[i].size()) != n) throw NotSymmetric();
        for (long j = 0; j < n; ++j)
            if (M[i][j] != M[j][i]) throw NotSymmetric();
    }
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) A[i][j] = M[i][j];
    long pos = 0, neg = 0, zero = 0;
    for (long k = 0; k < n; ++k) {
        if (A[k][k] == 0) {
            long l = -1;
            for (long i = k + 1; i < n; ++i)
                if (A[i][i] != 0) {
                    l = i;
                    break;
                }
            if (l >= 0) {
                std::swap(A[k], A[l]);
                for (long i = 0; i < n; ++i) std::swap(A[i][k], A[i][l]);
            } else {
                for (long i = k + 1; i < n && A[k][k] == 0; ++i)
                    if (A[k][i] != 0) {
                        // congruence: add row/col i into row/col k; diagonal
                        // becomes 2*A[k][i] != 0
                        for (long j = 0; j < n; ++j) A[k][j] += A[i][j];
                        for (long j = 0; j < n; ++j) A[j][k] += A[j][i];
                    }
            }
        }
        if (A[k][k] == 0) {
            ++zero;
            continue;
        }
        if (A[k][k] > 0)
            ++pos;
        else
            ++neg;
        for (long i = k + 1; i < n; ++i) {
            if (A[i][k] == 0) continue;
            Rational f = A[i][k] / A[k][k];
            for (long j = 0; j < n; ++j) A[i][j] -= f * A[k][j];
            for (long j = 0; j < n; ++j) A[j][i] -= f * A[j][k];
        }
    }
    return {pos, neg, zero};
}

// Standard thickening link of a presentation: strands 1..m are the relators
// (undotted 2-handles), strands m+1..m+n the generators (dotted 1-handles);
// braid = psi_1(R_1) ... psi_m(R_m). All framings are 0 and the only nonzero
// linking numbers are lk(relator j, generator k) = total exponent of x_k in R_j.
inline FramedLink standard_link(const Presentation& P) {
    int n = static_cast<int>(P.generators());
    int m = static_cast<int>(P.relator_count());
    BraidWord b;
    b.strands = n + m;
    for (int j = 1; j <= m; ++j)
        for (const Letter& l : P.relators[j - 1].letters) {
            auto frag = psi(j, l.gen + 1, m, l.sign);
            b.letters.insert(b.letters.end(), frag.begin(), frag.end());
        }
    std::vector<int> dotted;
    for (int c = m; c < n + m; ++c) dotted.push_back(c);
    return FramedLink::make(std::move(b), dotted);
}

// Flips the sign of one braid letter; reports whether either strand at that
// crossing belongs to a dotted component.
inline std::pair<FramedLink, bool> flip_crossing(const FramedLink& L, std::size_t letter) {
    if (letter >= L.braid().letters.size())
        throw IndexOutOfRange("letter index " + std::to_string(letter));
    int s = L.braid().strands;
    std::vector<int> strand_at(s);
    for (int i = 0; i < s; ++i) strand_at[i] = i;
    for (std::size_t t = 0; t < letter; ++t) {
        const auto& l = L.braid().letters[t];
        std::swap(strand_at[l.pos - 2], strand_at[l.pos - 1]);
    }
    const auto& l = L.braid().letters[letter];
    bool involves_dotted = L.dotted(L.component_of_strand(strand_at[l.pos - 2])) ||
                           L.dotted(L.component_of_strand(strand_at[l.pos - 1]));
    BraidWord b = L.braid();
    b.letters[letter].sign = -b.letters[letter].sign;
    std::vector<int> dots;
    for (long c = 0; c < L.component_count(); ++c)
        if (L.dotted(c)) dots.push_back(static_cast<int>(c));
    std::vector<long> offs;
    for (long c = 0; c < L.component_count(); ++c) offs.push_back(L.offset(c));
    return {FramedLink::make(std::move(b), dots, std::move(offs)), involves_dotted};
}

inline FramedLink add_framing_twist(const FramedLink& L, long component, int delta) {
    if (component < 0 || component >= L.component_count())
        throw IndexOutOfRange("component " + std::to_string(component));
    std::vector<int> dots;
    for (long c = 0; c < L.component_count(); ++c)
        if (L.dotted(c)) dots.push_back(static_cast<int>(c));
    std::vector<long> offs;
    for (long c = 0; c < L.component_count(); ++c) offs.push_back(L.offset(c));
    offs[component] += delta;
    return {FramedLink::make(L.braid(), dots, std::move(offs))};
}

// Hard-coded pairs of links with equal Z under universal labels, used to test
// slide invariance. Pairs 2..5 are genuine band-sum slides (split unknot over
// a +1-framed unknot gives the Hopf pair with the framing bumped); pair 6
// slides one Hopf component over the other; pair 1 is the split-off form of
// the 0-framed Hopf pair, equal by the encircling identity.
inline std::vector<std::pair<FramedLink, FramedLink>> slide_fixture_catalog() {
    std::vector<std::pair<FramedLink, FramedLink>> out;
    auto braid = [](int strands, std::vector<BraidLetter> ls) {
        BraidWord b;
        b.strands = strands;
        b.letters = std::move(ls);
        return b;
    };
    // (1) 0-framed Hopf closure vs split (+1,-1) unknots
    out.emplace_back(FramedLink::make(braid(2, {{2, 1}, {2, 1}})),
                     FramedLink::make(braid(2, {}), {}, {1, -1}));
    // (2..5) split [(+1),(f)] vs Hopf [(+1),(f+1)]
    for (long f : {-1L, 0L, 1L, 2L})
        out.emplace_back(FramedLink::make(braid(2, {}), {}, {1, f}),
                         FramedLink::make(braid(2, {{2, 1}, {2, 1}}), {}, {1, f + 1}));
    // (6) Hopf (0,0) vs its 3-strand band-sum form (one component doubled)
    out.emplace_back(FramedLink::make(braid(2, {{2, 1}, {2, 1}})),
                     FramedLink::make(braid(3, {{2, 1}, {2, 1}, {3, 1}}), {}, {0, 1}));
    return out;
}

// --- Text format ---------------------------------------------------------------
// braid <s>: <signed letters>   (+j / -j for y_j^{+1} / y_j^{-1})
// dotted: <component indices>
// offsets: <c integers>

inline FramedLink parse_link(const std::string& raw) {
    std::string text = detail::strip_comments(raw);
    // space out colons so "braid 2:" and "dotted:" tokenize uniformly
    std::string spaced;
    for (char c : text) {
        if (c == ':') {
            spaced += " : ";
        } else {
            spaced += c;
        }
    }
    std::istringstream in(spaced);
    std::string tok;
    if (!(in >> tok) || tok != "braid") throw ParseError("expected 'braid'", 0);
    int strands;
    if (!(in >> strands)) throw ParseError("expected strand count", 0);
    if (!(in >> tok) || tok != ":") throw ParseError("expected ':' after strand count", 0);
    BraidWord b;
    b.strands = strands;
    std::vector<int> dotted;
    std::vector<long> offsets;
    int section = 0;  // 0 = letters, 1 = dotted, 2 = offsets
    while (in >> tok) {
        if (tok == "dotted") {
            if (!(in >> tok) || tok != ":") throw ParseError("expected ':' after 'dotted'", 0);
            section = 1;
            continue;
        }
        if (tok == "offsets") {
            if (!(in >> tok) || tok != ":") throw ParseError("expected ':' after 'offsets'", 0);
            section = 2;
            continue;
        }
        long val;
        try {
            std::size_t used = 0;
            val = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (...) {
            throw ParseError("bad token '" + tok + "'", 0);
        }
        if (section == 0)
            b.letters.push_back({static_cast<int>(val < 0 ? -val : val), val < 0 ? -1 : 1});
        else if (section == 1)
            dotted.push_back(static_cast<int>(val));
        else
            offsets.push_back(val);
    }
    return FramedLink::make(std::move(b), dotted, std::move(offsets));
}

inline std::string format_link(const FramedLink& L) {
    std::ostringstream out;
    out << "braid " << L.braid().strands << ":";
    for (const auto& l : L.braid().letters) out << " " << l.sign * l.pos;
    out << "\ndotted:";
    for (long c = 0; c < L.component_count(); ++c)
        if (L.dotted(c)) out << " " << c;
    out << "\noffsets:";
    for (long c = 0; c < L.component_count(); ++c) out << " " << L.offset(c);
    out << "\n";
    return out.str();
}

}  // namespace qspine
