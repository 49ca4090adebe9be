#pragma once

// Group presentations as the combinatorial model of 2-complexes with one
// 0-cell: free-group words, a text parser for the <gens | relators> notation,
// Euler characteristic, Andrews-Curtis moves, the dual presentation and
// 1-point unions.
//
// Relators are kept exactly as written (letter by letter); free reduction is
// an explicit operation, because downstream constructions count the absolute
// exponents of the written word.

#include <cctype>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qspine/errors.hpp"

namespace qspine {

struct Letter {
    int gen = 0;   // generator index
    int sign = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
    std::vector<Letter> letters;
    bool freely_reduced = false;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }

    Word inverse() const {
        Word w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.letters.push_back({it->gen, -it->sign});
        w.freely_reduced = freely_reduced;
        return w;
    }
};

inline Word free_reduce(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (const Letter& l : w.letters) {
        if (!out.letters.empty() && out.letters.back().gen == l.gen &&
            out.letters.back().sign == -l.sign)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    out.freely_reduced = true;
    return out;
}

inline Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    while (r.letters.size() >= 2 && r.letters.front().gen == r.letters.back().gen &&
           r.letters.front().sign == -r.letters.back().sign) {
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
    }
    r.freely_reduced = true;
    return r;
}

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    long generators() const { return static_cast<long>(generator_names.size()); }
    long relator_count() const { return static_cast<long>(relators.size()); }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.generator_names == b.generator_names && a.relators == b.relators;
    }
};

inline long euler_char(const Presentation& P) {
    return 1 - P.generators() + P.relator_count();
}

// --- Parsing -----------------------------------------------------------------

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
inline bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' (" + what + ")", i);
    }
};

inline std::string strip_comments(const std::string& text) {
    std::string out;
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        if (!in_comment) out += c;
    }
    return out;
}

inline long parse_int(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.i;
    bool neg = false;
    if (cur.peek() == '-' || cur.peek() == '+') {
        neg = cur.peek() == '-';
        ++cur.i;
    }
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        throw ParseError("expected integer", start);
    long val = 0;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        val = val * 10 + (cur.s[cur.i] - '0');
        ++cur.i;
    }
    return neg ? -val : val;
}

}  // namespace detail

// Grammar: "<" gens "|" relators ">", generators comma-separated identifiers,
// relators comma-separated products of gen^exp factors (default exponent 1;
// the caret is optional before a negative exponent, so x^-1 and x-1 both
// work). The token 1 denotes the empty relator. '#' starts a comment line.
inline Presentation parse_presentation(const std::string& raw) {
    std::string text = detail::strip_comments(raw);
    detail::Cursor cur{text};
    Presentation P;

    cur.expect('<', "presentation opens with '<'");
    cur.skip_ws();
    // generator list
    if (cur.peek() != '|') {
        while (true) {
            cur.skip_ws();
            std::size_t at = cur.i;
            if (!detail::ident_start(cur.peek()))
                throw ParseError("expected generator name", at);
            std::string name;
            while (detail::ident_char(cur.peek())) name += text[cur.i++];
            for (const auto& g : P.generator_names)
                if (g == name) throw ParseError("duplicate generator '" + name + "'", at);
            P.generator_names.push_back(name);
            if (!cur.eat(',')) break;
        }
    }
    cur.expect('|', "separator between generators and relators");

    auto gen_index = [&](const std::string& name, std::size_t at) -> int {
        for (std::size_t k = 0; k < P.generator_names.size(); ++k)
            if (P.generator_names[k] == name) return static_cast<int>(k);
        throw UnknownGenerator(name, at);
    };

    cur.skip_ws();
    if (cur.peek() != '>') {
        while (true) {
            Word w;
            bool saw_factor = false;
            while (true) {
                cur.skip_ws();
                if (cur.peek() == '1' && !saw_factor) {
                    // trivial relator token; must stand alone
                    ++cur.i;
                    cur.skip_ws();
                    if (cur.peek() != ',' && cur.peek() != '>')
                        throw ParseError("'1' must be a whole relator", cur.i);
                    saw_factor = true;
                    break;
                }
                if (!detail::ident_start(cur.peek())) break;
                std::size_t at = cur.i;
                std::string name;
                while (detail::ident_char(cur.peek())) name += text[cur.i++];
                int g = gen_index(name, at);
                long exp = 1;
                if (cur.peek() == '^') {
                    ++cur.i;
                    exp = detail::parse_int(cur);
                } else if (cur.peek() == '-') {
                    exp = detail::parse_int(cur);
                }
                int sign = exp >= 0 ? 1 : -1;
                for (long k = 0; k < (exp >= 0 ? exp : -exp); ++k)
                    w.letters.push_back({g, sign});
                saw_factor = true;
            }
            if (!saw_factor) throw ParseError("expected relator", cur.i);
            P.relators.push_back(w);
            if (!cur.eat(',')) break;
        }
    }
    cur.expect('>', "presentation closes with '>'");
    cur.skip_ws();
    if (!cur.done()) throw ParseError("trailing input after '>'", cur.i);
    return P;
}

// Canonical text form; parse(serialize(P)) == P up to run-collapsed exponents.
inline std::string serialize(const Presentation& P) {
    std::string s = "<";
    for (std::size_t i = 0; i < P.generator_names.size(); ++i) {
        if (i) s += ", ";
        s += P.generator_names[i];
    }
    s += " | ";
    for (std::size_t r = 0; r < P.relators.size(); ++r) {
        if (r) s += ", ";
        const Word& w = P.relators[r];
        if (w.empty()) {
            s += "1";
            continue;
        }
        std::size_t i = 0;
        bool first = true;
        while (i < w.letters.size()) {
            std::size_t j = i;
            while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
            long exp = static_cast<long>(j - i) * w.letters[i].sign;
            if (!first) s += " ";
            s += P.generator_names[w.letters[i].gen];
            if (exp != 1) s += "^" + std::to_string(exp);
            first = false;
            i = j;
        }
    }
    s += ">";
    return s;
}

// --- Andrews-Curtis moves ----------------------------------------------------

struct InvertRelator {
    std::size_t i;
};
struct ConjugateRelator {
    std::size_t i;
    int gen;
    int sign;  // conjugate by gen^sign
};
struct MultiplyRelator {
    std::size_t i, j;  // R_i <- R_i * R_j, i != j
};
struct Stabilize {};
struct Destabilize {};

using AcMove = std::variant<InvertRelator, ConjugateRelator, MultiplyRelator, Stabilize,
                            Destabilize>;

namespace detail {

inline std::string fresh_generator_name(const Presentation& P) {
    std::set<std::string> used(P.generator_names.begin(), P.generator_names.end());
    for (long k = P.generators() + 1;; ++k) {
        std::string cand = "x" + std::to_string(k);
        if (!used.count(cand)) return cand;
    }
}

}  // namespace detail

// Applies one move; all relators of the result are freely reduced.
inline Presentation ac_move(const Presentation& P, const AcMove& move) {
    Presentation Q = P;
    if (const auto* m = std::get_if<InvertRelator>(&move)) {
        if (m->i >= Q.relators.size()) throw InvalidMove("relator index out of range");
        Q.relators[m->i] = Q.relators[m->i].inverse();
    } else if (const auto* m = std::get_if<ConjugateRelator>(&move)) {
        if (m->i >= Q.relators.size()) throw InvalidMove("relator index out of range");
        if (m->gen < 0 || m->gen >= Q.generators()) throw InvalidMove("generator out of range");
        if (m->sign != 1 && m->sign != -1) throw InvalidMove("conjugation sign must be +-1");
        Word w;
        w.letters.push_back({m->gen, m->sign});
        w.letters.insert(w.letters.end(), Q.relators[m->i].letters.begin(),
                         Q.relators[m->i].letters.end());
        w.letters.push_back({m->gen, -m->sign});
        Q.relators[m->i] = w;
    } else if (const auto* m = std::get_if<MultiplyRelator>(&move)) {
        if (m->i == m->j) throw InvalidMove("multiply needs distinct relators");
        if (m->i >= Q.relators.size() || m->j >= Q.relators.size())
            throw InvalidMove("relator index out of range");
        Word w = Q.relators[m->i];
        w.letters.insert(w.letters.end(), Q.relators[m->j].letters.begin(),
                         Q.relators[m->j].letters.end());
        Q.relators[m->i] = w;
    } else if (std::get_if<Stabilize>(&move)) {
        Q.generator_names.push_back(detail::fresh_generator_name(Q));
        Word w;
        w.letters.push_back({static_cast<int>(Q.generators() - 1), 1});
        Q.relators.push_back(w);
    } else if (std::get_if<Destabilize>(&move)) {
        // Find a relator that is a single letter of a generator absent from
        // all other relators.
        long found_rel = -1;
        int found_gen = -1;
        for (std::size_t r = 0; r < Q.relators.size() && found_rel < 0; ++r) {
            const Word red = free_reduce(Q.relators[r]);
            if (red.letters.size() != 1) continue;
            int g = red.letters[0].gen;
            bool elsewhere = false;
            for (std::size_t r2 = 0; r2 < Q.relators.size(); ++r2) {
                if (r2 == r) continue;
                for (const Letter& l : Q.relators[r2].letters)
                    if (l.gen == g) {
                        elsewhere = true;
                        break;
                    }
                if (elsewhere) break;
            }
            if (!elsewhere) {
                found_rel = static_cast<long>(r);
                found_gen = g;
            }
        }
        if (found_rel < 0) throw InvalidMove("no destabilizable generator/relator pair");
        Q.relators.erase(Q.relators.begin() + found_rel);
        Q.generator_names.erase(Q.generator_names.begin() + found_gen);
        for (Word& w : Q.relators)
            for (Letter& l : w.letters)
                if (l.gen > found_gen) --l.gen;
    }
    for (Word& w : Q.relators) w = free_reduce(w);
    return Q;
}

// --- Abelianized data ----------------------------------------------------------

// m x n matrix: entry (l, k) = total exponent of generator k in relator l.
// This is the boundary map of the cellular chain complex.
inline std::vector<std::vector<long>> exponent_matrix(const Presentation& P) {
    std::vector<std::vector<long>> M(P.relator_count(), std::vector<long>(P.generators(), 0));
    for (long l = 0; l < P.relator_count(); ++l)
        for (const Letter& x : P.relators[l].letters) M[l][x.gen] += x.sign;
    return M;
}

// Dual presentation: generators r_1..r_m, relators X_k = prod_l r_l^{f_k^l}.
inline Presentation dual(const Presentation& P) {
    auto M = exponent_matrix(P);
    long m = P.relator_count(), n = P.generators();
    Presentation D;
    for (long l = 0; l < m; ++l)
        D.generator_names.push_back(m == 1 ? "r" : "r" + std::to_string(l + 1));
    for (long k = 0; k < n; ++k) {
        Word w;
        for (long l = 0; l < m; ++l) {
            long e = M[l][k];
            int sign = e >= 0 ? 1 : -1;
            for (long t = 0; t < (e >= 0 ? e : -e); ++t)
                w.letters.push_back({static_cast<int>(l), sign});
        }
        D.relators.push_back(w);
    }
    return D;
}

// 1-point union: disjoint generators and relators; colliding names on the
// right acquire the smallest unused numeric suffix.
inline Presentation wedge(const Presentation& A, const Presentation& B) {
    Presentation W = A;
    std::set<std::string> used(A.generator_names.begin(), A.generator_names.end());
    for (const auto& name : B.generator_names) {
        std::string cand = name;
        for (long k = 2; used.count(cand); ++k) cand = name + std::to_string(k);
        used.insert(cand);
        W.generator_names.push_back(cand);
    }
    int shift = static_cast<int>(A.generators());
    for (const Word& w : B.relators) {
        Word moved = w;
        for (Letter& l : moved.letters) l.gen += shift;
        W.relators.push_back(moved);
    }
    return W;
}

}  // namespace qspine
