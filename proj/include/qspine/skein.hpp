#pragma once

// Temperley-Lieb diagram evaluation over R and the top-level invariants.
//
// The class-0 SL(2) category is realized by the Kauffman bracket with
// A = v^((p-1)/2) (so A^2 = v^(-1), loop value delta = -(v + v^(-1))).
// With this calibration a JW_w-colored unknot evaluates to the rank [w+1]
// and a positive kink on a weight-w strand contributes v^(t(w)),
// t(w) = -w(w+2)/2 mod p, matching the category's twist data.
//
// Colored links are evaluated by cabling each strand, inserting one
// Jones-Wenzl idempotent per component, and sweeping the braid word with a
// TLVector state; closed loops contribute delta each.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>
#include <vector>

#include "qspine/category.hpp"
#include "qspine/cyclo.hpp"
#include "qspine/linkdiag.hpp"

namespace qspine {

// Perfect non-crossing pairing of 2N points: bottom 0..N-1, top N..2N-1.
class PlanarMatching {
  public:
    PlanarMatching() = default;

    explicit PlanarMatching(std::vector<std::int16_t> pairing)
        : pair_(std::move(pairing)) {
        verify();
    }

    static PlanarMatching identity(int width) {
        std::vector<std::int16_t> p(2 * width);
        for (int i = 0; i < width; ++i) {
            p[i] = static_cast<std::int16_t>(width + i);
            p[width + i] = static_cast<std::int16_t>(i);
        }
        return PlanarMatching(std::move(p), NoVerify{});
    }

    int width() const { return static_cast<int>(pair_.size()) / 2; }
    int partner(int i) const { return pair_[i]; }
    const std::vector<std::int16_t>& pairing() const { return pair_; }

    friend bool operator==(const PlanarMatching& a, const PlanarMatching& b) {
        return a.pair_ == b.pair_;
    }

    struct Hash {
        std::size_t operator()(const PlanarMatching& m) const {
            std::size_t h = 1469598103934665603ull;
            for (std::int16_t v : m.pair_) {
                h ^= static_cast<std::size_t>(v) + 1;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

  private:
    friend class TLVector;
    friend struct SweepOps;
    struct NoVerify {};
    PlanarMatching(std::vector<std::int16_t> pairing, NoVerify) : pair_(std::move(pairing)) {}

    void verify() const {
        int n2 = static_cast<int>(pair_.size());
        if (n2 % 2 != 0) throw WidthMismatch(n2, n2 + 1);
        int N = n2 / 2;
        for (int i = 0; i < n2; ++i) {
            int j = pair_[i];
            if (j < 0 || j >= n2 || j == i || pair_[j] != i)
                throw Error("matching is not an involution without fixed points");
        }
        // Non-crossing on the rectangle boundary: order b0..b_{N-1}, t_{N-1}..t0.
        auto cyc = [N, n2](int pt) { return pt < N ? pt : n2 - 1 - (pt - N); };
        std::vector<int> stack;
        std::vector<int> open(n2, -1);
        std::vector<int> at(n2);
        for (int i = 0; i < n2; ++i) at[cyc(i)] = i;
        for (int pos = 0; pos < n2; ++pos) {
            int pt = at[pos];
            if (!stack.empty() && stack.back() == pair_[pt])
                stack.pop_back();
            else
                stack.push_back(pt);
        }
        if (!stack.empty()) throw Error("matching has crossing chords");
    }

    std::vector<std::int16_t> pair_;
};

// Formal R-linear combination of planar matchings of one width.
class TLVector {
  public:
    using Terms = std::unordered_map<PlanarMatching, RingElem, PlanarMatching::Hash>;

    TLVector() : width_(0) {}
    explicit TLVector(int width) : width_(width) {}

    static TLVector identity(long p, int width) {
        TLVector v(width);
        v.terms_.emplace(PlanarMatching::identity(width), RingElem::one(p));
        return v;
    }

    int width() const { return width_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const PlanarMatching& m, const RingElem& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const TLVector& a, const TLVector& b) {
        return a.width_ == b.width_ && a.terms_ == b.terms_;
    }

  private:
    int width_;
    Terms terms_;
};

namespace detail {

// Glue x.top_i to y.bottom_i; returns the composed pairing and the number of
// closed loops created in the glued band.
inline std::pair<std::vector<std::int16_t>, int> glue_matchings(
    const std::vector<std::int16_t>& mx, const std::vector<std::int16_t>& my, int W) {
    std::vector<std::int16_t> res(2 * W, -1);
    std::vector<char> visited(W, 0);
    auto walk = [&](int layer, int pt) -> std::pair<int, int> {
        // returns (0, bottom index) or (1, top index)
        while (true) {
            if (layer == 0) {
                int q = mx[pt];
                if (q < W) return {0, q};
                visited[q - W] = 1;
                layer = 1;
                pt = q - W;
            } else {
                int q = my[pt];
                if (q >= W) return {1, q};
                visited[q] = 1;
                layer = 0;
                pt = W + q;
            }
        }
    };
    for (int i = 0; i < W; ++i) {
        if (res[i] != -1) continue;
        auto [kind, j] = walk(0, i);
        res[i] = static_cast<std::int16_t>(j);
        res[j] = static_cast<std::int16_t>(i);
    }
    for (int i = W; i < 2 * W; ++i) {
        if (res[i] != -1) continue;
        auto [kind, j] = walk(1, i);
        res[i] = static_cast<std::int16_t>(j);
        res[j] = static_cast<std::int16_t>(i);
    }
    int loops = 0;
    for (int g0 = 0; g0 < W; ++g0) {
        if (visited[g0]) continue;
        int g = g0;
        do {
            visited[g] = 1;
            int q = mx[W + g];  // through the x layer
            g = q - W;
            visited[g] = 1;
            q = my[g];  // through the y layer
            g = q;
        } while (g != g0);
        ++loops;
    }
    return {std::move(res), loops};
}

}  // namespace detail

// Shared sweep primitives; parameterized by the bracket data.
struct SweepOps {
    long p;
    RingElem A, Ainv, delta;
    bool mirror = false;  // swaps A and A^-1; must stay off once calibrated

    explicit SweepOps(long p_, bool mirror_ = false)
        : p(p_),
          A(RingElem::v_power(p_, (p_ - 1) / 2)),
          Ainv(RingElem::v_power(p_, (p_ + 1) / 2)),
          delta(-(RingElem::v_power(p_, 1) + RingElem::v_power(p_, p_ - 1))),
          mirror(mirror_) {
        if (mirror) std::swap(A, Ainv);
    }

    long a_exp() const { return mirror ? (p + 1) / 2 : (p - 1) / 2; }
    long ainv_exp() const { return mirror ? (p - 1) / 2 : (p + 1) / 2; }

    // Compose x (first) with y (stacked on top); delta per closed loop.
    TLVector compose(const TLVector& x, const TLVector& y) const {
        if (x.width() != y.width()) throw WidthMismatch(x.width(), y.width());
        int W = x.width();
        TLVector out(W);
        for (const auto& [mx, cx] : x.terms()) {
            for (const auto& [my, cy] : y.terms()) {
                auto [pairing, loops] = detail::glue_matchings(mx.pairing(), my.pairing(), W);
                RingElem c = cx * cy;
                for (int t = 0; t < loops; ++t) c *= delta;
                out.add_term(PlanarMatching(std::move(pairing), PlanarMatching::NoVerify{}), c);
            }
        }
        return out;
    }

    // Compose every term with the turnback e_t (top points t, t+1).
    TLVector compose_e(const TLVector& x, int t) const {
        int W = x.width();
        if (t < 0 || t + 1 >= W) throw IndexOutOfRange("turnback position " + std::to_string(t));
        TLVector out(W);
        int u = W + t, w = W + t + 1;
        for (const auto& [m, c] : x.terms()) {
            auto pr = m.pairing();
            int pu = pr[u], pw = pr[w];
            if (pu == w) {
                out.add_term(m, c * delta);
            } else {
                pr[pu] = static_cast<std::int16_t>(pw);
                pr[pw] = static_cast<std::int16_t>(pu);
                pr[u] = static_cast<std::int16_t>(w);
                pr[w] = static_cast<std::int16_t>(u);
                out.add_term(PlanarMatching(std::move(pr), PlanarMatching::NoVerify{}), c);
            }
        }
        return out;
    }

    // Compose with one elementary crossing at top positions (t, t+1):
    // positive crossing = A * id + A^-1 * e_t.
    TLVector compose_crossing(const TLVector& x, int t, int sign) const {
        long ea = sign > 0 ? a_exp() : ainv_exp();
        long eb = sign > 0 ? ainv_exp() : a_exp();
        TLVector out(x.width());
        for (const auto& [m, c] : x.terms()) out.add_term(m, c.times_v_power(ea));
        TLVector turn = compose_e(x, t);
        for (const auto& [m, c] : turn.terms()) out.add_term(m, c.times_v_power(eb));
        return out;
    }

    // Embed a TL_w element into TL_W at strand offset `at`, identity elsewhere.
    TLVector embed(const TLVector& el, int W, int at) const {
        int w = el.width();
        TLVector out(W);
        for (const auto& [m, c] : el.terms()) {
            auto id = PlanarMatching::identity(W).pairing();
            for (int a = 0; a < 2 * w; ++a) {
                int ga = a < w ? at + a : W + at + (a - w);
                int b = m.partner(a);
                int gb = b < w ? at + b : W + at + (b - w);
                id[ga] = static_cast<std::int16_t>(gb);
            }
            out.add_term(PlanarMatching(std::move(id), PlanarMatching::NoVerify{}), c);
        }
        return out;
    }

    // Markov closure: join top W+i to bottom i; delta per resulting loop.
    RingElem close(const TLVector& x) const {
        int W = x.width();
        RingElem total = RingElem::zero(p);
        for (const auto& [m, c] : x.terms()) {
            std::vector<char> seen(2 * W, 0);
            int cycles = 0;
            for (int s = 0; s < 2 * W; ++s) {
                if (seen[s]) continue;
                ++cycles;
                int cur = s;
                while (!seen[cur]) {
                    seen[cur] = 1;
                    int nxt = m.partner(cur);
                    seen[nxt] = 1;
                    cur = nxt < W ? nxt + W : nxt - W;
                }
            }
            RingElem v = c;
            for (int t = 0; t < cycles; ++t) v *= delta;
            total += v;
        }
        return total;
    }
};

// The value of z_rtw: coeff * X^x_power, where X is the formal square root of
// the global dimension X^2 (X itself does not lie in Q[v] for p = 1 mod 4).
struct RtwValue {
    FieldElem coeff;
    int x_power = 0;  // 0 or 1

    friend bool operator==(const RtwValue&, const RtwValue&) = default;

    std::string to_string() const {
        return x_power ? "(" + coeff.to_string() + ") * X" : coeff.to_string();
    }
};

class SkeinEvaluator {
  public:
    explicit SkeinEvaluator(const CategoryData& cat, int width_guard = 14, bool mirror = false)
        : cat_(cat), ops_(cat.prime(), mirror), guard_(width_guard) {
        if (cat_.global_dim().is_zero() || cat_.c_plus().is_zero() || cat_.c_minus().is_zero())
            throw DegenerateConstant("category has a vanishing normalization constant");
    }

    const CategoryData& category() const { return cat_; }
    const SweepOps& ops() const { return ops_; }
    int width_guard() const { return guard_; }

    // Jones-Wenzl idempotent of width w via the Wenzl recursion
    //   f_{k+1} = f_k x 1 + ([k]/[k+1]) (f_k x 1) e_k (f_k x 1).
    // Cached; not safe to grow concurrently (prebuild before parallel use).
    const TLVector& jones_wenzl(int w) {
        long p = cat_.prime();
        if (w < 0 || w > p - 3) throw ColorOutOfRange("weight " + std::to_string(w));
        if (auto it = jw_.find(w); it != jw_.end()) return it->second;
        TLVector el = TLVector::identity(p, 0);
        if (w >= 1) el = TLVector::identity(p, 1);
        for (int k = 1; k < w; ++k) {
            TLVector wide(k + 1);
            for (const auto& [m, c] : el.terms()) wide.add_term(tensor_one(m, k), c);
            RingElem coef = exact_div(quantum_int(p, k), quantum_int(p, k + 1));
            TLVector term = ops_.compose(ops_.compose_e(wide, k - 1), wide);
            for (const auto& [m, c] : term.terms()) wide.add_term(m, c * coef);
            el = std::move(wide);
        }
        return jw_.emplace(w, std::move(el)).first->second;
    }

    void prebuild_jw(int max_w) {
        for (int w = 0; w <= max_w; w += 2) jones_wenzl(w);
    }

    // Scalar of the colored framed diagram: cable strands by w = 2z, insert one
    // JW per component at its first strand, expand crossings, close up, and
    // apply v^(t(2z))^offset per component.
    RingElem eval_colored(const FramedLink& L, const std::vector<long>& coloring) {
        long p = cat_.prime();
        long c = L.component_count();
        if (static_cast<long>(coloring.size()) != c)
            throw ColorOutOfRange("coloring size != component count");
        for (long z : coloring)
            if (!cat_.valid_label(z)) throw ColorOutOfRange("label " + std::to_string(z));

        int s = L.braid().strands;
        std::vector<int> width_of(s);
        int W = 0;
        for (int i = 0; i < s; ++i) {
            width_of[i] = static_cast<int>(2 * coloring[L.component_of_strand(i)]);
            W += width_of[i];
        }
        if (W > guard_) throw CableTooWide(W, guard_);

        RingElem factor = RingElem::one(p);
        for (long ci = 0; ci < c; ++ci)
            factor = factor.times_v_power(L.offset(ci) *
                                          cat_.twist_exp(coloring[ci]));
        if (W == 0) return factor;

        std::vector<int> offset_of(s, 0);
        for (int i = 1; i < s; ++i) offset_of[i] = offset_of[i - 1] + width_of[i - 1];

        TLVector state = TLVector::identity(p, W);
        for (long ci = 0; ci < c; ++ci) {
            int first = L.components()[ci].front();
            int w = width_of[first];
            if (w == 0) continue;
            state = ops_.compose(state, ops_.embed(jones_wenzl(w), W, offset_of[first]));
        }

        // sweep; cable widths travel with the strands
        std::vector<int> prof = width_of;
        std::vector<int> start(s, 0);
        for (const auto& l : L.braid().letters) {
            int left = l.pos - 2, right = l.pos - 1;
            int a = prof[left], b = prof[right];
            int t0 = 0;
            for (int i = 0; i < left; ++i) t0 += prof[i];
            for (int si = 0; si < b; ++si)
                for (int q = 0; q < a; ++q)
                    state = ops_.compose_crossing(state, t0 + a + si - 1 - q, l.sign);
            std::swap(prof[left], prof[right]);
        }
        return ops_.close(state) * factor;
    }

    // Z(L): universal label on every component; sum over all colorings of
    // rank-weighted colored values. Dots are ignored. The coloring sum is a
    // parallel map-reduce with a deterministic, index-ordered reduction.
    RingElem Z(const FramedLink& L) {
        long p = cat_.prime();
        long c = L.component_count();
        long labels = cat_.label_count();
        int worst = static_cast<int>((p - 3) * L.braid().strands);
        if (worst > guard_) throw CableTooWide(worst, guard_);
        prebuild_jw(static_cast<int>(p - 3));

        long total = 1;
        for (long i = 0; i < c; ++i) total *= labels;
        std::vector<RingElem> results(total);

        auto run = [&](long idx) {
            std::vector<long> coloring(c);
            long t = idx;
            for (long i = 0; i < c; ++i) {
                coloring[i] = t % labels;
                t /= labels;
            }
            RingElem weight = RingElem::one(p);
            for (long i = 0; i < c; ++i) weight *= cat_.rank(coloring[i]);
            results[idx] = weight * eval_colored(L, coloring);
        };

        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        if (total <= 4 || hw <= 1) {
            for (long i = 0; i < total; ++i) run(i);
        } else {
            std::atomic<long> next{0};
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < hw; ++t)
                pool.emplace_back([&] {
                    for (long i = next.fetch_add(1); i < total; i = next.fetch_add(1)) run(i);
                });
            for (auto& th : pool) th.join();
        }
        RingElem sum = RingElem::zero(p);
        for (const auto& r : results) sum += r;
        return sum;
    }

    // Normalized 4-thickening invariant Z(L) / X^(2n), n = number of dots.
    RingElem zhat(const FramedLink& L) {
        RingElem z = Z(L);
        RingElem denom = cat_.global_dim().pow(L.dotted_count());
        return exact_div(z, denom);
    }

    // RTW normalization of the boundary: Z(L) / (C+^s+ C-^s- X^s0), dots
    // forgotten, inertia from the linking matrix.
    RtwValue z_rtw(const FramedLink& L) {
        auto sig = signature_counts(linking_matrix(L));
        FieldElem z = to_field(Z(L));
        FieldElem denom = to_field(cat_.c_plus()).pow(sig[0]) *
                          to_field(cat_.c_minus()).pow(sig[1]) *
                          to_field(cat_.global_dim()).pow((sig[2] + 1) / 2);
        RtwValue out;
        out.coeff = z * denom.inverse();
        out.x_power = static_cast<int>(sig[2] % 2);
        return out;
    }

    // The headline 2-complex invariant: phi_p(zhat(standard thickening)).
    long z_q(const Presentation& P) { return phi_p(zhat(standard_link(P))); }

  private:
    static PlanarMatching tensor_one(const PlanarMatching& m, int w) {
        // append one through-strand on the right: TL_w -> TL_{w+1}
        std::vector<std::int16_t> out(2 * (w + 1));
        auto idx = [w](int i) { return i < w ? i : i + 1; };
        for (int i = 0; i < 2 * w; ++i) out[idx(i)] = static_cast<std::int16_t>(idx(m.partner(i)));
        out[w] = static_cast<std::int16_t>(2 * w + 1);
        out[2 * w + 1] = static_cast<std::int16_t>(w);
        return PlanarMatching(std::move(out), PlanarMatching::NoVerify{});
    }

    const CategoryData& cat_;
    SweepOps ops_;
    int guard_;
    std::map<int, TLVector> jw_;
};

}  // namespace qspine
