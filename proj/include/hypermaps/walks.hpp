#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "slices.hpp"
#include "tail.hpp"

namespace hypermaps {

enum class WalkConv { white, black };

// Step weights of a downward-skip-free walk: w[j+1] is the weight of a
// step with increment j, for j = -1..d.
struct StepWeights {
    int d;
    std::vector<MSeries> w;

    const MSeries& inc(int j) const { return w.at(static_cast<std::size_t>(j + 1)); }

    static StepWeights from_laurent(const LaurentPoly& P, WalkConv conv) {
        int d = (conv == WalkConv::white) ? -P.min_exp() : P.max_exp();
        StepWeights s;
        s.d = d;
        for (int j = -1; j <= d; ++j)
            s.w.push_back(conv == WalkConv::white ? P.coeff(-j) : P.coeff(j));
        return s;
    }
    static StepWeights generic(unsigned d, const VarSetPtr& vs) {
        StepWeights s;
        s.d = static_cast<int>(d);
        for (int j = -1; j <= static_cast<int>(d); ++j)
            s.w.push_back(MSeries::var(vs, "p" + std::to_string(j)));
        return s;
    }
};

// P^o_{p,h} = [z^{-h}] x(z)^p  (white) or P^b_{p,h} = [z^h] y(z)^p (black):
// weighted DSF walks with p steps from 0 to h.
inline MSeries walk_count(const LaurentPoly& P, unsigned p, int h, WalkConv conv) {
    LaurentPoly Pp = P.pow(p);
    return conv == WalkConv::white ? Pp.coeff(-h) : Pp.coeff(h);
}

// Dynamic-programming count of DSF walks with p steps from 0 to h, never
// visiting a position below `floor` (no constraint when floor is absent).
// Independent of the Laurent-power route.
inline MSeries walk_count_dp(const StepWeights& w, unsigned p, int h,
                             std::optional<int> floor = std::nullopt) {
    const VarSetPtr& vs = w.w.front().varset();
    int lo = floor.value_or(-static_cast<int>(p));
    if (lo > 0) return MSeries::zero(vs); // start position 0 already below floor
    int hi = static_cast<int>(p) * std::max(w.d, 0);
    if (h < lo || h > hi) return MSeries::zero(vs);
    auto idx = [&](int pos) { return static_cast<std::size_t>(pos - lo); };
    std::vector<MSeries> cur(static_cast<std::size_t>(hi - lo + 1), MSeries::zero(vs));
    cur[idx(0)] = MSeries::one(vs);
    for (unsigned step = 0; step < p; ++step) {
        std::vector<MSeries> nxt(cur.size(), MSeries::zero(vs));
        for (int pos = lo; pos <= hi; ++pos) {
            if (cur[idx(pos)].is_zero()) continue;
            for (int j = -1; j <= w.d; ++j) {
                int np = pos + j;
                if (np < lo || np > hi) continue;
                nxt[idx(np)] += cur[idx(pos)] * w.inc(j);
            }
        }
        cur = std::move(nxt);
    }
    return cur[idx(h)];
}

// Arch-style count: walks with p steps from 0 to h whose *interior*
// positions (after step 1, before step p) are all >= floor; start and end
// are exempt.
inline MSeries walk_count_dp_interior(const StepWeights& w, unsigned p, int h, int floor) {
    const VarSetPtr& vs = w.w.front().varset();
    if (p == 0) return h == 0 ? MSeries::one(vs) : MSeries::zero(vs);
    if (p == 1) return (h >= -1 && h <= w.d) ? w.inc(h) : MSeries::zero(vs);
    int lo = std::min({floor, 0, h});
    int hi = static_cast<int>(p) * std::max(w.d, 0);
    if (h < lo || h > hi) return MSeries::zero(vs);
    auto idx = [&](int pos) { return static_cast<std::size_t>(pos - lo); };
    std::vector<MSeries> cur(static_cast<std::size_t>(hi - lo + 1), MSeries::zero(vs));
    cur[idx(0)] = MSeries::one(vs);
    for (unsigned step = 0; step < p; ++step) {
        bool constrain = step + 1 < p; // positions after this step are interior
        std::vector<MSeries> nxt(cur.size(), MSeries::zero(vs));
        for (int pos = lo; pos <= hi; ++pos) {
            if (cur[idx(pos)].is_zero()) continue;
            for (int j = -1; j <= w.d; ++j) {
                int np = pos + j;
                if (np < lo || np > hi) continue;
                if (constrain && np < floor) continue;
                nxt[idx(np)] += cur[idx(pos)] * w.inc(j);
            }
        }
        cur = std::move(nxt);
    }
    return cur[idx(h)];
}

// The unique tail T with zero constant term satisfying
//   T = tau * sum_k w_k T^{k+1},
// computed by fixed-point iteration (one exact order per pass).
// Houses z_bullet(y) (weights b, tau = 1/y), z_tilde_circ(x) (weights a,
// tau = 1/x) and U(s) (generic weights, tau = s).
inline Tail excursion_tail(const StepWeights& w, const std::string& var, int M) {
    const VarSetPtr& vs = w.w.front().varset();
    Tail T = Tail::zero(var, vs, M);
    for (int pass = 0; pass < M; ++pass) {
        Tail next = Tail::zero(var, vs, M);
        Tail power = Tail::constant(var, vs, MSeries::one(vs), M); // T^0
        for (int k = -1; k <= w.d; ++k) {
            // add tau * w_k * T^{k+1}
            Tail term = power.scaled(w.inc(k));
            for (const auto& [e, m] : term.coeffs()) next.add(e + 1, m);
            power = power * T;
        }
        // Iterated from T=0, the first `pass` orders are already exact, so
        // `next` is exact at least one order further; keep the window at M.
        if (next.coeffs() == T.coeffs()) {
            T = next;
            break;
        }
        T = next;
    }
    return T;
}

inline Tail excursion_tail(const LaurentPoly& P, WalkConv conv, int M) {
    return excursion_tail(StepWeights::from_laurent(P, conv), conv == WalkConv::white ? "x" : "y", M);
}

// Unit-normalized excursion series: the tail U_hat with constant term 1
// such that excursion_tail = w_{-1} * tau * U_hat. Satisfies
//   U_hat = 1 + sum_{j>=0} w_j w_{-1}^j tau^{j+1} U_hat^{j+1}
// which stays inside the coefficient ring (no division by w_{-1}).
inline Tail excursion_unit(const StepWeights& w, const std::string& var, int M) {
    const VarSetPtr& vs = w.w.front().varset();
    Tail U = Tail::constant(var, vs, MSeries::one(vs), M);
    for (int pass = 0; pass < M; ++pass) {
        Tail next = Tail::constant(var, vs, MSeries::one(vs), M);
        MSeries wm1_pow = MSeries::one(vs);
        Tail power = U; // U^(j+1) starting at j=0
        for (int j = 0; j <= w.d; ++j) {
            Tail term = power.scaled(w.inc(j) * wm1_pow);
            for (const auto& [e, m] : term.coeffs()) next.add(e + j + 1, m);
            wm1_pow *= w.inc(-1);
            power = power * U;
        }
        if (next.coeffs() == U.coeffs()) {
            U = next;
            break;
        }
        U = next;
    }
    return U;
}

} // namespace hypermaps
