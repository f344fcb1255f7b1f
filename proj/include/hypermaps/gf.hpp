#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitail.hpp"
#include "slices.hpp"
#include "walks.hpp"

namespace hypermaps {

enum class Color { white, black };
enum class DiskRoute { compact, expanded, floored };
enum class CylKind { ww, bb, wb, one_way, two_way_bw };

// d F_p / dt: [z^0] x(z)^p (white) or [z^0] y(z)^p (black).
inline MSeries pointed_disk(const SliceSolution& sol, Color color, unsigned p) {
    const LaurentPoly& P = color == Color::white ? sol.x : sol.y;
    return P.pow(p).coeff(0);
}

// White trumpet (perimeter p, girth h): [z^h] x^p; black trumpet: [z^h] y^p.
// White cornet: [z^{-h}] x^p; black cornet: [z^{-h}] y^p (no vertex weight
// on the strictly tight boundary).
inline MSeries trumpet(const SliceSolution& sol, Color color, unsigned p, unsigned h) {
    const LaurentPoly& P = color == Color::white ? sol.x : sol.y;
    return P.pow(p).coeff(static_cast<int>(h));
}
inline MSeries cornet(const SliceSolution& sol, Color color, unsigned p, unsigned h) {
    const LaurentPoly& P = color == Color::white ? sol.x : sol.y;
    return P.pow(p).coeff(-static_cast<int>(h));
}

namespace detail {

// sum over h >= hmin of h * [z^h]A * [z^{-h}]B, support-bounded.
inline MSeries h_sum(const LaurentPoly& A, const LaurentPoly& B, int hmin) {
    MSeries s = MSeries::zero(A.varset());
    for (const auto& [h, cA] : A.coeffs()) {
        if (h < hmin) continue;
        MSeries cB = B.coeff(-h);
        if (cB.is_zero()) continue;
        s += (cA * cB).scaled(Rat(h));
    }
    return s;
}

} // namespace detail

// Cylinder generating functions (two monochromatic rooted boundaries,
// outer degree p, central degree q); `one_way` is  F_hat^{ow} (sum over
// all h) and `two_way_bw` is F_tilde^{bw} (black outer, white central,
// finite ccw-girth).
inline MSeries cylinder(const SliceSolution& sol, CylKind kind, unsigned p, unsigned q) {
    if (p < 1 || q < 1) throw std::invalid_argument("cylinder: boundary degrees must be >= 1");
    switch (kind) {
    case CylKind::ww: return detail::h_sum(sol.x.pow(p), sol.x.pow(q), 1);
    case CylKind::bb: return detail::h_sum(sol.y.pow(p), sol.y.pow(q), 1);
    case CylKind::wb: return detail::h_sum(sol.x.pow(p), sol.y.pow(q), 1);
    case CylKind::one_way: return detail::h_sum(sol.x.pow(p), sol.y.pow(q), INT_MIN);
    case CylKind::two_way_bw: return detail::h_sum(sol.y.pow(p), sol.x.pow(q), 1);
    }
    throw std::logic_error("cylinder: bad kind");
}

// Monochromatic disk generating function F_p by one of three routes; all
// three must agree exactly (checked by the verification suites).
inline MSeries disk(const SliceSolution& sol, Color color, unsigned p, DiskRoute route) {
    const VarSetPtr& vs = sol.vars;
    if (route == DiskRoute::compact) {
        if (color == Color::white) {
            // (1/(p+1)) sum_h h b_{-h} [z^h] x^{p+1}
            LaurentPoly xp = sol.x.pow(p + 1);
            MSeries s = MSeries::zero(vs);
            for (const auto& [h, c] : xp.coeffs()) {
                int bi = -h;
                if (bi < -1 || bi >= static_cast<int>(sol.bounds.dw)) continue;
                s += (sol.bk(bi) * c).scaled(Rat(h));
            }
            return s.scaled(Rat(1, static_cast<long>(p) + 1));
        }
        // (1/(p+1)) sum_h h a_{-h} [z^{-h}] y^{p+1}
        LaurentPoly yp = sol.y.pow(p + 1);
        MSeries s = MSeries::zero(vs);
        for (const auto& [e, c] : yp.coeffs()) {
            // e = -h, so h = -e and a_{-h} = a_e
            if (e < -1 || e >= static_cast<int>(sol.bounds.db)) continue;
            s += (sol.ak(e) * c).scaled(Rat(-e));
        }
        return s.scaled(Rat(1, static_cast<long>(p) + 1));
    }
    if (route == DiskRoute::expanded) {
        if (color == Color::white) {
            LaurentPoly xp = sol.x.pow(p + 1);
            MSeries s = xp.coeff(1);
            for (unsigned d : sol.bounds.white_degrees) {
                if (d < 2) continue;
                s -= sol.tw(d) * detail::h_sum(xp, sol.x.pow(d - 1), 1);
            }
            return s.scaled(Rat(1, static_cast<long>(p) + 1));
        }
        LaurentPoly yp = sol.y.pow(p + 1);
        MSeries s = sol.ak(-1) * yp.coeff(-1);
        for (unsigned d : sol.bounds.black_degrees) {
            if (d < 2) continue;
            // sum_{h>=1} h [z^{-h}] y^{p+1} [z^h] y^{d-1}
            s -= sol.tb(d) * detail::h_sum(sol.y.pow(d - 1), yp, 1);
        }
        return s.scaled(Rat(1, static_cast<long>(p) + 1));
    }
    // floored route: nonnegative-walk DP counts, no division by p+1.
    WalkConv conv = color == Color::white ? WalkConv::white : WalkConv::black;
    StepWeights w = StepWeights::from_laurent(color == Color::white ? sol.x : sol.y, conv);
    MSeries s = sol.t() * walk_count_dp(w, p, 0, 0);
    if (color == Color::white) {
        for (unsigned d : sol.bounds.white_degrees) {
            if (d < 2) continue;
            LaurentPoly xd = sol.x.pow(d - 1);
            MSeries inner = MSeries::zero(vs);
            for (int h = 1; h <= static_cast<int>(p); ++h) {
                MSeries trum = xd.coeff(-(h + 1)); // P^o_{d-1, h+1}
                if (trum.is_zero()) continue;
                inner += trum * walk_count_dp(w, p, -h, -h);
            }
            s -= sol.ak(-1) * sol.tw(d) * inner;
        }
    } else {
        for (unsigned d : sol.bounds.black_degrees) {
            if (d < 2) continue;
            LaurentPoly yd = sol.y.pow(d - 1);
            MSeries inner = MSeries::zero(vs);
            for (int h = 1; h <= static_cast<int>(p); ++h) {
                MSeries trum = yd.coeff(h + 1); // P^b_{d-1, h+1}
                if (trum.is_zero()) continue;
                inner += trum * walk_count_dp(w, p, -h, -h);
            }
            s -= sol.tb(d) * inner;
        }
    }
    return s;
}

// One-way cylinder grand data: hatF_{p,q} = sum_{h in Z} h [z^h]x^p [z^{-h}]y^q.
inline MSeries hatF(const SliceSolution& sol, unsigned p, unsigned q) {
    return cylinder(sol, CylKind::one_way, p, q);
}

// Dobrushin table up to boundary type (P_max, Q_max), computed by the
// exponential route; the independent blob fixed point must agree or we
// refuse to return a value.
struct DobrushinResult {
    BiTail table; // coefficient of x^{-p-1} y^{-q-1} is F_{p,q}
    unsigned p_max, q_max;

    MSeries F(unsigned p, unsigned q) const {
        if (p > p_max || q > q_max) throw std::out_of_range("dobrushin: (p,q) beyond built orders");
        return table.coeff(static_cast<int>(p) + 1, static_cast<int>(q) + 1);
    }
};

inline DobrushinResult dobrushin_table(const SliceSolution& sol, unsigned P_max, unsigned Q_max) {
    const VarSetPtr& vs = sol.vars;
    int M1 = static_cast<int>(P_max) + 1, M2 = static_cast<int>(Q_max) + 1;
    BiTail L("x", "y", vs, M1, M2, M1 + M2);
    BiTail H("x", "y", vs, M1, M2, M1 + M2);
    std::vector<LaurentPoly> xp, yq;
    for (int p = 1; p <= M1; ++p) xp.push_back(sol.x.pow(static_cast<unsigned>(p)));
    for (int q = 1; q <= M2; ++q) yq.push_back(sol.y.pow(static_cast<unsigned>(q)));
    for (int p = 1; p <= M1; ++p)
        for (int q = 1; q <= M2; ++q) {
            MSeries f = detail::h_sum(xp[static_cast<std::size_t>(p - 1)],
                                      yq[static_cast<std::size_t>(q - 1)], INT_MIN);
            H.set(p, q, f);
            L.set(p, q, f.scaled(Rat(1, static_cast<long>(p) * q)));
        }

    BiTail dob = bitail_exp(L);
    dob.set(0, 0, MSeries::zero(vs)); // exp(L) - 1

    // Blob route: solve x dx B = I_y(H) (1 - B), then D = sum_k B^k; the
    // blob relation says D is the Dobrushin grand series.
    BiTail one = BiTail::constant("x", "y", vs, MSeries::one(vs), M1, M2);
    BiTail B = BiTail::zero("x", "y", vs, M1, M2);
    BiTail IyH = H.inv_xlogderiv(false);
    for (int pass = 0; pass <= M1 + M2 + 2; ++pass) {
        BiTail G = IyH * (one - B);
        BiTail nB = G.inv_xlogderiv(true);
        if (nB.coeffs() == B.coeffs()) break;
        B = nB;
    }
    BiTail D = BiTail::zero("x", "y", vs, M1, M2);
    for (int pass = 0; pass <= M1 + M2 + 2; ++pass) {
        BiTail nD = B * (one + D);
        if (nD.coeffs() == D.coeffs()) break;
        D = nD;
    }

    std::pair<int, int> bad;
    if (!dob.matches(D, M1, M2, &bad))
        throw std::runtime_error("dobrushin: exp route and blob route disagree at x^-" +
                                 std::to_string(bad.first) + " y^-" + std::to_string(bad.second));
    return DobrushinResult{dob, P_max, Q_max};
}

inline MSeries dobrushin(const SliceSolution& sol, unsigned p, unsigned q, unsigned P_max, unsigned Q_max) {
    return dobrushin_table(sol, P_max, Q_max).F(p, q);
}

} // namespace hypermaps
