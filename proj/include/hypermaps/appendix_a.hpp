#pragma once

#include <string>
#include <vector>

#include "laurent.hpp"
#include "report.hpp"
#include "tail.hpp"
#include "walks.hpp"

namespace hypermaps {

namespace detail {

inline Tail tail_shift(const Tail& t, int k) {
    Tail r(t.var(), t.varset(), t.lo() + k, t.order() + k);
    for (const auto& [e, m] : t.coeffs()) r.set(e + k, m);
    return r;
}

} // namespace detail

// The generic-weight walk suite: excursions U(s), arches, cycle lemma and
// the Wiener-Hopf factorization, all checked coefficientwise with exact
// arithmetic. Returns one pass/fail item per identity.
inline CheckReport appendixA_suite(unsigned d, unsigned s_order, int u_range) {
    CheckReport rep;
    rep.suite = "appendix-a(d=" + std::to_string(d) + ",s_order=" + std::to_string(s_order) + ")";
    const int M = static_cast<int>(s_order);
    VarSetPtr vs = walk_vars(d, s_order);
    StepWeights w = StepWeights::generic(d, vs);
    const MSeries one = MSeries::one(vs);

    Tail U = excursion_tail(w, "s", M);
    std::vector<Tail> Upow; // U^0..U^{d+1}
    {
        Tail acc = Tail::constant("s", vs, one, M);
        for (unsigned k = 0; k <= d + 1; ++k) {
            Upow.push_back(acc);
            acc = acc * U;
        }
    }

    // (i) defining equation, the denominator-free form of 1 = s P(U(s))
    {
        Tail rhs = Tail::zero("s", vs, M);
        for (int j = -1; j <= static_cast<int>(d); ++j)
            rhs = rhs + detail::tail_shift(Upow[static_cast<std::size_t>(j + 1)].scaled(w.inc(j)), 1);
        int bad = 0;
        bool ok = U.matches(rhs, M, &bad);
        rep.add("U = s sum_j p_j U^{j+1}", ok, ok ? "" : "first mismatch at s^" + std::to_string(bad));
    }

    // P(u) and its powers
    LaurentPoly P("u", vs);
    for (int j = -1; j <= static_cast<int>(d); ++j) P.set_coeff(j, w.inc(j));
    std::vector<LaurentPoly> Pl;
    {
        LaurentPoly acc("u", vs);
        acc.set_coeff(0, one);
        for (unsigned l = 0; l <= s_order; ++l) {
            Pl.push_back(acc);
            acc = acc * P;
        }
    }

    // (ii) cycle lemma [s^l] U^k = (k/l) P_{l,-k}, against both the Laurent
    // convolution and the position DP
    {
        bool ok = true;
        std::string detail;
        unsigned kmax = std::min<unsigned>(6, s_order);
        for (unsigned k = 1; k <= kmax && ok; ++k) {
            Tail Uk = U.pow(k);
            for (unsigned l = 1; l <= std::min<unsigned>(6, s_order) && ok; ++l) {
                MSeries lhs = Uk.coeff(static_cast<int>(l));
                MSeries plk = Pl[l].coeff(-static_cast<int>(k));
                MSeries dp = walk_count_dp(w, l, -static_cast<int>(k));
                if (plk != dp) {
                    ok = false;
                    detail = "P_{l,-k} Laurent vs DP mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l);
                    break;
                }
                if (lhs != plk.scaled(Rat(static_cast<long>(k), static_cast<long>(l)))) {
                    ok = false;
                    detail = "k=" + std::to_string(k) + " l=" + std::to_string(l);
                }
            }
        }
        rep.add("cycle lemma [s^l]U^k = (k/l) P_{l,-k}", ok, detail);
    }

    // arch series: strict from the U-decomposition, both from the DP
    auto arch_strict_formula = [&](int h) {
        Tail r = Tail::zero("s", vs, M);
        for (int j = h; j <= static_cast<int>(d); ++j)
            r = r + Upow[static_cast<std::size_t>(j - h)].scaled(w.inc(j));
        return detail::tail_shift(r, 1);
    };
    auto arch_dp = [&](int h, bool strict) {
        Tail r = Tail::zero("s", vs, M);
        for (unsigned l = strict ? 1 : 0; l <= s_order; ++l)
            r.set(static_cast<int>(l), walk_count_dp_interior(w, l, h, strict ? h + 1 : h));
        return r;
    };

    std::vector<Tail> Astrict, Ageq;
    for (int h = 0; h <= static_cast<int>(d); ++h) {
        Astrict.push_back(arch_strict_formula(h));
        Ageq.push_back(arch_dp(h, false));
    }

    {
        bool ok = true;
        std::string detail;
        for (int h = 0; h <= static_cast<int>(d) && ok; ++h) {
            int bad = 0;
            if (!Astrict[static_cast<std::size_t>(h)].matches(arch_dp(h, true), M, &bad)) {
                ok = false;
                detail = "tilt " + std::to_string(h) + " at s^" + std::to_string(bad);
            }
        }
        rep.add("A_h^> decomposition = strict-arch DP", ok, detail);
    }

    Tail one_minus_A0 = Tail::constant("s", vs, one, M) - Astrict[0];
    {
        Tail lhs = Ageq[0] * one_minus_A0;
        int bad = 0;
        bool ok = lhs.matches(Tail::constant("s", vs, one, M), M, &bad);
        rep.add("A_0^>= (1 - A_0^>) = 1", ok, ok ? "" : "at s^" + std::to_string(bad));
    }
    {
        bool ok = true;
        std::string detail;
        for (int h = 1; h <= static_cast<int>(d) && ok; ++h) {
            int bad = 0;
            if (!(Ageq[static_cast<std::size_t>(h)] * one_minus_A0)
                     .matches(Astrict[static_cast<std::size_t>(h)], M, &bad)) {
                ok = false;
                detail = "tilt " + std::to_string(h) + " at s^" + std::to_string(bad);
            }
        }
        rep.add("A_h^>= (1 - A_0^>) = A_h^>", ok, detail);
    }
    {
        Tail lhs = U * one_minus_A0;
        Tail rhs = Tail::monomial("s", vs, 1, w.inc(-1), M);
        int bad = 0;
        bool ok = lhs.matches(rhs, M, &bad);
        rep.add("U (1 - A_0^>) = s p_{-1}", ok, ok ? "" : "at s^" + std::to_string(bad));
    }

    // Wiener-Hopf factorization, line 1:
    // 1 - sP(u) = (1 - U/u)(1 - sum_{h>=0} A_h^> u^h), coefficient of u^h.
    auto As = [&](int h) {
        if (h < 0 || h > static_cast<int>(d)) return Tail::zero("s", vs, M);
        return Astrict[static_cast<std::size_t>(h)];
    };
    auto Ag = [&](int h) {
        if (h < 1 || h > static_cast<int>(d)) return Tail::zero("s", vs, M);
        return Ageq[static_cast<std::size_t>(h)];
    };
    {
        bool ok = true;
        std::string detail;
        for (int h = -1; h <= u_range && ok; ++h) {
            Tail lhs = Tail::zero("s", vs, M);
            if (h == 0) lhs = lhs + Tail::constant("s", vs, one, M);
            if (h >= -1 && h <= static_cast<int>(d))
                lhs = lhs - Tail::monomial("s", vs, 1, w.inc(h), M);
            Tail rhs = Tail::zero("s", vs, M);
            if (h == 0) rhs = rhs + Tail::constant("s", vs, one, M);
            rhs = rhs - As(h);
            if (h == -1) rhs = rhs - U;
            rhs = rhs + U * As(h + 1);
            int bad = 0;
            if (!lhs.matches(rhs, M, &bad)) {
                ok = false;
                detail = "u^" + std::to_string(h) + " at s^" + std::to_string(bad);
            }
        }
        rep.add("Wiener-Hopf line 1", ok, detail);
    }
    // line 2 (cleared by U): U (1 - sP(u)) = s p_{-1} (1-U/u)(1 - sum_{h>0} A_h^>= u^h)
    {
        bool ok = true;
        std::string detail;
        Tail spm1 = Tail::monomial("s", vs, 1, w.inc(-1), M);
        for (int h = -1; h <= u_range && ok; ++h) {
            Tail lhs = Tail::zero("s", vs, M);
            if (h == 0) lhs = lhs + U;
            if (h >= -1 && h <= static_cast<int>(d))
                lhs = lhs - detail::tail_shift(U.scaled(w.inc(h)), 1);
            Tail rhs = Tail::zero("s", vs, M);
            if (h == 0) rhs = rhs + spm1;
            rhs = rhs - spm1 * Ag(h);
            if (h == -1) rhs = rhs - spm1 * U;
            rhs = rhs + spm1 * U * Ag(h + 1);
            int bad = 0;
            if (!lhs.matches(rhs, M, &bad)) {
                ok = false;
                detail = "u^" + std::to_string(h) + " at s^" + std::to_string(bad);
            }
        }
        rep.add("Wiener-Hopf line 2", ok, detail);
    }

    // logseries: ln(U/(s p_{-1})) = sum_l P_{l,0} s^l / l
    {
        Tail V = excursion_unit(w, "s", M);
        Tail u = V - Tail::constant("s", vs, one, M);
        Tail lhs = tail_log1p(u);
        Tail rhs = Tail::zero("s", vs, M);
        for (unsigned l = 1; l <= s_order; ++l)
            rhs.set(static_cast<int>(l), Pl[l].coeff(0).scaled(Rat(1, static_cast<long>(l))));
        int bad = 0;
        bool ok = lhs.matches(rhs, M, &bad);
        // the normalization itself: excursion_tail = s p_{-1} V
        Tail recon = detail::tail_shift(V.scaled(w.inc(-1)), 1);
        int bad2 = 0;
        bool ok2 = recon.matches(U, M, &bad2);
        rep.add("ln(U/(s p_-1)) = sum P_{l,0} s^l / l", ok && ok2,
                ok ? (ok2 ? "" : "normalization at s^" + std::to_string(bad2))
                   : "at s^" + std::to_string(bad));
    }

    return rep;
}

} // namespace hypermaps
