#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "appendix_a.hpp"
#include "bitail.hpp"
#include "gf.hpp"
#include "report.hpp"
#include "slices.hpp"
#include "tail.hpp"
#include "walks.hpp"

namespace hypermaps {

// All-perimeter series assembled once and shared by the grand checks.
struct ResolventBundle {
    SliceSolution sol;
    int M; // tail order

    Tail Wdisk_white, Wdisk_black; // W(x) = sum_p F_p x^{-p-1}
    Tail Wpt_white, Wpt_black;     // d/dt W
    Tail z_exc_white, z_exc_black; // z_tilde_circ(x), z_bullet(y)
    Tail unit_white, unit_black;   // x z_tilde/a_{-1} and y z_bullet: constant term 1
    Tail Ypoly, Xpoly;             // polynomial parts sum_d t_d phys^{d-1} (negative exponents)
};

inline ResolventBundle build_resolvents(const SliceSolution& sol, int M) {
    if (M < 1) throw std::invalid_argument("build_resolvents: M must be >= 1");
    const VarSetPtr& vs = sol.vars;
    ResolventBundle b{sol, M,
                      Tail("x", vs, 1, M), Tail("y", vs, 1, M),
                      Tail("x", vs, 1, M), Tail("y", vs, 1, M),
                      Tail("x", vs, 1, M), Tail("y", vs, 1, M),
                      Tail("x", vs, 0, M), Tail("y", vs, 0, M),
                      Tail("x", vs, 0, M), Tail("y", vs, 0, M)};
    for (int p = 0; p + 1 <= M; ++p) {
        b.Wdisk_white.set(p + 1, disk(sol, Color::white, static_cast<unsigned>(p), DiskRoute::compact));
        b.Wdisk_black.set(p + 1, disk(sol, Color::black, static_cast<unsigned>(p), DiskRoute::compact));
        b.Wpt_white.set(p + 1, pointed_disk(sol, Color::white, static_cast<unsigned>(p)));
        b.Wpt_black.set(p + 1, pointed_disk(sol, Color::black, static_cast<unsigned>(p)));
    }
    StepWeights wa = StepWeights::from_laurent(sol.x, WalkConv::white);
    StepWeights wb = StepWeights::from_laurent(sol.y, WalkConv::black);
    b.z_exc_white = excursion_tail(wa, "x", M);
    b.z_exc_black = excursion_tail(wb, "y", M);
    b.unit_white = excursion_unit(wa, "x", M);
    b.unit_black = excursion_unit(wb, "y", M);
    b.Ypoly = Tail("x", vs, -(static_cast<int>(sol.bounds.dw) - 1), M);
    for (unsigned d : sol.bounds.white_degrees) b.Ypoly.set(-(static_cast<int>(d) - 1), sol.tw(d));
    b.Xpoly = Tail("y", vs, -(static_cast<int>(sol.bounds.db) - 1), M);
    for (unsigned d : sol.bounds.black_degrees) b.Xpoly.set(-(static_cast<int>(d) - 1), sol.tb(d));
    return b;
}

namespace detail {

inline std::string tail_mismatch_detail(const Tail& a, const Tail& b, int upto) {
    int bad = 0;
    if (a.matches(b, upto, &bad)) return "";
    MSeries diff = a.coeff(bad) - b.coeff(bad);
    ExpVec mono;
    MSeries::first_mismatch(a.coeff(bad), b.coeff(bad), mono);
    return "first mismatch at inverse exponent " + std::to_string(bad) + ", monomial " +
           diff.monomial_str(mono);
}

} // namespace detail

// d/dt W(x) = d/dx ln z_circ(x) checked in factored form: with
// z_tilde = a_{-1} x^{-1} (1+u), the right side is 1/x - d/dx log1p(u);
// the constants ln a_{-1}, and the black analogue, differentiate away.
inline CheckReport check_pointed_grand(const ResolventBundle& b) {
    CheckReport rep;
    rep.suite = "pointed-grand";
    const VarSetPtr& vs = b.sol.vars;
    {
        Tail u = b.unit_white - Tail::constant("x", vs, MSeries::one(vs), b.M);
        Tail rhs = Tail::monomial("x", vs, 1, MSeries::one(vs), b.M) -
                   tail_log1p(u).deriv_phys_inv();
        std::string d = detail::tail_mismatch_detail(b.Wpt_white, rhs, b.M);
        rep.add("dW_white/dt = d/dx ln z_circ(x)", d.empty(), d);
    }
    {
        Tail u = b.unit_black - Tail::constant("y", vs, MSeries::one(vs), b.M);
        Tail rhs = Tail::monomial("y", vs, 1, MSeries::one(vs), b.M) -
                   tail_log1p(u).deriv_phys_inv();
        std::string d = detail::tail_mismatch_detail(b.Wpt_black, rhs, b.M);
        rep.add("dW_black/dt = -d/dy ln z_bullet(y)", d.empty(), d);
    }
    return rep;
}

// Denominator-free disk identities:
//   W_white(x) = z_tilde(x) - sum_{d>=2} tw_d sum_{h>=1} z_tilde^h [z^{-h}] x^{d-1}
//   W_black(y) = a_{-1} z_bullet(y) - sum_{d>=2} tb_d sum_{h>=1} z_bullet^h [z^h] y^{d-1}
inline CheckReport check_disk_grand(const ResolventBundle& b) {
    CheckReport rep;
    rep.suite = "disk-grand";
    {
        Tail rhs = b.z_exc_white;
        for (unsigned d : b.sol.bounds.white_degrees) {
            if (d < 2) continue;
            LaurentPoly xd = b.sol.x.pow(d - 1);
            Tail zpow = b.z_exc_white;
            for (int h = 1; h <= -xd.min_exp(); ++h) {
                MSeries c = xd.coeff(-h);
                if (!c.is_zero()) rhs = rhs - zpow.scaled(b.sol.tw(d) * c);
                zpow = zpow * b.z_exc_white;
            }
        }
        std::string det = detail::tail_mismatch_detail(b.Wdisk_white, rhs, b.M);
        rep.add("W_white substitution identity", det.empty(), det);
    }
    {
        Tail rhs = b.z_exc_black.scaled(b.sol.ak(-1));
        for (unsigned d : b.sol.bounds.black_degrees) {
            if (d < 2) continue;
            LaurentPoly yd = b.sol.y.pow(d - 1);
            Tail zpow = b.z_exc_black;
            for (int h = 1; h <= yd.max_exp(); ++h) {
                MSeries c = yd.coeff(h);
                if (!c.is_zero()) rhs = rhs - zpow.scaled(b.sol.tb(d) * c);
                zpow = zpow * b.z_exc_black;
            }
        }
        std::string det = detail::tail_mismatch_detail(b.Wdisk_black, rhs, b.M);
        rep.add("W_black substitution identity", det.empty(), det);
    }
    return rep;
}

// Log-factored bivariate series c * tau1^{e1} tau2^{e2} * (1 + u): the
// mixed second derivative of its log sees only log1p(u).
struct FactoredBiLog {
    std::string c_desc;
    int e1 = 0, e2 = 0;
    BiTail unit_minus_one;

    BiTail mixed_log_deriv() const { return bitail_log1p(unit_minus_one).mixed_deriv(); }
};

namespace detail {

// Unit part of the divided difference (f(v2)-f(v1))/(v1-v2) for a pure
// tail with unit-normalized leading coefficient (coeff of tau is 1).
inline FactoredBiLog factored_divided_difference(const Tail& unit_shifted, const std::string& c_desc,
                                                 const std::string& v1, const std::string& v2) {
    BiTail dd = divided_difference(unit_shifted, v1, v2);
    BiTail unit = bitail_shift(dd, -1, -1);
    const VarSetPtr& vs = unit_shifted.varset();
    BiTail u = unit - BiTail::constant(v1, v2, vs, MSeries::one(vs), unit.order1(), unit.order2());
    return FactoredBiLog{c_desc, 1, 1, u};
}

inline std::string bitail_mismatch_detail(const BiTail& a, const BiTail& b, int h1, int h2) {
    std::pair<int, int> bad;
    if (a.matches(b, h1, h2, &bad)) return "";
    MSeries diff = a.coeff(bad.first, bad.second) - b.coeff(bad.first, bad.second);
    ExpVec mono;
    MSeries::first_mismatch(a.coeff(bad.first, bad.second), b.coeff(bad.first, bad.second), mono);
    return "first mismatch at inverse exponents (" + std::to_string(bad.first) + "," +
           std::to_string(bad.second) + "), monomial " + diff.monomial_str(mono);
}

} // namespace detail

// Grand cylinder identities against tables of fixed-perimeter cylinders.
inline CheckReport check_cylinder_grand(const ResolventBundle& b, unsigned P, unsigned Q) {
    CheckReport rep;
    rep.suite = "cylinder-grand";
    const VarSetPtr& vs = b.sol.vars;
    auto lhs_table = [&](CylKind kind, const std::string& v1, const std::string& v2) {
        BiTail t(v1, v2, vs, static_cast<int>(P) + 1, static_cast<int>(Q) + 1,
                 static_cast<int>(P + Q) + 2);
        for (unsigned p = 1; p <= P; ++p)
            for (unsigned q = 1; q <= Q; ++q)
                t.set(static_cast<int>(p) + 1, static_cast<int>(q) + 1, cylinder(b.sol, kind, p, q));
        return t;
    };

    {
        // W_wb(x,y) = -d2/dxdy log(1 - z_bullet(y)/z_circ(x))
        BiTail u = BiTail::outer(b.z_exc_white, b.z_exc_black).scaled(Rat(-1));
        BiTail rhs = bitail_log1p(u).mixed_deriv().scaled(Rat(-1));
        std::string det = detail::bitail_mismatch_detail(lhs_table(CylKind::wb, "x", "y"), rhs,
                                                         static_cast<int>(P) + 1, static_cast<int>(Q) + 1);
        rep.add("white-black cylinder log identity", det.empty(), det);
    }
    {
        // W_ww(x1,x2) = d2 log of the unit part of the divided difference of z_tilde
        Tail f = detail::tail_shift(b.unit_white, 1);
        FactoredBiLog fac = detail::factored_divided_difference(f, "a_{-1}", "x1", "x2");
        BiTail rhs = fac.mixed_log_deriv();
        std::string det = detail::bitail_mismatch_detail(lhs_table(CylKind::ww, "x1", "x2"), rhs,
                                                         static_cast<int>(P) + 1, static_cast<int>(Q) + 1);
        rep.add("white-white cylinder log identity", det.empty(), det);
    }
    {
        Tail f = detail::tail_shift(b.unit_black, 1); // equals z_bullet itself (b_{-1} = 1)
        FactoredBiLog fac = detail::factored_divided_difference(f, "-1", "y1", "y2");
        BiTail rhs = fac.mixed_log_deriv();
        std::string det = detail::bitail_mismatch_detail(lhs_table(CylKind::bb, "y1", "y2"), rhs,
                                                         static_cast<int>(P) + 1, static_cast<int>(Q) + 1);
        rep.add("black-black cylinder log identity", det.empty(), det);
    }
    return rep;
}

// ---- rational parametrization with localization at a_{-1} ----

namespace detail {

// Element of R[1/a_{-1}]: num / a_{-1}^eps. Equality is asserted only
// after clearing to a common exponent; no implicit cancellation.
struct Loc {
    MSeries num;
    int eps = 0;
};

struct LocLaurent {
    VarSetPtr vs;
    MSeries am1; // a_{-1}
    int lo, hi;  // retained window of z-exponents
    std::map<int, Loc> c;

    LocLaurent(VarSetPtr v, MSeries a, int l, int h) : vs(std::move(v)), am1(std::move(a)), lo(l), hi(h) {}

    MSeries am1_pow(int k) const {
        MSeries r = MSeries::one(vs);
        for (int i = 0; i < k; ++i) r *= am1;
        return r;
    }
    // Zero numerators are kept: the clearing exponent of a coefficient is
    // structural (which inverse powers can reach it), and must survive
    // truncation-induced vanishing of the numerator.
    void add(int e, const Loc& l) {
        if (e < lo || e > hi) return;
        auto it = c.find(e);
        if (it == c.end()) {
            c.emplace(e, l);
            return;
        }
        int eps = std::max(it->second.eps, l.eps);
        MSeries merged = it->second.num * am1_pow(eps - it->second.eps) + l.num * am1_pow(eps - l.eps);
        it->second = Loc{merged, eps};
    }
    friend LocLaurent operator*(const LocLaurent& a, const LocLaurent& b) {
        LocLaurent r(a.vs, a.am1, a.lo, a.hi);
        for (const auto& [ea, la] : a.c)
            for (const auto& [eb, lb] : b.c) r.add(ea + eb, Loc{la.num * lb.num, la.eps + lb.eps});
        return r;
    }
    bool empty() const { return c.empty(); }
};

} // namespace detail

// Y(x(z)) = y(z) (cleared by the minimal power of a_{-1} per coefficient)
// and X(y(z)) = x(z) (no clearing needed), checked on a z-window.
inline CheckReport check_parametrization(const ResolventBundle& b, int window = 6) {
    CheckReport rep;
    rep.suite = "parametrization";
    const SliceSolution& sol = b.sol;
    const VarSetPtr& vs = sol.vars;
    const MSeries am1 = sol.ak(-1);
    const MSeries one = MSeries::one(vs);

    // --- Y(x(z)) = y(z) ---
    {
        int W = std::min(window, b.M);
        detail::LocLaurent acc(vs, am1, -W, static_cast<int>(sol.bounds.dw) - 1 + W);
        // polynomial part sum_d tw_d x(z)^{d-1} (eps = 0)
        for (unsigned d : sol.bounds.white_degrees) {
            LaurentPoly xd = sol.x.pow(d - 1);
            MSeries twd = sol.tw(d);
            for (const auto& [e, m] : xd.coeffs()) acc.add(e, detail::Loc{twd * m, 0});
        }
        // inverse powers: x(z)^{-1} = z^{-1}/a_{-1} * sum_j (-v)^j with
        // v = sum_{k>=0} a_k z^{-k-1} / a_{-1}
        detail::LocLaurent xinv(vs, am1, -W - 1, 0);
        {
            detail::LocLaurent v(vs, am1, -W - 1, 0);
            for (int k = 0; k < static_cast<int>(sol.bounds.db); ++k)
                v.add(-k - 1, detail::Loc{sol.ak(k), 1});
            detail::LocLaurent geom(vs, am1, -W - 1, 0);
            geom.add(0, detail::Loc{one, 0});
            detail::LocLaurent pw = geom;
            for (int j = 1; j <= W + 1; ++j) {
                detail::LocLaurent nv = v;
                for (auto& [e, l] : nv.c) l.num = -l.num;
                pw = pw * nv;
                if (pw.empty()) break;
                for (const auto& [e, l] : pw.c) geom.add(e, l);
            }
            for (const auto& [e, l] : geom.c) xinv.add(e - 1, detail::Loc{l.num, l.eps + 1});
        }
        detail::LocLaurent xpow = xinv; // x^{-(p+1)}, starting at p = 0
        for (int p = 0; p + 1 <= b.M; ++p) {
            MSeries Fp = b.Wdisk_white.coeff(p + 1);
            for (const auto& [e, l] : xpow.c) acc.add(e, detail::Loc{l.num * Fp, l.eps});
            xpow = xpow * xinv;
        }
        // compare against y(z) after clearing
        bool ok = true;
        int max_eps = 0;
        std::string det;
        for (int e = -W; e <= static_cast<int>(sol.bounds.dw) - 1; ++e) {
            detail::Loc lhs = acc.c.count(e) ? acc.c.at(e) : detail::Loc{MSeries::zero(vs), 0};
            max_eps = std::max(max_eps, lhs.eps);
            MSeries rhs = sol.y.coeff(e) * acc.am1_pow(lhs.eps);
            if (lhs.num != rhs) {
                ok = false;
                det = "z^" + std::to_string(e);
                break;
            }
        }
        rep.add("Y(x(z)) = y(z)", ok,
                ok ? "clearing exponent E = " + std::to_string(max_eps) : det);
    }

    // --- X(y(z)) = x(z) --- (b_{-1} = 1: plain ring arithmetic)
    {
        int W = std::min(window, b.M);
        auto window_mul = [&](const LaurentPoly& A, const LaurentPoly& B) {
            LaurentPoly r("z", vs);
            for (const auto& [ea, ma] : A.coeffs())
                for (const auto& [eb, mb] : B.coeffs()) {
                    if (ea + eb > W + 1 || ea + eb < -(static_cast<int>(sol.bounds.db) + W)) continue;
                    r.add_coeff(ea + eb, ma * mb);
                }
            return r;
        };
        LaurentPoly acc("z", vs);
        for (unsigned d : sol.bounds.black_degrees) {
            LaurentPoly yd = sol.y.pow(d - 1);
            MSeries tbd = sol.tb(d);
            for (const auto& [e, m] : yd.coeffs()) acc.add_coeff(e, tbd * m);
        }
        // y(z)^{-1} = z sum_j (-vbar)^j, vbar = sum_{k>=0} b_k z^{k+1}
        LaurentPoly yinv("z", vs);
        {
            LaurentPoly vbar("z", vs);
            for (int k = 0; k < static_cast<int>(sol.bounds.dw); ++k)
                vbar.set_coeff(k + 1, -sol.bk(k));
            LaurentPoly geom("z", vs);
            geom.set_coeff(0, one);
            LaurentPoly pw = geom;
            for (int j = 1; j <= W + 1; ++j) {
                pw = window_mul(pw, vbar);
                if (pw.is_zero()) break;
                geom = geom + pw;
            }
            for (const auto& [e, m] : geom.coeffs()) yinv.add_coeff(e + 1, m);
        }
        LaurentPoly ypow = yinv;
        for (int q = 0; q + 1 <= b.M; ++q) {
            MSeries Fq = b.Wdisk_black.coeff(q + 1);
            for (const auto& [e, m] : ypow.coeffs())
                if (e <= W) acc.add_coeff(e, m * Fq);
            ypow = window_mul(ypow, yinv);
        }
        bool ok = true;
        std::string det;
        for (int e = -static_cast<int>(sol.bounds.db) + 1; e <= std::min(W, b.M); ++e) {
            MSeries lhs = acc.coeff(e);
            MSeries rhs = sol.x.coeff(e);
            if (lhs != rhs) {
                ok = false;
                det = "z^" + std::to_string(e);
                break;
            }
        }
        rep.add("X(y(z)) = x(z)", ok, det);
    }
    return rep;
}

// ---- resultant identity for the Dobrushin grand series ----

namespace detail {

// Dense bivariate polynomial in (x, y) with MSeries coefficients.
struct BiPoly {
    VarSetPtr vs;
    std::map<std::pair<int, int>, MSeries> c;

    explicit BiPoly(VarSetPtr v) : vs(std::move(v)) {}
    static BiPoly constant(const VarSetPtr& v, const MSeries& m) {
        BiPoly r(v);
        if (!m.is_zero()) r.c[{0, 0}] = m;
        return r;
    }
    void add(int i, int j, const MSeries& m) {
        auto it = c.find({i, j});
        if (it == c.end()) {
            if (!m.is_zero()) c.emplace(std::make_pair(i, j), m);
            return;
        }
        it->second += m;
        if (it->second.is_zero()) c.erase(it);
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [e, m] : b.c) r.add(e.first, e.second, m);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [e, m] : b.c) r.add(e.first, e.second, -m);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.vs);
        for (const auto& [ea, ma] : a.c)
            for (const auto& [eb, mb] : b.c) r.add(ea.first + eb.first, ea.second + eb.second, ma * mb);
        return r;
    }
    bool zero() const { return c.empty(); }
};

// Exact determinant by Laplace expansion along the first column; entries
// stay in the polynomial ring throughout (no division).
inline BiPoly bipoly_det(std::vector<std::vector<BiPoly>> m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    BiPoly acc(m[0][0].vs);
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].zero()) continue;
        std::vector<std::vector<BiPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<BiPoly> row;
            row.reserve(n - 1);
            for (std::size_t j = 1; j < n; ++j) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        BiPoly term = m[r][0] * bipoly_det(std::move(minor));
        if (r % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

} // namespace detail

// Build the Sylvester-style resultant r(x,y) of z^{db-1}(x(z)-x) and
// z(y(z)-y) and verify, as truncated inverse expansions,
//   (1 + sum F_{p,q} x^{-p-1} y^{-q-1}) a_{-1}^{dw-1} (x - X(y)) (y - Y(x)) = r(x,y).
inline CheckReport resultant_check(const ResolventBundle& b, unsigned P_max, unsigned Q_max) {
    CheckReport rep;
    rep.suite = "resultant";
    const SliceSolution& sol = b.sol;
    const VarSetPtr& vs = sol.vars;
    const int dw = static_cast<int>(sol.bounds.dw);
    const int db = static_cast<int>(sol.bounds.db);
    if (dw + db > 12) {
        rep.add("resultant matrix size", false, "matrix larger than 12x12 refused");
        return rep;
    }

    // --- r(x,y) ---
    std::vector<detail::BiPoly> arow, brow; // A and B coefficients by descending z-degree
    for (int k = -1; k <= db - 1; ++k) {
        detail::BiPoly e = detail::BiPoly::constant(vs, sol.ak(k));
        if (k == 0) e.add(1, 0, MSeries::constant(vs, -1)); // a_0 - x
        arow.push_back(e);
    }
    for (int k = dw - 1; k >= -1; --k) {
        detail::BiPoly e = detail::BiPoly::constant(vs, sol.bk(k));
        if (k == 0) e.add(0, 1, MSeries::constant(vs, -1)); // b_0 - y
        brow.push_back(e);
    }
    const int n = dw + db;
    std::vector<std::vector<detail::BiPoly>> mat(static_cast<std::size_t>(n),
                                                 std::vector<detail::BiPoly>(static_cast<std::size_t>(n),
                                                                             detail::BiPoly(vs)));
    for (int r = 0; r < dw; ++r)
        for (int j = 0; j <= db; ++j) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = arow[static_cast<std::size_t>(j)];
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= dw; ++j) mat[static_cast<std::size_t>(dw + r)][static_cast<std::size_t>(r + j)] = brow[static_cast<std::size_t>(j)];
    detail::BiPoly r_poly = detail::bipoly_det(mat);

    // --- left-hand side, expanded in inverse powers ---
    const int BIG = 64; // effectively-unbounded validity for polynomially exact factors
    int M1 = static_cast<int>(P_max) + dw + 1, M2 = static_cast<int>(Q_max) + db + 1;
    DobrushinResult dob = dobrushin_table(sol, static_cast<unsigned>(M1 - 1), static_cast<unsigned>(M2 - 1));
    BiTail lhs = dob.table + BiTail::constant("x", "y", vs, MSeries::one(vs), M1, M2);

    BiTail xmX("x", "y", vs, BIG, b.M, BIG);
    xmX.set(-1, 0, MSeries::one(vs));
    for (unsigned d : sol.bounds.black_degrees) xmX.add(0, -(static_cast<int>(d) - 1), -sol.tb(d));
    for (int q = 0; q + 1 <= b.M; ++q) xmX.add(0, q + 1, -b.Wdisk_black.coeff(q + 1));

    BiTail ymY("x", "y", vs, b.M, BIG, BIG);
    ymY.set(0, -1, MSeries::one(vs));
    for (unsigned d : sol.bounds.white_degrees) ymY.add(-(static_cast<int>(d) - 1), 0, -sol.tw(d));
    for (int p = 0; p + 1 <= b.M; ++p) ymY.add(p + 1, 0, -b.Wdisk_white.coeff(p + 1));

    MSeries clear = MSeries::one(vs);
    for (int i = 0; i < dw - 1; ++i) clear *= sol.ak(-1);
    BiTail prod = (lhs * xmX * ymY).scaled(clear);

    // The root-product evaluation of this determinant gives
    //   r = -(1 + sum F) a_{-1}^{dw-1} (x - X(y))(y - Y(x)),
    // a global sign independent of the degree bounds: the (0,0)-root
    // factor enters r as (1 - z0_circ/z0_bullet) but the grand series as
    // (1 - z0_bullet/z0_circ)^{-1}, and the two differ by -z0_bullet/z0_circ.
    BiTail rhs("x", "y", vs, BIG, BIG, BIG);
    for (const auto& [e, m] : r_poly.c) rhs.set(-e.first, -e.second, -m);

    std::string det = detail::bitail_mismatch_detail(prod, rhs, static_cast<int>(P_max), static_cast<int>(Q_max));
    rep.add("Dobrushin resultant identity", det.empty(),
            det.empty() ? "verified in the form a_{-1}^{dw-1} (1+sum F)(x-X)(y-Y) = -r; checked through x^-" +
                              std::to_string(std::min<int>(prod.order1(), static_cast<int>(P_max))) + " y^-" +
                              std::to_string(std::min<int>(prod.order2(), static_cast<int>(Q_max)))
                        : det);
    return rep;
}

} // namespace hypermaps
