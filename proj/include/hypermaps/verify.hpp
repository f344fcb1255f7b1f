#pragma once

#include <string>

#include "grand.hpp"
#include "oracle_count.hpp"

namespace hypermaps {

inline CheckReport verify_slices(const DegreeBounds& bounds, unsigned N) {
    CheckReport rep;
    rep.suite = "slices(dw=" + std::to_string(bounds.dw) + ",db=" + std::to_string(bounds.db) +
                ",N=" + std::to_string(N) + ")";
    SliceSolution sol = solve_slice_system(bounds, N);
    rep.add("back-substitution into the slice system", check_system(sol));
    rep.add("b_{-1} = 1", sol.bk(-1) == MSeries::one(sol.vars));
    rep.add("alternative decomposition a_{-1}(1 - sum tw_d P_{d-1,1}) = t", check_alternative(sol));
    bool sign = sum_k_ak_bk(sol) == -sol.t();
    rep.add("sum_k k a_k b_k = -t", sign,
            "sign convention: the sum equals -t, not +t; forced by F_0 = t "
            "through the p=0 case of the compact disk formula");
    rep.add("F_0 = t via the compact disk route",
            disk(sol, Color::white, 0, DiskRoute::compact) == sol.t() &&
                disk(sol, Color::black, 0, DiskRoute::compact) == sol.t());
    return rep;
}

inline CheckReport verify_gf(const DegreeBounds& bounds, unsigned N) {
    CheckReport rep;
    rep.suite = "gf(dw=" + std::to_string(bounds.dw) + ",db=" + std::to_string(bounds.db) +
                ",N=" + std::to_string(N) + ")";
    SliceSolution sol = solve_slice_system(bounds, N);
    const VarSetPtr& vs = sol.vars;

    {
        bool ok = true;
        std::string det;
        for (unsigned p = 0; p <= 5 && ok; ++p)
            for (Color c : {Color::white, Color::black}) {
                MSeries r1 = disk(sol, c, p, DiskRoute::compact);
                if (r1 != disk(sol, c, p, DiskRoute::expanded) ||
                    r1 != disk(sol, c, p, DiskRoute::floored)) {
                    ok = false;
                    det = "p=" + std::to_string(p);
                    break;
                }
            }
        rep.add("disk routes compact/expanded/floored agree (p <= 5)", ok, det);
    }
    {
        bool ok = true;
        for (unsigned p = 1; p <= 4 && ok; ++p)
            for (unsigned q = p; q <= 4; ++q)
                if (cylinder(sol, CylKind::ww, p, q) != cylinder(sol, CylKind::ww, q, p) ||
                    cylinder(sol, CylKind::bb, p, q) != cylinder(sol, CylKind::bb, q, p)) {
                    ok = false;
                    break;
                }
        rep.add("cylinder symmetry in (p,q) (p,q <= 4)", ok);
    }
    {
        bool ok = true;
        std::string det;
        unsigned n1 = N == 0 ? 0 : N - 1;
        for (unsigned p = 1; p <= 4 && ok; ++p)
            for (unsigned q = 1; q <= 4 && ok; ++q) {
                if (vs->has("tw" + std::to_string(q))) {
                    MSeries lhs = cylinder(sol, CylKind::ww, p, q).truncated(n1);
                    MSeries rhs = disk(sol, Color::white, p, DiskRoute::compact)
                                      .derivative("tw" + std::to_string(q))
                                      .scaled(q)
                                      .truncated(n1);
                    if (lhs.terms() != rhs.terms()) { ok = false; det = "ww p=" + std::to_string(p) + " q=" + std::to_string(q); }
                }
                if (vs->has("tb" + std::to_string(q))) {
                    MSeries lhs = cylinder(sol, CylKind::wb, p, q).truncated(n1);
                    MSeries rhs = disk(sol, Color::white, p, DiskRoute::compact)
                                      .derivative("tb" + std::to_string(q))
                                      .scaled(q)
                                      .truncated(n1);
                    if (lhs.terms() != rhs.terms()) { ok = false; det = "wb p=" + std::to_string(p) + " q=" + std::to_string(q); }
                }
                if (vs->has("tb" + std::to_string(q))) {
                    MSeries lhs = cylinder(sol, CylKind::bb, p, q).truncated(n1);
                    MSeries rhs = disk(sol, Color::black, p, DiskRoute::compact)
                                      .derivative("tb" + std::to_string(q))
                                      .scaled(q)
                                      .truncated(n1);
                    if (lhs.terms() != rhs.terms()) { ok = false; det = "bb p=" + std::to_string(p) + " q=" + std::to_string(q); }
                }
                if (vs->has("tw" + std::to_string(p))) {
                    MSeries lhs = cylinder(sol, CylKind::wb, p, q).truncated(n1);
                    MSeries rhs = disk(sol, Color::black, q, DiskRoute::compact)
                                      .derivative("tw" + std::to_string(p))
                                      .scaled(p)
                                      .truncated(n1);
                    if (lhs.terms() != rhs.terms()) { ok = false; det = "wb' p=" + std::to_string(p) + " q=" + std::to_string(q); }
                }
            }
        rep.add("cylinder = derivative of disk (all relations, p,q <= 4)", ok, det);
    }
    {
        bool ok = true;
        for (unsigned p = 0; p <= 5 && ok; ++p)
            for (Color c : {Color::white, Color::black}) {
                unsigned n1 = N == 0 ? 0 : N - 1;
                if (disk(sol, c, p, DiskRoute::compact).derivative("t").truncated(n1).terms() !=
                    pointed_disk(sol, c, p).truncated(n1).terms()) {
                    ok = false;
                    break;
                }
            }
        rep.add("d/dt disk = pointed disk (p <= 5)", ok);
    }
    {
        bool ok = true;
        for (unsigned p = 0; p <= 4 && ok; ++p) {
            Rat f(1, static_cast<long>(p) + 1);
            ok = disk(sol, Color::white, p, DiskRoute::compact) ==
                     cylinder(sol, CylKind::one_way, p + 1, 1).scaled(f) &&
                 disk(sol, Color::black, p, DiskRoute::compact) ==
                     cylinder(sol, CylKind::one_way, 1, p + 1).scaled(f) &&
                 cylinder(sol, CylKind::one_way, p + 1, 1) ==
                     cylinder(sol, CylKind::wb, p + 1, 1) - cylinder(sol, CylKind::two_way_bw, 1, p + 1);
        }
        rep.add("(p+1) F_p = one-way cylinder relations (p <= 4)", ok);
    }
    {
        bool ok = true;
        for (unsigned p = 0; p <= 3 && ok; ++p) {
            MSeries lhs = cylinder(sol, CylKind::two_way_bw, 1, p + 1);
            MSeries rhs = MSeries::zero(vs);
            for (unsigned d : sol.bounds.white_degrees)
                if (d >= 2) rhs += sol.tw(d) * cylinder(sol, CylKind::ww, p + 1, d - 1);
            ok = lhs == rhs;
        }
        rep.add("two-way cylinder collapse onto white cylinders (p <= 3)", ok);
    }
    {
        MSeries sum_ab = MSeries::zero(vs);
        int kmax = static_cast<int>(std::min(bounds.dw, bounds.db)) - 1;
        for (int k = -1; k <= kmax; ++k) sum_ab += sol.ak(k) * sol.bk(k);
        MSeries lhs = sum_ab - sol.t();
        MSeries vw = MSeries::zero(vs), vb = MSeries::zero(vs);
        for (unsigned p : bounds.white_degrees) vw += sol.tw(p) * pointed_disk(sol, Color::white, p);
        for (unsigned p : bounds.black_degrees) vb += sol.tb(p) * pointed_disk(sol, Color::black, p);
        rep.add("pointed-rooted consistency", lhs == vw && lhs == vb);
    }
    {
        bool ok = true;
        std::string det = "exp route = blob fixed point";
        try {
            DobrushinResult dob = dobrushin_table(sol, 3, 3);
            for (unsigned p = 0; p <= 3 && ok; ++p) {
                ok = dob.F(p, 0) == disk(sol, Color::white, p, DiskRoute::compact) &&
                     dob.F(0, p) == disk(sol, Color::black, p, DiskRoute::compact);
            }
            ok = ok && dob.F(0, 0) == sol.t();
        } catch (const std::exception& ex) {
            ok = false;
            det = ex.what();
        }
        rep.add("Dobrushin boundary reductions and two-route agreement", ok, det);
    }
    return rep;
}

inline CheckReport verify_grand(const DegreeBounds& bounds, unsigned N, int M) {
    SliceSolution sol = solve_slice_system(bounds, N);
    ResolventBundle b = build_resolvents(sol, M);
    CheckReport rep;
    rep.suite = "grand(dw=" + std::to_string(bounds.dw) + ",db=" + std::to_string(bounds.db) +
                ",N=" + std::to_string(N) + ",M=" + std::to_string(M) + ")";
    for (const CheckReport& sub :
         {check_pointed_grand(b), check_disk_grand(b), check_cylinder_grand(b, 4, 4),
          check_parametrization(b, std::min(M, 6)), resultant_check(b, 3, 3)})
        for (const auto& item : sub.items) rep.items.push_back(item);
    return rep;
}

inline CheckReport verify_oracle(const DegreeBounds& bounds, unsigned N, int emax) {
    using namespace oracle;
    CheckReport rep;
    rep.suite = "oracle(dw=" + std::to_string(bounds.dw) + ",db=" + std::to_string(bounds.db) +
                ",N=" + std::to_string(N) + ",emax=" + std::to_string(emax) + ")";
    SliceSolution sol = solve_slice_system(bounds, N);
    for (unsigned p = 0; p <= 3; ++p)
        for (Color c : {Color::white, Color::black}) {
            rep.items.push_back(
                compare({BKind::disk, c, c, p, 0}, emax, disk(sol, c, p, DiskRoute::compact), bounds));
            rep.items.push_back(
                compare({BKind::pointed_disk, c, c, p, 0}, emax, pointed_disk(sol, c, p), bounds));
        }
    for (unsigned p = 1; p <= 2; ++p)
        for (unsigned q = 1; q <= 2; ++q) {
            rep.items.push_back(compare({BKind::cylinder, Color::white, Color::white, p, q}, emax,
                                        cylinder(sol, CylKind::ww, p, q), bounds));
            rep.items.push_back(compare({BKind::cylinder, Color::black, Color::black, p, q}, emax,
                                        cylinder(sol, CylKind::bb, p, q), bounds));
            rep.items.push_back(compare({BKind::cylinder, Color::white, Color::black, p, q}, emax,
                                        cylinder(sol, CylKind::wb, p, q), bounds));
            rep.items.push_back(compare({BKind::one_way_cylinder, Color::white, Color::black, p, q},
                                        emax, cylinder(sol, CylKind::one_way, p, q), bounds));
            for (unsigned h = 1; h <= 3; ++h) {
                BoundarySpec s{BKind::cylinder, Color::white, Color::white, p, q};
                s.ccw_girth_filter = h;
                MSeries term = (sol.x.pow(p).coeff(static_cast<int>(h)) *
                                sol.x.pow(q).coeff(-static_cast<int>(h)))
                                   .scaled(Rat(h));
                rep.items.push_back(compare(s, emax, term, bounds));
            }
        }
    {
        DobrushinResult dob = dobrushin_table(sol, 2, 2);
        for (unsigned p = 0; p <= 2; ++p)
            for (unsigned q = 0; q <= 2; ++q)
                rep.items.push_back(compare({BKind::dobrushin, Color::white, Color::white, p, q}, emax,
                                            dob.F(p, q), bounds));
    }
    return rep;
}

} // namespace hypermaps
