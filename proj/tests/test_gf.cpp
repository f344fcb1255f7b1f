#include <catch2/catch_amalgamated.hpp>

#include <hypermaps/gf.hpp>

using namespace hypermaps;

TEST_CASE("pointed disks") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 2), 5);
    REQUIRE(pointed_disk(sol, Color::white, 0) == MSeries::one(sol.vars));
    REQUIRE(pointed_disk(sol, Color::black, 0) == MSeries::one(sol.vars));
    REQUIRE(pointed_disk(sol, Color::white, 1) == sol.ak(0));
    // black, p = 2, white degree <= 2: [z^0] y^2 = b_0^2 + 2 b_1
    REQUIRE(pointed_disk(sol, Color::black, 2) == sol.bk(0) * sol.bk(0) + sol.bk(1).scaled(2));
}

TEST_CASE("trumpets and cornets") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 2), 5);
    REQUIRE(cornet(sol, Color::black, 1, 1) == MSeries::one(sol.vars)); // the directed loop
    REQUIRE(trumpet(sol, Color::white, 1, 1) == sol.ak(-1));
    REQUIRE(trumpet(sol, Color::white, 1, 2).is_zero()); // girth beyond perimeter
    REQUIRE(trumpet(sol, Color::black, 1, 1) == sol.bk(1));
    REQUIRE(cornet(sol, Color::white, 1, 1) == sol.ak(1));
}

TEST_CASE("cylinders at maximal degrees 2/2") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 2), 6);
    MSeries tw2 = sol.tw(2), tb2 = sol.tb(2);
    REQUIRE(cylinder(sol, CylKind::ww, 1, 1) == sol.ak(-1) * sol.ak(1));
    REQUIRE(cylinder(sol, CylKind::ww, 1, 1) == sol.ak(-1) * tb2);
    REQUIRE(cylinder(sol, CylKind::wb, 1, 1) == sol.ak(-1));
    REQUIRE(cylinder(sol, CylKind::one_way, 1, 1) == sol.t());
    MSeries ftilde = cylinder(sol, CylKind::two_way_bw, 1, 1);
    REQUIRE(ftilde == cylinder(sol, CylKind::wb, 1, 1) - cylinder(sol, CylKind::one_way, 1, 1));
    REQUIRE(ftilde == tw2 * cylinder(sol, CylKind::ww, 1, 1));
}

TEST_CASE("cylinder symmetry in p and q") {
    SliceSolution sol = solve_slice_system(DegreeBounds(3, 2), 4);
    for (unsigned p = 1; p <= 5; ++p)
        for (unsigned q = p; q <= 5; ++q) {
            REQUIRE(cylinder(sol, CylKind::ww, p, q) == cylinder(sol, CylKind::ww, q, p));
            REQUIRE(cylinder(sol, CylKind::bb, p, q) == cylinder(sol, CylKind::bb, q, p));
        }
}

TEST_CASE("disk values at maximal degrees 2/2") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 2), 6);
    for (DiskRoute r : {DiskRoute::compact, DiskRoute::expanded, DiskRoute::floored}) {
        REQUIRE(disk(sol, Color::white, 0, r) == sol.t());
        REQUIRE(disk(sol, Color::black, 0, r) == sol.t());
        REQUIRE(disk(sol, Color::white, 1, r) == sol.t() * sol.ak(0));
        REQUIRE(disk(sol, Color::black, 1, r) == sol.t() * sol.bk(0));
    }
    // lowest terms of F_1^white: t tb1 + t tw1 tb2
    MSeries f1 = disk(sol, Color::white, 1, DiskRoute::compact);
    MSeries low = sol.t() * sol.tb(1) + sol.t() * sol.tw(1) * sol.tb(2);
    REQUIRE(f1.truncated(3).terms() == low.terms());
}

TEST_CASE("three disk routes agree for p <= 5 at degrees <= 3") {
    for (unsigned dw = 1; dw <= 3; ++dw)
        for (unsigned db = 1; db <= 3; ++db) {
            SliceSolution sol = solve_slice_system(DegreeBounds(dw, db), 5);
            for (unsigned p = 0; p <= 5; ++p)
                for (Color c : {Color::white, Color::black}) {
                    MSeries r1 = disk(sol, c, p, DiskRoute::compact);
                    MSeries r2 = disk(sol, c, p, DiskRoute::expanded);
                    MSeries r3 = disk(sol, c, p, DiskRoute::floored);
                    INFO("dw=" << dw << " db=" << db << " p=" << p
                               << " color=" << (c == Color::white ? "w" : "b"));
                    REQUIRE(r1 == r2);
                    REQUIRE(r1 == r3);
                }
        }
}

TEST_CASE("pointing: d/dt of disk equals pointed disk") {
    SliceSolution sol = solve_slice_system(DegreeBounds(3, 3), 5);
    for (unsigned p = 0; p <= 5; ++p)
        for (Color c : {Color::white, Color::black}) {
            MSeries lhs = disk(sol, c, p, DiskRoute::compact).derivative("t");
            MSeries rhs = pointed_disk(sol, c, p);
            REQUIRE(lhs.truncated(4).terms() == rhs.truncated(4).terms());
        }
}

TEST_CASE("cylinder derivative relations") {
    SliceSolution sol = solve_slice_system(DegreeBounds(4, 4), 4);
    const unsigned N1 = 3; // derivatives are exact one order below the truncation
    for (unsigned p = 1; p <= 4; ++p)
        for (unsigned q = 1; q <= 4; ++q) {
            MSeries ww = cylinder(sol, CylKind::ww, p, q).truncated(N1);
            MSeries bb = cylinder(sol, CylKind::bb, p, q).truncated(N1);
            MSeries wb = cylinder(sol, CylKind::wb, p, q).truncated(N1);
            MSeries Fw_p = disk(sol, Color::white, p, DiskRoute::compact);
            MSeries Fw_q = disk(sol, Color::white, q, DiskRoute::compact);
            MSeries Fb_p = disk(sol, Color::black, p, DiskRoute::compact);
            MSeries Fb_q = disk(sol, Color::black, q, DiskRoute::compact);
            INFO("p=" << p << " q=" << q);
            REQUIRE(ww == Fw_p.derivative("tw" + std::to_string(q)).scaled(q).truncated(N1));
            REQUIRE(ww == Fw_q.derivative("tw" + std::to_string(p)).scaled(p).truncated(N1));
            REQUIRE(bb == Fb_p.derivative("tb" + std::to_string(q)).scaled(q).truncated(N1));
            REQUIRE(bb == Fb_q.derivative("tb" + std::to_string(p)).scaled(p).truncated(N1));
            REQUIRE(wb == Fw_p.derivative("tb" + std::to_string(q)).scaled(q).truncated(N1));
            REQUIRE(wb == Fb_q.derivative("tw" + std::to_string(p)).scaled(p).truncated(N1));
        }
}

TEST_CASE("disk-from-cylinder relations") {
    SliceSolution sol = solve_slice_system(DegreeBounds(3, 3), 5);
    for (unsigned p = 0; p <= 4; ++p) {
        Rat f(1, static_cast<long>(p) + 1);
        MSeries fw = disk(sol, Color::white, p, DiskRoute::compact);
        MSeries fb = disk(sol, Color::black, p, DiskRoute::compact);
        REQUIRE(fw == cylinder(sol, CylKind::one_way, p + 1, 1).scaled(f));
        REQUIRE(fb == cylinder(sol, CylKind::one_way, 1, p + 1).scaled(f));
        REQUIRE(fw == (cylinder(sol, CylKind::wb, p + 1, 1) -
                       cylinder(sol, CylKind::two_way_bw, 1, p + 1))
                          .scaled(f));
        REQUIRE(fb == (cylinder(sol, CylKind::wb, 1, p + 1) -
                       cylinder(sol, CylKind::two_way_bw, p + 1, 1))
                          .scaled(f));
    }
    // two-way cylinders from collapsing the degree-1 black boundary
    for (unsigned p = 0; p <= 3; ++p) {
        MSeries lhs = cylinder(sol, CylKind::two_way_bw, 1, p + 1);
        MSeries rhs = MSeries::zero(sol.vars);
        for (unsigned d : sol.bounds.white_degrees)
            if (d >= 2) rhs += sol.tw(d) * cylinder(sol, CylKind::ww, p + 1, d - 1);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("pointed-rooted consistency") {
    SliceSolution sol = solve_slice_system(DegreeBounds(3, 2), 5);
    MSeries sum_ab = MSeries::zero(sol.vars);
    for (int k = -1; k <= 1; ++k) sum_ab += sol.ak(k) * sol.bk(k);
    MSeries lhs = sum_ab - sol.t();
    MSeries via_white = MSeries::zero(sol.vars);
    for (unsigned p : sol.bounds.white_degrees) via_white += sol.tw(p) * pointed_disk(sol, Color::white, p);
    MSeries via_black = MSeries::zero(sol.vars);
    for (unsigned p : sol.bounds.black_degrees) via_black += sol.tb(p) * pointed_disk(sol, Color::black, p);
    REQUIRE(lhs == via_white);
    REQUIRE(lhs == via_black);
}

TEST_CASE("Dobrushin table") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 2), 6);
    DobrushinResult dob = dobrushin_table(sol, 4, 4); // exp and blob routes must agree internally
    REQUIRE(dob.F(0, 0) == sol.t());
    for (unsigned p = 0; p <= 4; ++p) {
        REQUIRE(dob.F(p, 0) == disk(sol, Color::white, p, DiskRoute::compact));
        REQUIRE(dob.F(0, p) == disk(sol, Color::black, p, DiskRoute::compact));
    }
    // F_{1,1} starts with the single-bridge map: coefficient of t^2 is 1
    MSeries f11 = dob.F(1, 1);
    ExpVec t2;
    t2.set(0, 2);
    REQUIRE(f11.coeff(t2) == 1);
    REQUIRE(f11.truncated(2).term_count() == 1);
    REQUIRE_THROWS_AS(dob.F(5, 0), std::out_of_range);
}

TEST_CASE("Dobrushin coefficients are nonnegative integers at small orders") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 2), 5);
    DobrushinResult dob = dobrushin_table(sol, 2, 2);
    for (unsigned p = 0; p <= 2; ++p)
        for (unsigned q = 0; q <= 2; ++q) {
            MSeries f = dob.F(p, q);
            for (const auto& [e, c] : f.terms()) {
                bool integral = denominator(c) == 1;
                bool positive = c > 0;
                REQUIRE(integral);
                REQUIRE(positive);
            }
        }
}

TEST_CASE("disk coefficients are nonnegative integers after the (p+1) division") {
    SliceSolution sol = solve_slice_system(DegreeBounds(3, 3), 5);
    for (unsigned p = 0; p <= 5; ++p)
        for (Color c : {Color::white, Color::black}) {
            MSeries f = disk(sol, c, p, DiskRoute::compact);
            for (const auto& [e, v] : f.terms()) {
                bool integral = denominator(v) == 1;
                bool positive = v > 0;
                REQUIRE(integral);
                REQUIRE(positive);
            }
        }
}
