#include <catch2/catch_amalgamated.hpp>

#include <hypermaps/slices.hpp>

using namespace hypermaps;

namespace {

// Hand-derived closed forms for maximal degrees 2/2: with g = tw2 tb2,
//   a_{-1} = t / (1-g),  a_0 = (tb1 + tb2 tw1) / (1-g),  a_1 = tb2,
//   b_0 = tw1 + tw2 a_0,  b_1 = tw2 a_{-1},  b_{-1} = 1,
// where 1/(1-g) is expanded as a geometric series up to the truncation.
struct Closed22 {
    VarSetPtr vs;
    MSeries geom, am1, a0, a1, b0, b1;

    explicit Closed22(const VarSetPtr& vars) : vs(vars), geom(vars), am1(vars), a0(vars), a1(vars), b0(vars), b1(vars) {
        MSeries g = MSeries::var(vs, "tw2") * MSeries::var(vs, "tb2");
        geom = MSeries::one(vs);
        MSeries gk = MSeries::one(vs);
        for (unsigned k = 1; 2 * k <= vs->order(); ++k) {
            gk *= g;
            geom += gk;
        }
        am1 = MSeries::var(vs, "t") * geom;
        a0 = (MSeries::var(vs, "tb1") + MSeries::var(vs, "tb2") * MSeries::var(vs, "tw1")) * geom;
        a1 = MSeries::var(vs, "tb2");
        b0 = MSeries::var(vs, "tw1") + MSeries::var(vs, "tw2") * a0;
        b1 = MSeries::var(vs, "tw2") * am1;
    }
};

} // namespace

TEST_CASE("order 0 solution is the seed") {
    for (unsigned dw = 1; dw <= 3; ++dw)
        for (unsigned db = 1; db <= 3; ++db) {
            SliceSolution sol = solve_slice_system(DegreeBounds(dw, db), 0);
            for (int k = -1; k < static_cast<int>(db); ++k) REQUIRE(sol.ak(k).is_zero());
            REQUIRE(sol.bk(-1) == MSeries::one(sol.vars));
            for (int k = 0; k < static_cast<int>(dw); ++k) REQUIRE(sol.bk(k).is_zero());
        }
}

TEST_CASE("closed form at maximal degrees 2/2, order 8") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 2), 8);
    Closed22 cf(sol.vars);
    REQUIRE(sol.ak(-1) == cf.am1);
    REQUIRE(sol.ak(0) == cf.a0);
    REQUIRE(sol.ak(1) == cf.a1);
    REQUIRE(sol.bk(-1) == MSeries::one(sol.vars));
    REQUIRE(sol.bk(0) == cf.b0);
    REQUIRE(sol.bk(1) == cf.b1);
    // denominator-free relation a_{-1} (1 - tw2 tb2) = t
    MSeries g = MSeries::var(sol.vars, "tw2") * MSeries::var(sol.vars, "tb2");
    REQUIRE(sol.ak(-1) * (MSeries::one(sol.vars) - g) == sol.t());
}

TEST_CASE("back-substitution and alternative decomposition") {
    for (unsigned dw = 1; dw <= 4; ++dw)
        for (unsigned db = 1; db <= 4; ++db) {
            unsigned N = (dw + db <= 5) ? 6 : 5;
            SliceSolution sol = solve_slice_system(DegreeBounds(dw, db), N);
            INFO("dw=" << dw << " db=" << db);
            REQUIRE(check_system(sol));
            REQUIRE(check_alternative(sol));
        }
}

TEST_CASE("no constant terms except b_{-1}") {
    SliceSolution sol = solve_slice_system(DegreeBounds(3, 3), 5);
    for (int k = -1; k < 3; ++k) REQUIRE(sol.ak(k).constant_term() == 0);
    for (int k = 0; k < 3; ++k) REQUIRE(sol.bk(k).constant_term() == 0);
    REQUIRE(sol.bk(-1) == MSeries::one(sol.vars));
}

TEST_CASE("sum k a_k b_k = -t at every bounds and order") {
    for (unsigned dw = 1; dw <= 3; ++dw)
        for (unsigned db = 1; db <= 3; ++db)
            for (unsigned N : {0u, 1u, 3u, 5u}) {
                SliceSolution sol = solve_slice_system(DegreeBounds(dw, db), N);
                INFO("dw=" << dw << " db=" << db << " N=" << N);
                REQUIRE(sum_k_ak_bk(sol) == -sol.t());
            }
}

TEST_CASE("monotone consistency: solve at N then truncate = solve at N'") {
    DegreeBounds b(3, 2);
    SliceSolution hi = solve_slice_system(b, 6);
    for (unsigned n : {0u, 2u, 4u}) {
        SliceSolution lo = solve_slice_system(b, n);
        for (int k = -1; k < 2; ++k) REQUIRE(hi.ak(k).truncated(n).terms() == lo.ak(k).terms());
        for (int k = -1; k < 3; ++k) REQUIRE(hi.bk(k).truncated(n).terms() == lo.bk(k).terms());
    }
}

TEST_CASE("idempotence: a converged solution is a fixed point") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 3), 5);
    REQUIRE(check_system(sol)); // the system *is* one more Jacobi pass
}

TEST_CASE("non-bicolored specialization: white degree 4 only, black digons") {
    DegreeBounds b(std::vector<unsigned>{4}, std::vector<unsigned>{2});
    SliceSolution sol = solve_slice_system(b, 9);
    MSeries tb2 = MSeries::var(sol.vars, "tb2");
    // with only black digons the system collapses onto the one-matrix form:
    // a_1 = tb2, a_0 = tb2 b_0, a_{-1} = t + tb2 b_1  (at tb2 = 1 these are
    // the classical a_1 = 1, a_0 = b_0 = S, a_{-1} = t + b_1 = R)
    REQUIRE(sol.ak(1) == tb2);
    REQUIRE(sol.ak(0) == tb2 * sol.bk(0));
    REQUIRE(sol.ak(-1) == sol.t() + tb2 * sol.bk(1));
    REQUIRE(check_alternative(sol));
}

TEST_CASE("x and y supports match the declared bounds") {
    SliceSolution sol = solve_slice_system(DegreeBounds(3, 2), 4);
    REQUIRE(sol.x.max_exp() == 1);
    REQUIRE(sol.x.min_exp() >= -1); // a_k = 0 for k >= db
    REQUIRE(sol.y.min_exp() == -1);
    REQUIRE(sol.y.max_exp() <= 2);
}
