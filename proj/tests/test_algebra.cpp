#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hypermaps/bitail.hpp>
#include <hypermaps/laurent.hpp>
#include <hypermaps/mseries.hpp>
#include <hypermaps/tail.hpp>

using namespace hypermaps;

namespace {

MSeries random_series(const VarSetPtr& vs, std::mt19937& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, 2);
    std::uniform_int_distribution<int> coefd(-4, 4);
    MSeries r = MSeries::zero(vs);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        MSeries m = MSeries::constant(vs, Rat(coefd(rng)));
        for (unsigned v = 0; v < vs->size(); ++v) {
            int e = expd(rng);
            for (int k = 0; k < e; ++k) m *= MSeries::var(vs, vs->name(v));
        }
        r += m;
    }
    return r;
}

Tail random_tail(const std::string& var, const VarSetPtr& vs, std::mt19937& rng, int M) {
    Tail u = Tail::zero(var, vs, M);
    for (int e = 1; e <= M; ++e) u.set(e, random_series(vs, rng, 3));
    return u;
}

} // namespace

TEST_CASE("ms_mul on small closed forms") {
    {
        auto vs = VarSet::make({"t"}, 2);
        MSeries t = MSeries::var(vs, "t");
        MSeries t2 = t * t;
        REQUIRE(t2 == t.pow(2));
        ExpVec e;
        e.set(0, 2);
        REQUIRE(t2.coeff(e) == 1);
        REQUIRE(t2.term_count() == 1);
    }
    {
        auto vs = VarSet::make({"t"}, 1);
        MSeries t = MSeries::var(vs, "t");
        REQUIRE((t * t).is_zero()); // truncation drops degree 2
    }
    {
        auto vs = VarSet::make({"t"}, 3);
        MSeries one = MSeries::one(vs);
        MSeries t = MSeries::var(vs, "t");
        MSeries p = (one + t) * (one - t);
        REQUIRE(p == one - t * t);
    }
}

TEST_CASE("ms_mul rejects varset mismatch") {
    auto vs1 = VarSet::make({"t"}, 3);
    auto vs2 = VarSet::make({"t", "tw1"}, 3);
    REQUIRE_THROWS_AS(MSeries::var(vs1, "t") * MSeries::var(vs2, "t"), std::invalid_argument);
}

TEST_CASE("ms_derivative on small closed forms") {
    auto vs = VarSet::make({"t", "tw1", "tw2", "tb2"}, 4);
    MSeries t = MSeries::var(vs, "t");
    MSeries tw1 = MSeries::var(vs, "tw1");
    MSeries tw2 = MSeries::var(vs, "tw2");
    MSeries tb2 = MSeries::var(vs, "tb2");

    REQUIRE((t * t).derivative("t") == t.scaled(2));
    REQUIRE(tw1.derivative("t").is_zero());
    REQUIRE((t * tw2 * tb2).derivative("tw2") == t * tb2);
    REQUIRE_THROWS_AS(t.derivative("nope"), std::invalid_argument);
}

TEST_CASE("ring axioms up to truncation on random triples") {
    auto vs = VarSet::make({"t", "tw1", "tb1"}, 6);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        MSeries a = random_series(vs, rng);
        MSeries b = random_series(vs, rng);
        MSeries c = random_series(vs, rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
    }
}

TEST_CASE("Leibniz rule exact up to degree N-1") {
    auto vs = VarSet::make({"t", "tw1", "tb1"}, 5);
    std::mt19937 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        MSeries a = random_series(vs, rng);
        MSeries b = random_series(vs, rng);
        MSeries lhs = (a * b).derivative("t");
        MSeries rhs = a.derivative("t") * b + a * b.derivative("t");
        REQUIRE(lhs.truncated(4) == rhs.truncated(4));
    }
}

TEST_CASE("monotone truncation: multiply-then-truncate = truncate-then-multiply") {
    auto vs6 = VarSet::make({"t", "tw1"}, 6);
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        MSeries a = random_series(vs6, rng);
        MSeries b = random_series(vs6, rng);
        for (unsigned n = 0; n <= 5; ++n)
            REQUIRE((a * b).truncated(n) == (a.truncated(n) * b.truncated(n)).truncated(n));
    }
}

TEST_CASE("tail_log1p and tail_exp") {
    auto vs = VarSet::make({"t", "tw1"}, 6);
    SECTION("log1p(0) = 0 and exp(0) = 1") {
        Tail z = Tail::zero("x", vs, 5);
        REQUIRE(tail_log1p(z).coeffs().empty());
        Tail e = tail_exp(z);
        REQUIRE(e.coeff(0) == MSeries::one(vs));
        for (int j = 1; j <= 5; ++j) REQUIRE(e.coeff(j).is_zero());
    }
    SECTION("nonzero constant term is a domain error") {
        Tail u = Tail::constant("x", vs, MSeries::one(vs), 5);
        REQUIRE_THROWS_AS(tail_log1p(u), std::domain_error);
        REQUIRE_THROWS_AS(tail_exp(u), std::domain_error);
    }
    SECTION("exp(log1p(u)) = 1 + u for random sparse u, M <= 8") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 15; ++trial) {
            int M = 4 + (trial % 5);
            Tail u = random_tail("x", vs, rng, M);
            Tail round = tail_exp(tail_log1p(u));
            Tail expect = u;
            expect.add(0, MSeries::one(vs));
            int bad = 0;
            REQUIRE(round.matches(expect, M, &bad));
            Tail round2 = tail_log1p(tail_exp(u) - Tail::constant("x", vs, MSeries::one(vs), M));
            REQUIRE(round2.matches(u, M, &bad));
        }
    }
}

TEST_CASE("LaurentPoly pow and coeff") {
    auto vs = VarSet::make({"t", "a", "b", "c"}, 8);
    SECTION("pow 0 and pow 1") {
        LaurentPoly p("z", vs);
        p.set_coeff(-1, MSeries::var(vs, "a"));
        p.set_coeff(2, MSeries::var(vs, "b"));
        LaurentPoly p0 = p.pow(0);
        REQUIRE(p0.coeff(0) == MSeries::one(vs));
        REQUIRE(p0.min_exp() == 0);
        REQUIRE(p0.max_exp() == 0);
        REQUIRE(p.pow(1) == p);
    }
    SECTION("[z^1] x(z)^2 = 2 a_{-1} a_0 for maximal degree 2") {
        // x(z) = a z + b + c z^{-1} standing for a_{-1}, a_0, a_1
        LaurentPoly x("z", vs);
        x.set_coeff(1, MSeries::var(vs, "a"));
        x.set_coeff(0, MSeries::var(vs, "b"));
        x.set_coeff(-1, MSeries::var(vs, "c"));
        LaurentPoly x2 = x.pow(2);
        REQUIRE(x2.coeff(1) == (MSeries::var(vs, "a") * MSeries::var(vs, "b")).scaled(2));
        REQUIRE(x2.coeff(2) == MSeries::var(vs, "a") * MSeries::var(vs, "a"));
        REQUIRE(x2.coeff(5).is_zero()); // outside support
    }
    SECTION("support bounds scale linearly under pow") {
        LaurentPoly x("z", vs);
        x.set_coeff(1, MSeries::var(vs, "a"));
        x.set_coeff(-2, MSeries::var(vs, "c"));
        LaurentPoly x3 = x.pow(3);
        REQUIRE(x3.max_exp() == 3);
        REQUIRE(x3.min_exp() == -6);
    }
}

TEST_CASE("lp_pow coefficients against brute-force convolution oracle") {
    auto vs = VarSet::make({"t", "a", "b"}, 8);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> expd(-2, 2);
    for (int trial = 0; trial < 12; ++trial) {
        LaurentPoly P("z", vs);
        for (int i = 0; i < 3; ++i) P.set_coeff(expd(rng), random_series(vs, rng, 2));
        for (unsigned p = 0; p <= 4; ++p) {
            LaurentPoly fast = P.pow(p);
            // oracle: repeated explicit convolution on coefficient maps
            std::map<int, MSeries> acc;
            acc[0] = MSeries::one(vs);
            for (unsigned rep = 0; rep < p; ++rep) {
                std::map<int, MSeries> nxt;
                for (const auto& [ea, ma] : acc)
                    for (const auto& [eb, mb] : P.coeffs()) {
                        auto [it, fresh] = nxt.try_emplace(ea + eb, ma * mb);
                        if (!fresh) it->second += ma * mb;
                    }
                acc = std::move(nxt);
            }
            for (int e = -12; e <= 12; ++e) {
                MSeries want = acc.count(e) ? acc[e] : MSeries::zero(vs);
                REQUIRE(fast.coeff(e) == want);
            }
        }
    }
}

TEST_CASE("Tail multiplication associativity within the validity window") {
    auto vs = VarSet::make({"t"}, 6);
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        Tail a = random_tail("x", vs, rng, 8);
        Tail b = random_tail("x", vs, rng, 8);
        Tail c = random_tail("x", vs, rng, 8);
        Tail l = (a * b) * c;
        Tail r = a * (b * c);
        int bad = 0;
        REQUIRE(l.matches(r, std::min(l.order(), r.order()), &bad));
    }
}

TEST_CASE("BiTail exp/log round trip and mixed derivative") {
    auto vs = VarSet::make({"t", "tw1"}, 4);
    std::mt19937 rng(555);
    BiTail u = BiTail::zero("x", "y", vs, 4, 4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) u.set(i, j, random_series(vs, rng, 2));
    BiTail round = bitail_log1p(bitail_exp(u) - BiTail::constant("x", "y", vs, MSeries::one(vs), 4, 4));
    std::pair<int, int> bad;
    REQUIRE(round.matches(u, 4, 4, &bad));

    // mixed derivative of x^{-i} y^{-j} is i*j x^{-i-1} y^{-j-1}
    BiTail m = BiTail::zero("x", "y", vs, 6, 6);
    m.set(2, 3, MSeries::one(vs));
    BiTail dm = m.mixed_deriv();
    REQUIRE(dm.coeff(3, 4) == MSeries::constant(vs, 6));
}

TEST_CASE("divided difference identity (x1^-n - x2^-n) = -(x1-x2) sum x1^-i x2^-j") {
    auto vs = VarSet::make({"t"}, 4);
    // check via the helper: DD(tau^n) must list all (i, n+1-i)
    for (int n = 1; n <= 6; ++n) {
        Tail f = Tail::monomial("x", vs, n, MSeries::one(vs), 8);
        BiTail dd = divided_difference(f, "x1", "x2");
        for (int i = 1; i <= n; ++i) REQUIRE(dd.coeff(i, n + 1 - i) == MSeries::one(vs));
        REQUIRE(dd.coeff(n + 1, 0).is_zero());
        // swap symmetry of the divided difference
        for (int i = 1; i <= n; ++i) REQUIRE(dd.coeff(i, n + 1 - i) == dd.coeff(n + 1 - i, i));
    }
}
