#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hypermaps/json_io.hpp>

using namespace hypermaps;

TEST_CASE("series JSON round trip is lossless") {
    auto vs = VarSet::make({"t", "tw1", "tb1"}, 6);
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> expd(0, 2), num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 25; ++trial) {
        MSeries s = MSeries::zero(vs);
        for (int i = 0; i < 6; ++i) {
            ExpVec e;
            for (unsigned v = 0; v < 3; ++v) e.set(v, static_cast<unsigned>(expd(rng)));
            s += MSeries::monomial(vs, e, Rat(num(rng), den(rng)));
        }
        Json j = series_to_json(s);
        REQUIRE(series_from_json(j, vs) == s);
    }
}

TEST_CASE("terms are emitted in lexicographic exponent order") {
    auto vs = VarSet::make({"t", "tw1"}, 5);
    MSeries s = MSeries::var(vs, "tw1") + MSeries::var(vs, "t") +
                MSeries::var(vs, "t") * MSeries::var(vs, "tw1") + MSeries::one(vs);
    Json j = series_to_json(s);
    std::vector<std::vector<unsigned>> seen;
    for (const auto& term : j) seen.push_back(term["exponents"].get<std::vector<unsigned>>());
    std::vector<std::vector<unsigned>> expect = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    REQUIRE(seen == expect);
}

TEST_CASE("solution JSON is deterministic") {
    SliceSolution sol = solve_slice_system(DegreeBounds(2, 2), 4);
    std::string s1 = solution_to_json(sol).dump(2);
    SliceSolution sol2 = solve_slice_system(DegreeBounds(2, 2), 4);
    std::string s2 = solution_to_json(sol2).dump(2);
    REQUIRE(s1 == s2);
    REQUIRE_FALSE(s1.empty());
}

TEST_CASE("exact rationals survive serialization in lowest terms") {
    auto vs = VarSet::make({"t"}, 3);
    ExpVec e;
    e.set(0, 2);
    MSeries s = MSeries::monomial(vs, e, Rat(Int("123456789012345678901234567891"), Int(7)));
    Json j = series_to_json(s);
    REQUIRE(j[0]["numerator"] == "123456789012345678901234567891");
    REQUIRE(j[0]["denominator"] == "7");
    REQUIRE(series_from_json(j, vs) == s);
    // a reducible input is canonicalized before emission
    MSeries r = MSeries::monomial(vs, e, Rat(Int(14), Int(21)));
    Json jr = series_to_json(r);
    REQUIRE(jr[0]["numerator"] == "2");
    REQUIRE(jr[0]["denominator"] == "3");
}

TEST_CASE("CSV flattening has one row per (spec, monomial)") {
    SliceSolution sol = solve_slice_system(DegreeBounds(1, 1), 3);
    Json rows = Json::array();
    rows.push_back(gf_row("F_w[1]", "compact", disk(sol, Color::white, 1, DiskRoute::compact)));
    std::string csv = gf_table_to_csv(sol.vars->names(), rows);
    std::size_t lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    REQUIRE(lines == 1 + disk(sol, Color::white, 1, DiskRoute::compact).term_count());
    REQUIRE(csv.find("t*tb1") != std::string::npos);
}
