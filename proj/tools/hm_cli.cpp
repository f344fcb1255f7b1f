// Command-line driver: solve the slice system, tabulate generating
// functions, and run the verification suites. All output is canonical
// JSON (or flattened CSV) so repeated runs are byte-identical.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <hypermaps/appendix_a.hpp>
#include <hypermaps/json_io.hpp>
#include <hypermaps/verify.hpp>

using namespace hypermaps;

namespace {

struct Common {
    unsigned dw = 2, db = 2, order = 4;
    int tail = 6;
    std::string out, format = "json";
};

int write_out(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << c.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string report_csv(const std::vector<CheckReport>& reps) {
    std::string s = "suite,name,pass,detail\n";
    for (const auto& rep : reps)
        for (const auto& i : rep.items) {
            std::string detail = i.detail;
            for (auto& ch : detail)
                if (ch == ',') ch = ';';
            s += rep.suite + "," + i.name + "," + (i.pass ? "1" : "0") + "," + detail + "\n";
        }
    return s;
}

int emit_reports(const Common& c, const std::vector<CheckReport>& reps) {
    bool ok = true;
    for (const auto& r : reps) ok = ok && r.all_pass();
    std::string text;
    if (c.format == "csv") {
        text = report_csv(reps);
    } else {
        Json j = Json::array();
        for (const auto& r : reps) j.push_back(report_to_json(r));
        text = j.dump(2) + "\n";
    }
    int rc = write_out(c, text);
    if (rc != 0) return rc;
    return ok ? 0 : 1;
}

int emit_table(const Common& c, const VarSetPtr& vs, const Json& rows) {
    Json j;
    j["variables"] = vs->names();
    j["rows"] = rows;
    std::string text = c.format == "csv" ? gf_table_to_csv(vs->names(), rows) : j.dump(2) + "\n";
    return write_out(c, text);
}

Color parse_color(const std::string& s) {
    if (s == "w" || s == "white") return Color::white;
    if (s == "b" || s == "black") return Color::black;
    throw CLI::ValidationError("--color must be w or b");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hm: exact enumeration of face-bicolored planar maps with bounded face degrees"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value configuration file; flags override");

    Common c;
    app.add_option("--dw", c.dw, "maximal white face degree")->capture_default_str();
    app.add_option("--db", c.db, "maximal black face degree")->capture_default_str();
    app.add_option("--order", c.order, "series truncation order (total degree)")->capture_default_str();
    app.add_option("--tail", c.tail, "inverse-variable tail order")->capture_default_str();
    app.add_option("--out", c.out, "output path (default stdout)");
    app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* solve = app.add_subcommand("solve", "solve the slice system and emit (a_k), (b_k), x, y");
    solve->fallthrough();

    auto* disks = app.add_subcommand("disks", "monochromatic disk generating functions F_p");
    disks->fallthrough();
    std::string color = "w", route = "compact";
    unsigned p_max = 3, q_max = 3;
    disks->add_option("--color", color, "boundary color (w|b)");
    disks->add_option("--p-max", p_max, "maximal perimeter")->capture_default_str();
    disks->add_option("--route", route, "compact|expanded|floored|all")->capture_default_str();

    auto* cyls = app.add_subcommand("cylinders", "cylinder generating functions F_{p,q}");
    cyls->fallthrough();
    std::string kind = "ww";
    cyls->add_option("--kind", kind, "ww|bb|wb|ow|bw")->capture_default_str();
    cyls->add_option("--p-max", p_max, "maximal outer perimeter")->capture_default_str();
    cyls->add_option("--q-max", q_max, "maximal central perimeter")->capture_default_str();

    auto* dob = app.add_subcommand("dobrushin", "Dobrushin-boundary generating functions");
    dob->fallthrough();
    dob->add_option("--p-max", p_max)->capture_default_str();
    dob->add_option("--q-max", q_max)->capture_default_str();

    auto* walks = app.add_subcommand("walks", "downward-skip-free walk suites");
    walks->fallthrough();
    auto* vaa = walks->add_subcommand("verify-appendix-a", "excursion/arch/factorization identities");
    vaa->fallthrough();
    unsigned wd = 2, s_order = 6;
    int u_range = 6;
    vaa->add_option("--d", wd, "maximal step increment")->capture_default_str();
    vaa->add_option("--s-order", s_order, "step-count truncation")->capture_default_str();
    vaa->add_option("--u-range", u_range, "highest checked exponent of the spatial variable")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->fallthrough();
    std::string suite = "all";
    int emax = 4;
    verify->add_option("--suite", suite, "slices|gf|grand|oracle|all")
        ->check(CLI::IsMember({"slices", "gf", "grand", "oracle", "all"}));
    verify->add_option("--emax", emax, "oracle edge budget")->capture_default_str();

    auto* orc = app.add_subcommand("oracle", "brute-force weighted count for one boundary spec");
    orc->fallthrough();
    std::string spec_json;
    orc->add_option("--spec", spec_json, "boundary spec as JSON")->required();
    orc->add_option("--emax", emax, "edge budget")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        DegreeBounds bounds(c.dw, c.db);

        if (*solve) {
            SliceSolution sol = solve_slice_system(bounds, c.order);
            return write_out(c, solution_to_json(sol).dump(2) + "\n");
        }

        if (*disks) {
            Color col = parse_color(color);
            SliceSolution sol = solve_slice_system(bounds, c.order);
            Json rows = Json::array();
            std::vector<std::pair<std::string, DiskRoute>> routes;
            if (route == "all")
                routes = {{"compact", DiskRoute::compact},
                          {"expanded", DiskRoute::expanded},
                          {"floored", DiskRoute::floored}};
            else if (route == "compact")
                routes = {{"compact", DiskRoute::compact}};
            else if (route == "expanded")
                routes = {{"expanded", DiskRoute::expanded}};
            else if (route == "floored")
                routes = {{"floored", DiskRoute::floored}};
            else
                throw CLI::ValidationError("--route must be compact|expanded|floored|all");
            for (unsigned p = 0; p <= p_max; ++p)
                for (const auto& [rname, r] : routes)
                    rows.push_back(gf_row((col == Color::white ? "F_w[" : "F_b[") + std::to_string(p) + "]",
                                          rname, disk(sol, col, p, r)));
            return emit_table(c, sol.vars, rows);
        }

        if (*cyls) {
            SliceSolution sol = solve_slice_system(bounds, c.order);
            CylKind k;
            if (kind == "ww") k = CylKind::ww;
            else if (kind == "bb") k = CylKind::bb;
            else if (kind == "wb") k = CylKind::wb;
            else if (kind == "ow") k = CylKind::one_way;
            else if (kind == "bw") k = CylKind::two_way_bw;
            else throw CLI::ValidationError("--kind must be ww|bb|wb|ow|bw");
            Json rows = Json::array();
            for (unsigned p = 1; p <= p_max; ++p)
                for (unsigned q = 1; q <= q_max; ++q)
                    rows.push_back(gf_row("F_" + kind + "[" + std::to_string(p) + "," + std::to_string(q) + "]",
                                          "h-sum", cylinder(sol, k, p, q)));
            return emit_table(c, sol.vars, rows);
        }

        if (*dob) {
            SliceSolution sol = solve_slice_system(bounds, c.order);
            DobrushinResult table = dobrushin_table(sol, p_max, q_max);
            Json rows = Json::array();
            for (unsigned p = 0; p <= p_max; ++p)
                for (unsigned q = 0; q <= q_max; ++q)
                    rows.push_back(gf_row("F_dob[" + std::to_string(p) + "," + std::to_string(q) + "]",
                                          "exp+blob", table.F(p, q)));
            return emit_table(c, sol.vars, rows);
        }

        if (*vaa) {
            CheckReport rep = appendixA_suite(wd, s_order, u_range);
            return emit_reports(c, {rep});
        }
        if (*walks) {
            std::cerr << "walks: missing subcommand (try verify-appendix-a)\n";
            return 2;
        }

        if (*verify) {
            std::vector<CheckReport> reps;
            if (suite == "slices" || suite == "all") reps.push_back(verify_slices(bounds, c.order));
            if (suite == "gf" || suite == "all") reps.push_back(verify_gf(bounds, c.order));
            if (suite == "grand" || suite == "all") reps.push_back(verify_grand(bounds, c.order, c.tail));
            if (suite == "oracle" || suite == "all") {
                unsigned n = std::max(c.order, static_cast<unsigned>(emax) + 1);
                reps.push_back(verify_oracle(bounds, n, emax));
            }
            return emit_reports(c, reps);
        }

        if (*orc) {
            Json js = Json::parse(spec_json);
            oracle::BoundarySpec s{};
            std::string k = js.at("kind").get<std::string>();
            if (k == "disk") s.kind = oracle::BKind::disk;
            else if (k == "pointed_disk") s.kind = oracle::BKind::pointed_disk;
            else if (k == "trumpet") s.kind = oracle::BKind::trumpet;
            else if (k == "cornet") s.kind = oracle::BKind::cornet;
            else if (k == "cylinder") s.kind = oracle::BKind::cylinder;
            else if (k == "one_way_cylinder") s.kind = oracle::BKind::one_way_cylinder;
            else if (k == "dobrushin") s.kind = oracle::BKind::dobrushin;
            else throw CLI::ValidationError("unknown spec kind " + k);
            if (js.contains("color")) s.c1 = parse_color(js["color"].get<std::string>());
            if (js.contains("color2")) s.c2 = parse_color(js["color2"].get<std::string>());
            if (js.contains("p")) s.p = js["p"].get<unsigned>();
            if (js.contains("q")) s.q = js["q"].get<unsigned>();
            if (js.contains("girth")) s.girth = js["girth"].get<unsigned>();
            if (js.contains("ccw_girth")) s.ccw_girth_filter = js["ccw_girth"].get<unsigned>();
            unsigned n = std::max(c.order, static_cast<unsigned>(emax) + 1);
            MSeries count = oracle::oracle_count(s, emax, bounds, n);
            Json rows = Json::array();
            rows.push_back(gf_row(s.str(), "oracle(E<=" + std::to_string(emax) + ")", count));
            return emit_table(c, count.varset(), rows);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
