#pragma once

#include <string>

#include <json.hpp>

#include "gf.hpp"
#include "mseries.hpp"
#include "report.hpp"
#include "slices.hpp"

namespace hypermaps {

using Json = nlohmann::ordered_json;

// Canonical form: one object per term, sorted lexicographically by
// exponent vector (the storage order), exact decimal strings.
inline Json series_to_json(const MSeries& s) {
    Json arr = Json::array();
    unsigned nv = s.varset()->size();
    for (const auto& [e, c] : s.terms()) {
        Json term;
        Json exps = Json::array();
        for (unsigned i = 0; i < nv; ++i) exps.push_back(e.get(i));
        term["exponents"] = std::move(exps);
        term["numerator"] = numerator(c).str();
        term["denominator"] = denominator(c).str();
        arr.push_back(std::move(term));
    }
    return arr;
}

inline MSeries series_from_json(const Json& arr, const VarSetPtr& vs) {
    MSeries s = MSeries::zero(vs);
    for (const auto& term : arr) {
        ExpVec e;
        const auto& exps = term.at("exponents");
        if (exps.size() != vs->size()) throw std::invalid_argument("series_from_json: arity mismatch");
        for (unsigned i = 0; i < vs->size(); ++i) e.set(i, exps.at(i).get<unsigned>());
        Rat c(Int(term.at("numerator").get<std::string>()), Int(term.at("denominator").get<std::string>()));
        s += MSeries::monomial(vs, e, c);
    }
    return s;
}

inline Json varset_to_json(const VarSetPtr& vs) {
    Json j;
    j["names"] = vs->names();
    j["order"] = vs->order();
    return j;
}

inline Json solution_to_json(const SliceSolution& sol) {
    Json j;
    j["bounds"]["dw"] = sol.bounds.dw;
    j["bounds"]["db"] = sol.bounds.db;
    j["bounds"]["white_degrees"] = sol.bounds.white_degrees;
    j["bounds"]["black_degrees"] = sol.bounds.black_degrees;
    j["varset"] = varset_to_json(sol.vars);
    Json a, b;
    for (int k = -1; k < static_cast<int>(sol.bounds.db); ++k)
        a[std::to_string(k)] = series_to_json(sol.ak(k));
    for (int k = -1; k < static_cast<int>(sol.bounds.dw); ++k)
        b[std::to_string(k)] = series_to_json(sol.bk(k));
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    Json x, y;
    for (const auto& [e, m] : sol.x.coeffs()) x[std::to_string(e)] = series_to_json(m);
    for (const auto& [e, m] : sol.y.coeffs()) y[std::to_string(e)] = series_to_json(m);
    j["x"] = std::move(x);
    j["y"] = std::move(y);
    return j;
}

inline Json report_to_json(const CheckReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    Json items = Json::array();
    for (const auto& item : rep.items) {
        Json it;
        it["name"] = item.name;
        it["pass"] = item.pass;
        it["detail"] = item.detail;
        items.push_back(std::move(it));
    }
    j["items"] = std::move(items);
    j["all_pass"] = rep.all_pass();
    return j;
}

// One table row per generating function.
inline Json gf_row(const std::string& spec, const std::string& route, const MSeries& value) {
    Json j;
    j["spec"] = spec;
    j["route"] = route;
    j["value"] = series_to_json(value);
    return j;
}

// CSV flattening: one line per (spec, monomial).
inline std::string gf_table_to_csv(const std::vector<std::string>& names, const Json& rows) {
    std::string out = "spec,route,monomial,numerator,denominator\n";
    for (const auto& row : rows) {
        for (const auto& term : row.at("value")) {
            out += row.at("spec").get<std::string>() + "," + row.at("route").get<std::string>() + ",";
            std::string mono;
            const auto& exps = term.at("exponents");
            for (std::size_t i = 0; i < exps.size() && i < names.size(); ++i) {
                unsigned x = exps.at(i).get<unsigned>();
                if (x == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (x > 1) mono += "^" + std::to_string(x);
            }
            out += (mono.empty() ? "1" : mono) + "," + term.at("numerator").get<std::string>() + "," +
                   term.at("denominator").get<std::string>() + "\n";
        }
    }
    return out;
}

} // namespace hypermaps
