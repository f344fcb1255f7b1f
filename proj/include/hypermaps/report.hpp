#pragma once

#include <string>
#include <vector>

namespace hypermaps {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail; // first mismatch location, clearing exponents, notes
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back({name, pass, detail});
    }
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

} // namespace hypermaps
