#pragma once

#include <map>
#include <string>
#include <utility>

#include "mseries.hpp"

namespace hypermaps {

// Laurent polynomial in one auxiliary variable (z or u) with MSeries
// coefficients. Support is finite; zero coefficients are not stored.
class LaurentPoly {
public:
    LaurentPoly(std::string aux, VarSetPtr vs) : aux_(std::move(aux)), vs_(std::move(vs)) {}

    const std::string& aux() const { return aux_; }
    const VarSetPtr& varset() const { return vs_; }
    const std::map<int, MSeries>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    MSeries coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? MSeries::zero(vs_) : it->second;
    }

    void set_coeff(int e, MSeries m) {
        if (m.is_zero())
            c_.erase(e);
        else
            c_.insert_or_assign(e, std::move(m));
    }
    void add_coeff(int e, const MSeries& m) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!m.is_zero()) c_.emplace(e, m);
            return;
        }
        it->second += m;
        if (it->second.is_zero()) c_.erase(it);
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, m] : b.c_) r.add_coeff(e, m);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, m] : b.c_) r.add_coeff(e, -m);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.aux_, a.vs_);
        for (const auto& [ea, ma] : a.c_)
            for (const auto& [eb, mb] : b.c_) r.add_coeff(ea + eb, ma * mb);
        return r;
    }

    LaurentPoly pow(unsigned p) const {
        LaurentPoly r(aux_, vs_);
        r.set_coeff(0, MSeries::one(vs_));
        for (unsigned i = 0; i < p; ++i) r = r * *this;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

private:
    std::string aux_;
    VarSetPtr vs_;
    std::map<int, MSeries> c_;
};

} // namespace hypermaps
