#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "mseries.hpp"

namespace hypermaps {

struct DegreeBounds {
    unsigned dw; // maximal white face degree
    unsigned db; // maximal black face degree
    std::vector<unsigned> white_degrees; // active white degrees (weights not listed are zero)
    std::vector<unsigned> black_degrees;

    DegreeBounds(unsigned dw_, unsigned db_) : dw(dw_), db(db_) {
        if (dw < 1 || db < 1) throw std::invalid_argument("DegreeBounds: degrees must be >= 1");
        white_degrees = degree_range(dw);
        black_degrees = degree_range(db);
    }
    DegreeBounds(std::vector<unsigned> wd, std::vector<unsigned> bd)
        : white_degrees(std::move(wd)), black_degrees(std::move(bd)) {
        if (white_degrees.empty() || black_degrees.empty())
            throw std::invalid_argument("DegreeBounds: need at least one active degree per color");
        dw = *std::max_element(white_degrees.begin(), white_degrees.end());
        db = *std::max_element(black_degrees.begin(), black_degrees.end());
    }
};

// Elementary-slice generating functions for bounded face degrees:
// a[k], k = -1..db-1 and b[k], k = -1..dw-1, with b[-1] = 1, plus
// the Laurent polynomials x(z) = sum a_k z^-k and
// y(z) = z^-1 + sum_{k>=0} b_k z^k.
struct SliceSolution {
    DegreeBounds bounds;
    VarSetPtr vars;
    unsigned order;
    std::vector<MSeries> a; // index i <-> k = i-1
    std::vector<MSeries> b;
    LaurentPoly x;
    LaurentPoly y;

    const MSeries& ak(int k) const { return a.at(static_cast<std::size_t>(k + 1)); }
    const MSeries& bk(int k) const { return b.at(static_cast<std::size_t>(k + 1)); }

    MSeries tw(unsigned d) const {
        std::string n = "tw" + std::to_string(d);
        return vars->has(n) ? MSeries::var(vars, n) : MSeries::zero(vars);
    }
    MSeries tb(unsigned d) const {
        std::string n = "tb" + std::to_string(d);
        return vars->has(n) ? MSeries::var(vars, n) : MSeries::zero(vars);
    }
    MSeries t() const { return MSeries::var(vars, "t"); }
};

namespace detail {

inline LaurentPoly assemble_x(const std::vector<MSeries>& a, const VarSetPtr& vs) {
    LaurentPoly x("z", vs);
    for (std::size_t i = 0; i < a.size(); ++i) x.set_coeff(-(static_cast<int>(i) - 1), a[i]);
    return x;
}
inline LaurentPoly assemble_y(const std::vector<MSeries>& b, const VarSetPtr& vs) {
    LaurentPoly y("z", vs);
    for (std::size_t i = 0; i < b.size(); ++i) y.set_coeff(static_cast<int>(i) - 1, b[i]);
    return y;
}

} // namespace detail

// Solve the elementary-slice system by Jacobi fixed-point iteration:
//   b_k = sum_d tw_d [z^k] x(z)^{d-1}        (k = 0..dw-1, b_-1 = 1)
//   a_k = t delta_{k,-1} + sum_d tb_d [z^-k] y(z)^{d-1}   (k = -1..db-1)
// Every right-hand side carries a weight variable, so each pass settles
// one more total degree; N passes reach the fixed point, with early exit.
inline SliceSolution solve_slice_system(const DegreeBounds& bounds, unsigned order) {
    VarSetPtr vs = hypermap_vars(bounds.white_degrees, bounds.black_degrees, order);
    std::vector<MSeries> a(bounds.db + 1, MSeries::zero(vs));
    std::vector<MSeries> b(bounds.dw + 1, MSeries::zero(vs));
    b[0] = MSeries::one(vs); // b_{-1} = 1

    MSeries t = MSeries::var(vs, "t");
    for (unsigned pass = 0; pass < order; ++pass) {
        LaurentPoly x = detail::assemble_x(a, vs);
        LaurentPoly y = detail::assemble_y(b, vs);

        // Powers x^{d-1}, y^{d-1} for all active d, computed incrementally.
        unsigned dmaxw = bounds.dw, dmaxb = bounds.db;
        std::vector<LaurentPoly> xp, yp;
        xp.reserve(dmaxw);
        yp.reserve(dmaxb);
        LaurentPoly acc("z", vs);
        acc.set_coeff(0, MSeries::one(vs));
        for (unsigned e = 0; e + 1 <= dmaxw; ++e) {
            xp.push_back(acc);
            acc = acc * x;
        }
        acc = LaurentPoly("z", vs);
        acc.set_coeff(0, MSeries::one(vs));
        for (unsigned e = 0; e + 1 <= dmaxb; ++e) {
            yp.push_back(acc);
            acc = acc * y;
        }

        std::vector<MSeries> na(a.size(), MSeries::zero(vs));
        std::vector<MSeries> nb(b.size(), MSeries::zero(vs));
        nb[0] = MSeries::one(vs); // b_{-1} stays 1
        for (int k = -1; k < static_cast<int>(bounds.db); ++k) {
            MSeries s = (k == -1) ? t : MSeries::zero(vs);
            for (unsigned d : bounds.black_degrees)
                s += MSeries::var(vs, "tb" + std::to_string(d)) * yp[d - 1].coeff(-k);
            na[k + 1] = s;
        }
        for (int k = 0; k < static_cast<int>(bounds.dw); ++k) {
            MSeries s = MSeries::zero(vs);
            for (unsigned d : bounds.white_degrees)
                s += MSeries::var(vs, "tw" + std::to_string(d)) * xp[d - 1].coeff(k);
            nb[k + 1] = s;
        }

        bool fixed = (na == a && nb == b);
        a = std::move(na);
        b = std::move(nb);
        if (fixed) break;
    }

    return SliceSolution{bounds, vs, order, a, b, detail::assemble_x(a, vs), detail::assemble_y(b, vs)};
}

// Back-substitution: does the solution satisfy the defining system exactly
// (up to truncation)?
inline bool check_system(const SliceSolution& sol) {
    const VarSetPtr& vs = sol.vars;
    for (int k = -1; k < static_cast<int>(sol.bounds.db); ++k) {
        MSeries rhs = (k == -1) ? sol.t() : MSeries::zero(vs);
        for (unsigned d : sol.bounds.black_degrees) rhs += sol.tb(d) * sol.y.pow(d - 1).coeff(-k);
        if (sol.ak(k) != rhs) return false;
    }
    for (int k = 0; k < static_cast<int>(sol.bounds.dw); ++k) {
        MSeries rhs = MSeries::zero(vs);
        for (unsigned d : sol.bounds.white_degrees) rhs += sol.tw(d) * sol.x.pow(d - 1).coeff(k);
        if (sol.bk(k) != rhs) return false;
    }
    return sol.bk(-1) == MSeries::one(vs);
}

// Denominator-free form of the alternative decomposition:
// a_{-1} * (1 - sum_d tw_d [z^{-1}] x(z)^{d-1}) must equal t.
inline bool check_alternative(const SliceSolution& sol) {
    MSeries s = MSeries::one(sol.vars);
    for (unsigned d : sol.bounds.white_degrees)
        s -= MSeries::var(sol.vars, "tw" + std::to_string(d)) * sol.x.pow(d - 1).coeff(-1);
    return sol.ak(-1) * s == sol.t();
}

// sum_k k a_k b_k, summed over the common index range.
inline MSeries sum_k_ak_bk(const SliceSolution& sol) {
    MSeries s = MSeries::zero(sol.vars);
    int kmax = static_cast<int>(std::min(sol.bounds.dw, sol.bounds.db)) - 1;
    for (int k = -1; k <= kmax; ++k) s += (sol.ak(k) * sol.bk(k)).scaled(Rat(k));
    return s;
}

} // namespace hypermaps
