#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "mseries.hpp"

namespace hypermaps {

// Truncated series in a "small" variable tau, where tau is either the
// inverse of a physical variable (tau = 1/x, 1/y) or a direct counting
// variable (tau = s). Exponents are powers of tau: a small polynomial
// part in the physical variable appears as negative exponents.
//
// Bookkeeping invariants:
//   - true coefficients vanish for exponents < lo (hard support bound);
//   - stored coefficients are exact for all exponents in [lo, M];
//   - nothing is stored outside [lo, M].
class Tail {
public:
    Tail(std::string var, VarSetPtr vs, int lo, int M)
        : var_(std::move(var)), vs_(std::move(vs)), lo_(lo), M_(M) {}

    static Tail zero(const std::string& var, VarSetPtr vs, int M) {
        return Tail(var, std::move(vs), M + 1, M);
    }
    static Tail constant(const std::string& var, VarSetPtr vs, const MSeries& m, int M) {
        Tail t(var, vs, 0, M);
        t.set(0, m);
        return t;
    }
    // Single term c * tau^e.
    static Tail monomial(const std::string& var, VarSetPtr vs, int e, const MSeries& m, int M) {
        Tail t(var, vs, e, M);
        t.set(e, m);
        return t;
    }

    const std::string& var() const { return var_; }
    const VarSetPtr& varset() const { return vs_; }
    int lo() const { return lo_; }
    int order() const { return M_; }
    const std::map<int, MSeries>& coeffs() const { return c_; }

    MSeries coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? MSeries::zero(vs_) : it->second;
    }

    void set(int e, const MSeries& m) {
        if (e > M_) return;
        if (e < lo_) {
            if (m.is_zero()) return;
            lo_ = e; // caller extends the declared support downward
        }
        if (m.is_zero())
            c_.erase(e);
        else
            c_.insert_or_assign(e, m);
    }
    void add(int e, const MSeries& m) {
        if (e > M_) return;
        set(e, coeff(e) + m);
    }

    // Raise the support bound to the lowest stored exponent (sound: the
    // window [lo, stored-min) is exactly zero).
    Tail tightened() const {
        Tail r = *this;
        r.lo_ = r.c_.empty() ? r.M_ + 1 : r.c_.begin()->first;
        return r;
    }

    friend Tail operator+(const Tail& a, const Tail& b) {
        a.check(b);
        Tail r(a.var_, a.vs_, std::min(a.lo_, b.lo_), std::min(a.M_, b.M_));
        for (const auto& [e, m] : a.c_) r.add(e, m);
        for (const auto& [e, m] : b.c_) r.add(e, m);
        return r;
    }
    friend Tail operator-(const Tail& a, const Tail& b) { return a + b.scaled(Rat(-1)); }

    Tail scaled(const Rat& q) const {
        Tail r(var_, vs_, lo_, M_);
        for (const auto& [e, m] : c_) r.set(e, m.scaled(q));
        return r;
    }
    Tail scaled(const MSeries& s) const {
        Tail r(var_, vs_, lo_, M_);
        for (const auto& [e, m] : c_) r.set(e, m * s);
        return r;
    }

    friend Tail operator*(const Tail& a0, const Tail& b0) {
        a0.check(b0);
        Tail a = a0.tightened(), b = b0.tightened();
        int M = std::min(a.M_ + b.lo_, b.M_ + a.lo_);
        Tail r(a.var_, a.vs_, a.lo_ + b.lo_, M);
        for (const auto& [ea, ma] : a.c_)
            for (const auto& [eb, mb] : b.c_) {
                if (ea + eb > M) continue;
                r.add(ea + eb, ma * mb);
            }
        return r;
    }

    Tail pow(unsigned p) const {
        Tail r = constant(var_, vs_, MSeries::one(vs_), M_);
        for (unsigned i = 0; i < p; ++i) r = r * *this;
        return r;
    }

    // log(1+u) for u with zero constant term and no polynomial part.
    friend Tail tail_log1p(const Tail& u0) {
        Tail u = u0.tightened();
        if (u.lo_ < 1) throw std::domain_error("tail_log1p: nonzero constant term");
        Tail r = zero(u.var_, u.vs_, u.M_);
        Tail p = constant(u.var_, u.vs_, MSeries::one(u.vs_), u.M_);
        for (int k = 1; static_cast<long>(k) * u.lo_ <= u.M_; ++k) {
            p = p * u;
            Rat f = Rat(k % 2 ? 1 : -1, k);
            r = r + p.scaled(f);
        }
        return r;
    }

    // exp(u) - truncated - for u with zero constant term.
    friend Tail tail_exp(const Tail& u0) {
        Tail u = u0.tightened();
        if (u.lo_ < 1) throw std::domain_error("tail_exp: nonzero constant term");
        Tail r = constant(u.var_, u.vs_, MSeries::one(u.vs_), u.M_);
        Tail p = constant(u.var_, u.vs_, MSeries::one(u.vs_), u.M_);
        for (int k = 1; static_cast<long>(k) * u.lo_ <= u.M_; ++k) {
            p = p * u;
            r = r + p.scaled(Rat(Int(1), factorial(static_cast<unsigned>(k))));
        }
        return r;
    }

    // Multiplicative inverse of a tail with constant term exactly 1,
    // by geometric series.
    Tail unit_inverse() const {
        if (coeff(0) != MSeries::one(vs_))
            throw std::domain_error("unit_inverse: constant term must be 1");
        Tail u = *this;
        u.set(0, MSeries::zero(vs_));
        u = u.tightened();
        Tail r = constant(var_, vs_, MSeries::one(vs_), M_);
        Tail p = r;
        for (int k = 1; u.lo_ <= M_ && static_cast<long>(k) * u.lo_ <= M_; ++k) {
            p = p * u;
            r = r + p.scaled(Rat(k % 2 ? -1 : 1));
        }
        return r;
    }

    // d/d(phys) for tau = 1/phys: tau^e -> -e * tau^(e+1).
    Tail deriv_phys_inv() const {
        Tail r(var_, vs_, lo_ + 1, M_ + 1);
        for (const auto& [e, m] : c_) r.set(e + 1, m.scaled(Rat(-e)));
        return r;
    }

    bool matches(const Tail& o, int upto, int* bad_exp = nullptr) const {
        int hi = std::min({M_, o.M_, upto});
        for (int e = std::min(lo_, o.lo_); e <= hi; ++e) {
            if (coeff(e) != o.coeff(e)) {
                if (bad_exp) *bad_exp = e;
                return false;
            }
        }
        return true;
    }

private:
    void check(const Tail& o) const {
        if (var_ != o.var_) throw std::invalid_argument("Tail: variable mismatch");
        if (!vs_->same_as(*o.vs_)) throw std::invalid_argument("Tail: varset mismatch");
    }

    std::string var_;
    VarSetPtr vs_;
    int lo_;
    int M_;
    std::map<int, MSeries> c_;
};

} // namespace hypermaps
