#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "tail.hpp"

namespace hypermaps {

// Truncated series in two small variables tau1 = 1/x, tau2 = 1/y.
// Validity is tracked as a box [.., M1] x [.., M2] intersected with the
// diagonal band e1+e2 <= Mtot; support bounds lo1/lo2/lot are hard
// lower bounds on exponents (per variable and total).
class BiTail {
public:
    BiTail(std::string v1, std::string v2, VarSetPtr vs, int M1, int M2, int Mtot)
        : v1_(std::move(v1)), v2_(std::move(v2)), vs_(std::move(vs)),
          lo1_(M1 + 1), lo2_(M2 + 1), lot_(M1 + M2 + 2), M1_(M1), M2_(M2), Mtot_(Mtot) {}

    static BiTail zero(const std::string& v1, const std::string& v2, VarSetPtr vs, int M1, int M2) {
        return BiTail(v1, v2, std::move(vs), M1, M2, M1 + M2);
    }
    static BiTail constant(const std::string& v1, const std::string& v2, VarSetPtr vs,
                           const MSeries& m, int M1, int M2) {
        BiTail r = zero(v1, v2, std::move(vs), M1, M2);
        r.set(0, 0, m);
        return r;
    }
    // Separable product a(tau1) * b(tau2).
    static BiTail outer(const Tail& a, const Tail& b) {
        BiTail r(a.var(), b.var(), a.varset(), a.order(), b.order(), a.order() + b.order());
        for (const auto& [ea, ma] : a.coeffs())
            for (const auto& [eb, mb] : b.coeffs()) r.add(ea, eb, ma * mb);
        return r;
    }

    const VarSetPtr& varset() const { return vs_; }
    const std::string& var1() const { return v1_; }
    const std::string& var2() const { return v2_; }
    int order1() const { return M1_; }
    int order2() const { return M2_; }
    int order_total() const { return Mtot_; }
    const std::map<std::pair<int, int>, MSeries>& coeffs() const { return c_; }

    bool valid_at(int e1, int e2) const { return e1 <= M1_ && e2 <= M2_ && e1 + e2 <= Mtot_; }

    MSeries coeff(int e1, int e2) const {
        auto it = c_.find({e1, e2});
        return it == c_.end() ? MSeries::zero(vs_) : it->second;
    }

    void set(int e1, int e2, const MSeries& m) {
        if (!valid_at(e1, e2)) return;
        if (m.is_zero()) {
            c_.erase({e1, e2});
        } else {
            lo1_ = std::min(lo1_, e1);
            lo2_ = std::min(lo2_, e2);
            lot_ = std::min(lot_, e1 + e2);
            c_.insert_or_assign({e1, e2}, m);
        }
    }
    void add(int e1, int e2, const MSeries& m) {
        if (!valid_at(e1, e2)) return;
        set(e1, e2, coeff(e1, e2) + m);
    }

    BiTail tightened() const {
        BiTail r = *this;
        r.lo1_ = r.M1_ + 1;
        r.lo2_ = r.M2_ + 1;
        r.lot_ = r.M1_ + r.M2_ + 2;
        for (const auto& [e, m] : r.c_) {
            r.lo1_ = std::min(r.lo1_, e.first);
            r.lo2_ = std::min(r.lo2_, e.second);
            r.lot_ = std::min(r.lot_, e.first + e.second);
        }
        return r;
    }

    friend BiTail operator+(const BiTail& a, const BiTail& b) {
        a.check(b);
        BiTail r(a.v1_, a.v2_, a.vs_, std::min(a.M1_, b.M1_), std::min(a.M2_, b.M2_),
                 std::min(a.Mtot_, b.Mtot_));
        for (const auto& [e, m] : a.c_) r.add(e.first, e.second, m);
        for (const auto& [e, m] : b.c_) r.add(e.first, e.second, m);
        return r;
    }
    friend BiTail operator-(const BiTail& a, const BiTail& b) { return a + b.scaled(Rat(-1)); }

    BiTail scaled(const Rat& q) const {
        BiTail r = *this;
        if (q == 0) {
            r.c_.clear();
            return r;
        }
        for (auto& [e, m] : r.c_) m = m.scaled(q);
        return r;
    }
    BiTail scaled(const MSeries& s) const {
        BiTail r(v1_, v2_, vs_, M1_, M2_, Mtot_);
        for (const auto& [e, m] : c_) r.add(e.first, e.second, m * s);
        return r;
    }

    friend BiTail operator*(const BiTail& a0, const BiTail& b0) {
        a0.check(b0);
        BiTail a = a0.tightened(), b = b0.tightened();
        int M1 = std::min(a.M1_ + b.lo1_, b.M1_ + a.lo1_);
        int M2 = std::min(a.M2_ + b.lo2_, b.M2_ + a.lo2_);
        int Mt = std::min(a.Mtot_ + b.lot_, b.Mtot_ + a.lot_);
        BiTail r(a.v1_, a.v2_, a.vs_, M1, M2, Mt);
        for (const auto& [ea, ma] : a.c_)
            for (const auto& [eb, mb] : b.c_) {
                int e1 = ea.first + eb.first, e2 = ea.second + eb.second;
                if (!r.valid_at(e1, e2)) continue;
                r.add(e1, e2, ma * mb);
            }
        return r;
    }

    friend BiTail bitail_log1p(const BiTail& u0) {
        BiTail u = u0.tightened();
        if (u.lot_ < 1 || !u.coeff(0, 0).is_zero())
            throw std::domain_error("bitail_log1p: nonzero constant term");
        BiTail r(u.v1_, u.v2_, u.vs_, u.M1_, u.M2_, u.Mtot_);
        BiTail p = constant(u.v1_, u.v2_, u.vs_, MSeries::one(u.vs_), u.M1_, u.M2_);
        p.Mtot_ = u.Mtot_;
        for (int k = 1; static_cast<long>(k) * std::max(u.lot_, 1) <= u.M1_ + u.M2_; ++k) {
            p = p * u;
            r = r + p.scaled(Rat(k % 2 ? 1 : -1, k));
        }
        return r;
    }

    friend BiTail bitail_exp(const BiTail& u0) {
        BiTail u = u0.tightened();
        if (u.lot_ < 1 || !u.coeff(0, 0).is_zero())
            throw std::domain_error("bitail_exp: nonzero constant term");
        BiTail r = constant(u.v1_, u.v2_, u.vs_, MSeries::one(u.vs_), u.M1_, u.M2_);
        r.Mtot_ = u.Mtot_;
        BiTail p = r;
        for (int k = 1; static_cast<long>(k) * std::max(u.lot_, 1) <= u.M1_ + u.M2_; ++k) {
            p = p * u;
            r = r + p.scaled(Rat(Int(1), factorial(static_cast<unsigned>(k))));
        }
        return r;
    }

    // d^2/dx dy with tau1=1/x, tau2=1/y: coefficient at (i,j) moves to
    // (i+1, j+1) scaled by i*j.
    BiTail mixed_deriv() const {
        BiTail r(v1_, v2_, vs_, M1_ + 1, M2_ + 1, Mtot_ + 2);
        for (const auto& [e, m] : c_)
            r.set(e.first + 1, e.second + 1, m.scaled(Rat(e.first) * Rat(e.second)));
        return r;
    }

    // Inverse of the diagonal operator x d/dx (resp. y d/dy), which maps
    // tau^e to -e tau^e. Requires all stored exponents nonzero in that slot.
    BiTail inv_xlogderiv(bool first_var) const {
        BiTail r(v1_, v2_, vs_, M1_, M2_, Mtot_);
        for (const auto& [e, m] : c_) {
            int k = first_var ? e.first : e.second;
            if (k == 0) throw std::domain_error("inv_xlogderiv: exponent-0 term present");
            r.set(e.first, e.second, m.scaled(Rat(-1, k)));
        }
        return r;
    }

    bool matches(const BiTail& o, int hi1, int hi2, std::pair<int, int>* bad = nullptr) const {
        int m1 = std::min({M1_, o.M1_, hi1});
        int m2 = std::min({M2_, o.M2_, hi2});
        int mt = std::min(Mtot_, o.Mtot_);
        for (int e1 = std::min(lo1_, o.lo1_); e1 <= m1; ++e1)
            for (int e2 = std::min(lo2_, o.lo2_); e2 <= m2; ++e2) {
                if (e1 + e2 > mt) continue;
                if (coeff(e1, e2) != o.coeff(e1, e2)) {
                    if (bad) *bad = {e1, e2};
                    return false;
                }
            }
        return true;
    }

private:
    void check(const BiTail& o) const {
        if (v1_ != o.v1_ || v2_ != o.v2_) throw std::invalid_argument("BiTail: variable mismatch");
        if (!vs_->same_as(*o.vs_)) throw std::invalid_argument("BiTail: varset mismatch");
    }

    std::string v1_, v2_;
    VarSetPtr vs_;
    int lo1_, lo2_, lot_;
    int M1_, M2_, Mtot_;
    std::map<std::pair<int, int>, MSeries> c_;
};

inline BiTail bitail_shift(const BiTail& t, int d1, int d2) {
    BiTail r(t.var1(), t.var2(), t.varset(), t.order1() + d1, t.order2() + d2,
             t.order_total() + d1 + d2);
    for (const auto& [e, m] : t.coeffs()) r.set(e.first + d1, e.second + d2, m);
    return r;
}

// Divided-difference device: for a pure tail f = sum c_n tau^n (n >= 1),
// returns sum_n c_n sum_{i+j=n+1, i,j>=1} tau1^i tau2^j, which equals
// (f(x2)-f(x1))/(x1-x2) expanded in inverse powers.
inline BiTail divided_difference(const Tail& f, const std::string& v1, const std::string& v2) {
    if (f.tightened().lo() < 1) throw std::domain_error("divided_difference: needs a pure tail");
    BiTail r(v1, v2, f.varset(), f.order(), f.order(), f.order() + 1);
    for (const auto& [n, m] : f.coeffs())
        for (int i = 1; i <= n; ++i) r.set(i, n + 1 - i, m);
    return r;
}

} // namespace hypermaps
