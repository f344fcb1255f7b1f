#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "varset.hpp"

namespace hypermaps {

// Truncated multivariate formal power series over exact rationals.
// Sparse, keyed by exponent vector; no zero coefficients are stored and
// every stored monomial has total degree <= varset order. All operations
// are pure and truncate eagerly.
class MSeries {
public:
    MSeries() = default;
    explicit MSeries(VarSetPtr vs) : vs_(std::move(vs)) {}

    static MSeries zero(VarSetPtr vs) { return MSeries(std::move(vs)); }
    static MSeries constant(VarSetPtr vs, const Rat& c) {
        MSeries r(std::move(vs));
        if (c != 0) r.terms_[ExpVec{}] = c;
        return r;
    }
    static MSeries one(VarSetPtr vs) { return constant(std::move(vs), 1); }
    static MSeries var(VarSetPtr vs, const std::string& name) {
        MSeries r(vs);
        if (vs->order() >= 1) {
            ExpVec e;
            e.set(vs->index(name), 1);
            r.terms_[e] = 1;
        }
        return r;
    }
    static MSeries monomial(VarSetPtr vs, const ExpVec& e, const Rat& c) {
        MSeries r(vs);
        if (c != 0 && e.total_degree(vs->size()) <= vs->order()) r.terms_[e] = c;
        return r;
    }

    const VarSetPtr& varset() const { return vs_; }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(ExpVec{}); }

    MSeries& operator+=(const MSeries& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MSeries& operator-=(const MSeries& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
    friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
    MSeries operator-() const {
        MSeries r(vs_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend MSeries operator*(const MSeries& a, const MSeries& b) {
        a.check_same(b);
        MSeries r(a.vs_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        const unsigned N = a.vs_->order();
        const unsigned nv = a.vs_->size();
        std::vector<std::pair<ExpVec, const Rat*>> bv;
        std::vector<unsigned> bdeg;
        bv.reserve(b.terms_.size());
        for (const auto& [e, c] : b.terms_) {
            bv.emplace_back(e, &c);
            bdeg.push_back(e.total_degree(nv));
        }
        for (const auto& [ea, ca] : a.terms_) {
            unsigned da = ea.total_degree(nv);
            if (da > N) continue;
            for (std::size_t i = 0; i < bv.size(); ++i) {
                if (da + bdeg[i] > N) continue;
                r.add_term(ea + bv[i].first, ca * (*bv[i].second));
            }
        }
        return r;
    }
    MSeries& operator*=(const MSeries& o) { return *this = *this * o; }

    MSeries scaled(const Rat& c) const {
        MSeries r(vs_);
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }
    friend MSeries operator*(const MSeries& a, const Rat& c) { return a.scaled(c); }
    friend MSeries operator*(const Rat& c, const MSeries& a) { return a.scaled(c); }

    MSeries pow(unsigned p) const {
        MSeries r = one(vs_);
        for (unsigned i = 0; i < p; ++i) r *= *this;
        return r;
    }

    // Formal partial derivative; exact up to total degree order-1.
    MSeries derivative(const std::string& name) const {
        unsigned i = vs_->index(name);
        MSeries r(vs_);
        for (const auto& [e, c] : terms_) {
            unsigned ei = e.get(i);
            if (ei == 0) continue;
            ExpVec d = e;
            d.set(i, ei - 1);
            r.add_term(d, c * ei);
        }
        return r;
    }

    // Keep only monomials of total degree <= n (solving then truncating
    // must agree with solving at the lower order).
    MSeries truncated(unsigned n) const {
        MSeries r(vs_);
        unsigned nv = vs_->size();
        for (const auto& [e, c] : terms_)
            if (e.total_degree(nv) <= n) r.terms_[e] = c;
        return r;
    }

    unsigned min_degree() const {
        unsigned m = vs_->order() + 1;
        unsigned nv = vs_->size();
        for (const auto& [e, c] : terms_) m = std::min(m, e.total_degree(nv));
        return m; // order+1 if zero
    }

    bool operator==(const MSeries& o) const { return terms_ == o.terms_; }
    bool operator!=(const MSeries& o) const { return !(*this == o); }

    // First monomial (lexicographic) where two series differ; used by the
    // verification reports.
    static bool first_mismatch(const MSeries& a, const MSeries& b, ExpVec& where) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                where = ia->first;
                return true;
            }
            if (ia == a.terms_.end() || ib->first < ia->first) {
                where = ib->first;
                return true;
            }
            if (ia->second != ib->second) {
                where = ia->first;
                return true;
            }
            ++ia, ++ib;
        }
        return false;
    }

    std::string monomial_str(const ExpVec& e) const {
        std::string s;
        for (unsigned i = 0; i < vs_->size(); ++i) {
            unsigned d = e.get(i);
            if (!d) continue;
            if (!s.empty()) s += "*";
            s += vs_->name(i);
            if (d > 1) s += "^" + std::to_string(d);
        }
        return s.empty() ? "1" : s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*" + monomial_str(e);
        }
        return s;
    }

private:
    void check_same(const MSeries& o) const {
        if (!vs_ || !o.vs_ || !vs_->same_as(*o.vs_))
            throw std::invalid_argument("MSeries: variable set mismatch");
    }
    void add_term(const ExpVec& e, const Rat& c) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (it->second == 0) {
            terms_.erase(it);
        }
    }

    VarSetPtr vs_;
    std::map<ExpVec, Rat> terms_;
};

} // namespace hypermaps
