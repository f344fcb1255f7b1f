#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypermaps {

// Exponent vector over at most 16 variables, each exponent < 256.
// Packed big-endian so that comparing (w[0],w[1]) as integers is the
// lexicographic order on (e_0,...,e_15).
struct ExpVec {
    std::array<std::uint64_t, 2> w{0, 0};

    unsigned get(unsigned i) const {
        return static_cast<unsigned>((w[i >> 3] >> (8 * (7 - (i & 7)))) & 0xff);
    }
    void set(unsigned i, unsigned e) {
        std::uint64_t mask = std::uint64_t(0xff) << (8 * (7 - (i & 7)));
        w[i >> 3] = (w[i >> 3] & ~mask) | (std::uint64_t(e & 0xff) << (8 * (7 - (i & 7))));
    }
    unsigned total_degree(unsigned nvars) const {
        unsigned s = 0;
        for (unsigned i = 0; i < nvars; ++i) s += get(i);
        return s;
    }
    // Componentwise sum; caller guarantees no byte overflows (degrees are
    // pre-filtered against the truncation order, which is < 256).
    ExpVec operator+(const ExpVec& o) const {
        ExpVec r;
        r.w[0] = w[0] + o.w[0];
        r.w[1] = w[1] + o.w[1];
        return r;
    }
    bool operator<(const ExpVec& o) const {
        return w[0] != o.w[0] ? w[0] < o.w[0] : w[1] < o.w[1];
    }
    bool operator==(const ExpVec& o) const { return w == o.w; }
    bool operator!=(const ExpVec& o) const { return w != o.w; }
};

// Ordered, named variable set with a global truncation order (maximal
// total degree retained). Shared immutably by all series built over it.
class VarSet {
public:
    VarSet(std::vector<std::string> names, unsigned order) : names_(std::move(names)), order_(order) {
        if (names_.size() > 16) throw std::invalid_argument("VarSet: at most 16 variables supported");
        if (order_ > 200) throw std::invalid_argument("VarSet: truncation order too large");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("VarSet: duplicate variable name");
    }

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names, unsigned order) {
        return std::make_shared<const VarSet>(std::move(names), order);
    }

    unsigned size() const { return static_cast<unsigned>(names_.size()); }
    unsigned order() const { return order_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(unsigned i) const { return names_.at(i); }

    unsigned index(const std::string& n) const {
        auto it = std::find(names_.begin(), names_.end(), n);
        if (it == names_.end()) throw std::invalid_argument("VarSet: unknown variable " + n);
        return static_cast<unsigned>(it - names_.begin());
    }
    bool has(const std::string& n) const {
        return std::find(names_.begin(), names_.end(), n) != names_.end();
    }

    bool same_as(const VarSet& o) const { return names_ == o.names_ && order_ == o.order_; }

private:
    std::vector<std::string> names_;
    unsigned order_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Standard variable set for hypermap weights: vertex weight "t", white
// face weights "tw<d>", black face weights "tb<d>". Degree lists allow
// sparse activations (e.g. quadrangulations: white {4}, black {2}).
inline VarSetPtr hypermap_vars(const std::vector<unsigned>& white_degrees,
                               const std::vector<unsigned>& black_degrees, unsigned order) {
    std::vector<std::string> n;
    n.push_back("t");
    for (unsigned d : white_degrees) n.push_back("tw" + std::to_string(d));
    for (unsigned d : black_degrees) n.push_back("tb" + std::to_string(d));
    return VarSet::make(std::move(n), order);
}

inline std::vector<unsigned> degree_range(unsigned dmax) {
    std::vector<unsigned> v;
    for (unsigned d = 1; d <= dmax; ++d) v.push_back(d);
    return v;
}

// Generic walk-weight variables p-1, p0, ..., pd.
inline VarSetPtr walk_vars(unsigned d, unsigned order) {
    std::vector<std::string> n;
    for (int j = -1; j <= static_cast<int>(d); ++j) n.push_back("p" + std::to_string(j));
    return VarSet::make(std::move(n), order);
}

} // namespace hypermaps
