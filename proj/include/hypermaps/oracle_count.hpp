#pragma once

#include <optional>
#include <string>

#include "gf.hpp"
#include "oracle.hpp"
#include "report.hpp"

namespace hypermaps {
namespace oracle {

enum class BKind { disk, pointed_disk, trumpet, cornet, cylinder, one_way_cylinder, dobrushin };

struct BoundarySpec {
    BKind kind;
    Color c1 = Color::white; // rooted (outer) boundary color
    Color c2 = Color::white; // central boundary color, where applicable
    unsigned p = 0, q = 0;
    unsigned girth = 0;                        // trumpet/cornet girth
    std::optional<unsigned> ccw_girth_filter;  // cylinder refinement by ccw-girth

    std::string str() const {
        auto cs = [](Color c) { return c == Color::white ? "w" : "b"; };
        switch (kind) {
        case BKind::disk: return std::string("disk ") + cs(c1) + " p=" + std::to_string(p);
        case BKind::pointed_disk: return std::string("pointed ") + cs(c1) + " p=" + std::to_string(p);
        case BKind::trumpet:
            return std::string("trumpet ") + cs(c1) + " p=" + std::to_string(p) + " h=" + std::to_string(girth);
        case BKind::cornet:
            return std::string("cornet ") + cs(c1) + " p=" + std::to_string(p) + " h=" + std::to_string(girth);
        case BKind::cylinder:
            return std::string("cylinder ") + cs(c1) + cs(c2) + " p=" + std::to_string(p) +
                   " q=" + std::to_string(q) +
                   (ccw_girth_filter ? " ccw-girth=" + std::to_string(*ccw_girth_filter) : "");
        case BKind::one_way_cylinder:
            return "one-way cylinder p=" + std::to_string(p) + " q=" + std::to_string(q);
        case BKind::dobrushin:
            return "dobrushin p=" + std::to_string(p) + " q=" + std::to_string(q);
        }
        return "?";
    }
};

namespace detail {

struct WeightCtx {
    VarSetPtr vs;
    std::map<unsigned, unsigned> tw_idx, tb_idx;

    explicit WeightCtx(const VarSetPtr& v) : vs(v) {
        for (unsigned i = 0; i < v->size(); ++i) {
            const std::string& n = v->name(i);
            if (n.rfind("tw", 0) == 0) tw_idx[static_cast<unsigned>(std::stoul(n.substr(2)))] = i;
            if (n.rfind("tb", 0) == 0) tb_idx[static_cast<unsigned>(std::stoul(n.substr(2)))] = i;
        }
    }

    // Weight monomial of one configuration; false if some inner face
    // degree has no active weight variable (zero contribution).
    bool monomial(const Map& m, const std::vector<int>& col, const std::vector<int>& boundaries,
                  int t_exp, ExpVec& out) const {
        ExpVec e;
        if (t_exp < 0 || static_cast<unsigned>(t_exp) > vs->order()) return false;
        e.set(vs->index("t"), static_cast<unsigned>(t_exp));
        unsigned total = static_cast<unsigned>(t_exp);
        for (int f = 0; f < m.F; ++f) {
            if (std::find(boundaries.begin(), boundaries.end(), f) != boundaries.end()) continue;
            unsigned d = static_cast<unsigned>(m.fdeg[static_cast<std::size_t>(f)]);
            const auto& idx = (col[static_cast<std::size_t>(f)] == 0) ? tw_idx : tb_idx;
            auto it = idx.find(d);
            if (it == idx.end()) return false;
            e.set(it->second, e.get(it->second) + 1);
            if (++total > vs->order()) return false;
        }
        out = e;
        return true;
    }
};

inline int color_of_int(Color c) { return c == Color::white ? 0 : 1; }

// Dobrushin boundary pattern: the contour traced from the root corner
// reads q edges directed with the boundary on their left, then p edges
// directed with it on their right; each bridge fills one slot per block.
inline bool dobrushin_pattern(const Map& m, const std::vector<int>& col, int bface, unsigned p,
                              unsigned q) {
    if (m.fdeg[static_cast<std::size_t>(bface)] != static_cast<int>(p + q)) return false;
    if (m.E == 0) return p == 0 && q == 0;
    std::vector<int> contour;
    for (int s = 0; static_cast<int>(contour.size()) < m.fdeg[static_cast<std::size_t>(bface)]; s = m.phi(s))
        contour.push_back(s);
    std::map<int, std::vector<std::size_t>> bridge_slots; // edge -> contour positions
    for (std::size_t i = 0; i < contour.size(); ++i) {
        int s = contour[i];
        int g = m.face[static_cast<std::size_t>(s ^ 1)];
        bool in_q = i < q;
        if (g == bface) {
            bridge_slots[s >> 1].push_back(i);
            continue;
        }
        // inner face on the right is white <=> the edge's canonical
        // direction keeps the boundary on the left (q-block edge)
        bool is_q_edge = col[static_cast<std::size_t>(g)] == 0;
        if (is_q_edge != in_q) return false;
    }
    for (const auto& [e, slots] : bridge_slots) {
        if (slots.size() != 2) return false;
        if ((slots[0] < q) == (slots[1] < q)) return false;
    }
    return true;
}

} // namespace detail

// Exact weighted count of rooted planar hypermaps matching `spec`, over
// all edge counts <= E_max. The truncation order must be >= E_max + 1 to
// retain every reachable monomial.
inline MSeries oracle_count(const BoundarySpec& spec, int E_max, const DegreeBounds& bounds,
                            unsigned order) {
    VarSetPtr vs = hypermap_vars(bounds.white_degrees, bounds.black_degrees, order);
    detail::WeightCtx ctx(vs);
    MSeries acc = MSeries::zero(vs);
    ExpVec mono;

    auto visit = [&](const Map& m) {
        if (!m.connected() || !m.planar()) return;
        const int bface = m.E == 0 ? 0 : m.face[0];

        if (spec.kind == BKind::dobrushin) {
            if (m.fdeg[static_cast<std::size_t>(bface)] != static_cast<int>(spec.p + spec.q)) return;
            for (const auto& col : inner_colorings(m, bface)) {
                if (!detail::dobrushin_pattern(m, col, bface, spec.p, spec.q)) continue;
                if (ctx.monomial(m, col, {bface}, m.V, mono)) acc += MSeries::monomial(vs, mono, 1);
            }
            return;
        }

        if (m.fdeg[static_cast<std::size_t>(bface)] != static_cast<int>(spec.p)) return;
        for (const auto& col : full_colorings(m)) {
            if (col[static_cast<std::size_t>(bface)] != detail::color_of_int(spec.c1)) continue;
            switch (spec.kind) {
            case BKind::disk:
                if (ctx.monomial(m, col, {bface}, m.V, mono)) acc += MSeries::monomial(vs, mono, 1);
                break;
            case BKind::pointed_disk:
                if (ctx.monomial(m, col, {bface}, m.V - 1, mono))
                    acc += MSeries::monomial(vs, mono, m.V);
                break;
            case BKind::cylinder:
            case BKind::one_way_cylinder: {
                Color c2 = spec.kind == BKind::one_way_cylinder ? Color::black : spec.c2;
                for (int f2 = 0; f2 < m.F; ++f2) {
                    if (f2 == bface) continue;
                    if (m.fdeg[static_cast<std::size_t>(f2)] != static_cast<int>(spec.q)) continue;
                    if (col[static_cast<std::size_t>(f2)] != detail::color_of_int(c2)) continue;
                    if (spec.ccw_girth_filter || spec.kind == BKind::one_way_cylinder) {
                        GirthInfo gi = girth_info(m, col, bface, f2);
                        if (spec.ccw_girth_filter &&
                            gi.ccw_girth != static_cast<int>(*spec.ccw_girth_filter))
                            continue;
                        if (spec.kind == BKind::one_way_cylinder && gi.has_cw_separating) continue;
                    }
                    if (ctx.monomial(m, col, {bface, f2}, m.V, mono))
                        acc += MSeries::monomial(vs, mono, m.fdeg[static_cast<std::size_t>(f2)]);
                }
                break;
            }
            case BKind::trumpet:
            case BKind::cornet: {
                bool trump = spec.kind == BKind::trumpet;
                int want_col = trump ? 1 : 0; // tight boundary is black, strictly tight is white
                for (int f2 = 0; f2 < m.F; ++f2) {
                    if (f2 == bface) continue;
                    if (m.fdeg[static_cast<std::size_t>(f2)] != static_cast<int>(spec.girth)) continue;
                    if (col[static_cast<std::size_t>(f2)] != want_col) continue;
                    if (!contour_simple(m, f2)) continue;
                    GirthInfo gi = girth_info(m, col, bface, f2);
                    if (trump) {
                        if (gi.ccw_girth != static_cast<int>(spec.girth)) continue;
                    } else {
                        if (gi.cw_girth != static_cast<int>(spec.girth) || gi.cw_count_at_min != 1)
                            continue;
                    }
                    int t_exp = m.V;
                    if (!trump) { // no weight for vertices on the strictly tight boundary
                        std::vector<char> on(static_cast<std::size_t>(m.V), 0);
                        for (int d = 0; d < 2 * m.E; ++d)
                            if (m.face[static_cast<std::size_t>(d)] == f2)
                                on[static_cast<std::size_t>(m.vert[static_cast<std::size_t>(d)])] = 1;
                        for (char x : on) t_exp -= x;
                    }
                    if (ctx.monomial(m, col, {bface, f2}, t_exp, mono))
                        acc += MSeries::monomial(vs, mono, 1);
                }
                break;
            }
            default: break;
            }
        }
    };

    for (int E = 0; E <= E_max; ++E) enumerate_rooted_maps(E, visit);
    return acc;
}

// White-side and black-side edge counts of a boundary spec: every edge of
// a hypermap has exactly one white side and one black side, so
//   #edges = sum_d d * (#white inner faces of degree d) + W(spec)
//          = sum_d d * (#black inner faces of degree d) + B(spec).
inline unsigned white_boundary_total(const BoundarySpec& s) {
    auto w1 = s.c1 == Color::white ? s.p : 0;
    switch (s.kind) {
    case BKind::disk:
    case BKind::pointed_disk: return w1;
    case BKind::cylinder: return w1 + (s.c2 == Color::white ? s.q : 0);
    case BKind::one_way_cylinder: return s.p;
    case BKind::dobrushin: return s.p;
    case BKind::trumpet: return w1;                    // tight boundary is black
    case BKind::cornet: return w1 + s.girth;           // strictly tight boundary is white
    }
    return 0;
}
inline unsigned black_boundary_total(const BoundarySpec& s) {
    auto b1 = s.c1 == Color::black ? s.p : 0;
    switch (s.kind) {
    case BKind::disk:
    case BKind::pointed_disk: return b1;
    case BKind::cylinder: return b1 + (s.c2 == Color::black ? s.q : 0);
    case BKind::one_way_cylinder: return s.q;
    case BKind::dobrushin: return s.q;
    case BKind::trumpet: return b1 + s.girth;
    case BKind::cornet: return b1;
    }
    return 0;
}

// Restrict a series to the monomials whose hypermaps have <= E_max edges
// (fully enumerated at that budget). The edge count of a monomial is
// exact, not a bound, by the white-side incidence identity above.
inline MSeries restrict_to_edge_budget(const MSeries& s, const BoundarySpec& spec, int E_max) {
    detail::WeightCtx ctx(s.varset());
    MSeries out = MSeries::zero(s.varset());
    for (const auto& [e, c] : s.terms()) {
        unsigned ew = white_boundary_total(spec), eb = black_boundary_total(spec);
        for (const auto& [d, i] : ctx.tw_idx) ew += d * e.get(i);
        for (const auto& [d, i] : ctx.tb_idx) eb += d * e.get(i);
        if (ew != eb)
            throw std::logic_error("restrict_to_edge_budget: white/black edge counts disagree");
        if (ew <= static_cast<unsigned>(E_max)) out += MSeries::monomial(s.varset(), e, c);
    }
    return out;
}

// Oracle-vs-formula comparison on all monomials determined at the edge
// budget; requires the formula's truncation order >= E_max + 1.
inline CheckItem compare(const BoundarySpec& spec, int E_max, const MSeries& formula,
                         const DegreeBounds& bounds) {
    const VarSetPtr& vs = formula.varset();
    if (vs->order() < static_cast<unsigned>(E_max) + 1)
        throw std::invalid_argument("compare: truncation order too low for this edge budget");
    MSeries counted = oracle_count(spec, E_max, bounds, vs->order());
    MSeries lhs = restrict_to_edge_budget(counted, spec, E_max);
    MSeries rhs = restrict_to_edge_budget(formula, spec, E_max);
    CheckItem item{spec.str() + " (E<=" + std::to_string(E_max) + ")", lhs == rhs, ""};
    if (!item.pass) {
        ExpVec where;
        MSeries::first_mismatch(lhs, rhs, where);
        item.detail = "first mismatch at monomial " + lhs.monomial_str(where) + ": oracle " +
                      lhs.coeff(where).str() + " vs formula " + rhs.coeff(where).str();
    }
    return item;
}

// Rooted maps whose faces all have degree 4, counted by number of faces
// (face-growth generation with the exact degree cap).
inline std::vector<long> quadrangulation_rooted_counts(int n_max) {
    std::vector<long> counts(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 1; n <= n_max; ++n) {
        long c = 0;
        Generator gen(2 * n,
                      [&](const Map& m) {
                          if (!m.connected() || !m.planar()) return;
                          for (int f = 0; f < m.F; ++f)
                              if (m.fdeg[static_cast<std::size_t>(f)] != 4) return;
                          ++c;
                      },
                      /*face_cap=*/4);
        gen.run();
        counts[static_cast<std::size_t>(n)] = c;
    }
    return counts;
}

} // namespace oracle
} // namespace hypermaps
