#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mseries.hpp"
#include "slices.hpp"

namespace hypermaps {
namespace oracle {

// Rooted combinatorial map on 2E darts: alpha pairs dart d with d^1,
// sigma is the counterclockwise rotation around vertices, the root is
// dart 0. Faces are the orbits of phi = sigma . alpha; face(d) lies on
// the LEFT of dart d, and phi walks each contour keeping its face on
// the left.
struct Map {
    int E = 0;
    std::vector<int> sigma;
    std::vector<int> vert, face; // dart -> vertex id / face id
    int V = 0, F = 0;
    std::vector<int> fdeg, vdeg;

    int alpha(int d) const { return d ^ 1; }
    int phi(int d) const { return sigma[static_cast<std::size_t>(d ^ 1)]; }
    int left_face(int d) const { return face[static_cast<std::size_t>(d)]; }
    int right_face(int d) const { return face[static_cast<std::size_t>(d ^ 1)]; }

    void analyze() {
        int n = 2 * E;
        vert.assign(static_cast<std::size_t>(n), -1);
        face.assign(static_cast<std::size_t>(n), -1);
        V = F = 0;
        for (int d = 0; d < n; ++d) {
            if (vert[static_cast<std::size_t>(d)] != -1) continue;
            for (int x = d; vert[static_cast<std::size_t>(x)] == -1; x = sigma[static_cast<std::size_t>(x)])
                vert[static_cast<std::size_t>(x)] = V;
            ++V;
        }
        for (int d = 0; d < n; ++d) {
            if (face[static_cast<std::size_t>(d)] != -1) continue;
            for (int x = d; face[static_cast<std::size_t>(x)] == -1; x = phi(x))
                face[static_cast<std::size_t>(x)] = F;
            ++F;
        }
        fdeg.assign(static_cast<std::size_t>(F), 0);
        for (int d = 0; d < n; ++d) ++fdeg[static_cast<std::size_t>(face[static_cast<std::size_t>(d)])];
        vdeg.assign(static_cast<std::size_t>(V), 0);
        for (int d = 0; d < n; ++d) ++vdeg[static_cast<std::size_t>(vert[static_cast<std::size_t>(d)])];
        if (E == 0) { V = 1; F = 1; fdeg = {0}; vdeg = {0}; }
    }

    bool connected() const {
        if (E == 0) return true;
        std::vector<char> seen(static_cast<std::size_t>(2 * E), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int t : {sigma[static_cast<std::size_t>(d)], d ^ 1})
                if (!seen[static_cast<std::size_t>(t)]) {
                    seen[static_cast<std::size_t>(t)] = 1;
                    ++cnt;
                    stack.push_back(t);
                }
        }
        return cnt == 2 * E;
    }
    bool planar() const { return V - E + F == 2; }
};

// ---- generation ----------------------------------------------------

// Backtracking generator of BFS-canonical rooted maps with E edges (all
// genera; callers filter by planar()). Labels are assigned in pairs in
// first-visit order; canonical form means the fresh sigma-target at each
// step is the next unused even label. Optional exact face-degree cap via
// phi-chain tracking (every face must close at exactly `face_cap`).
class Generator {
public:
    Generator(int E, std::function<void(const Map&)> visit, int face_cap = -1)
        : E_(E), visit_(std::move(visit)), cap_(face_cap) {}

    void run() {
        if (E_ == 0) {
            Map m;
            m.analyze();
            visit_(m);
            return;
        }
        int n = 2 * E_;
        sigma_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), 0);
        endH_.assign(static_cast<std::size_t>(n), -1);
        endT_.assign(static_cast<std::size_t>(n), -1);
        len_.assign(static_cast<std::size_t>(n), 0);
        pairs_ = 1;
        init_chain(0);
        init_chain(1);
        step(0);
    }

private:
    void init_chain(int x) {
        endH_[static_cast<std::size_t>(x)] = x;
        endT_[static_cast<std::size_t>(x)] = x;
        len_[static_cast<std::size_t>(x)] = 1;
    }

    // Record phi(u) = v in the chain structure; returns false (no change)
    // if the face-degree cap rejects it.
    bool link(int u, int v, std::array<int, 4>& undo) {
        int hu = endH_[static_cast<std::size_t>(u)];
        int tv = endT_[static_cast<std::size_t>(v)];
        if (hu == v) { // closes a face of len_[hu] darts
            if (cap_ >= 0 && len_[static_cast<std::size_t>(hu)] != cap_) return false;
            undo = {-1, 0, 0, 0};
            return true;
        }
        if (cap_ >= 0 && len_[static_cast<std::size_t>(hu)] + len_[static_cast<std::size_t>(v)] > cap_) return false;
        undo = {hu, tv, endT_[static_cast<std::size_t>(hu)], len_[static_cast<std::size_t>(hu)]};
        len_[static_cast<std::size_t>(hu)] += len_[static_cast<std::size_t>(v)];
        endT_[static_cast<std::size_t>(hu)] = tv;
        endH_[static_cast<std::size_t>(tv)] = hu;
        return true;
    }
    void unlink(const std::array<int, 4>& undo, int v) {
        if (undo[0] < 0) return;
        int hu = undo[0], tv = undo[1];
        endT_[static_cast<std::size_t>(hu)] = undo[2];
        len_[static_cast<std::size_t>(hu)] = undo[3];
        endH_[static_cast<std::size_t>(tv)] = v;
    }

    void step(int L) {
        int n = 2 * E_;
        if (L == n) {
            if (pairs_ != E_) return;
            Map m;
            m.E = E_;
            m.sigma = sigma_;
            m.analyze();
            visit_(m);
            return;
        }
        if (L >= 2 * pairs_) return;             // traversal stalled: not connected
        if (E_ - pairs_ > n - L) return;          // cannot create enough pairs
        int u = L ^ 1;                            // phi(u) = sigma(L)
        for (int T = 0; T < 2 * pairs_; ++T) {
            if (used_[static_cast<std::size_t>(T)]) continue;
            std::array<int, 4> undo{};
            if (!link(u, T, undo)) continue;
            used_[static_cast<std::size_t>(T)] = 1;
            sigma_[static_cast<std::size_t>(L)] = T;
            step(L + 1);
            sigma_[static_cast<std::size_t>(L)] = -1;
            used_[static_cast<std::size_t>(T)] = 0;
            unlink(undo, T);
        }
        if (pairs_ < E_) {
            int T = 2 * pairs_;
            init_chain(T);
            init_chain(T + 1);
            std::array<int, 4> undo{};
            if (link(u, T, undo)) {
                ++pairs_;
                used_[static_cast<std::size_t>(T)] = 1;
                sigma_[static_cast<std::size_t>(L)] = T;
                step(L + 1);
                sigma_[static_cast<std::size_t>(L)] = -1;
                used_[static_cast<std::size_t>(T)] = 0;
                --pairs_;
                unlink(undo, T);
            }
        }
    }

    int E_;
    std::function<void(const Map&)> visit_;
    int cap_;
    std::vector<int> sigma_;
    std::vector<char> used_;
    std::vector<int> endH_, endT_, len_;
    int pairs_ = 1;
};

inline void enumerate_rooted_maps(int E, const std::function<void(const Map&)>& visit) {
    Generator(E, visit).run();
}

// Independent generation order: exhaustive scan over all rotation
// permutations with a BFS-canonicality filter. Only practical for E <= 4.
inline void enumerate_rooted_maps_scan(int E, const std::function<void(const Map&)>& visit) {
    if (E == 0) {
        Map m;
        m.analyze();
        visit(m);
        return;
    }
    int n = 2 * E;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> order;
    do {
        // BFS labels must come out as the identity
        order.assign(1, 0);
        order.push_back(1);
        std::vector<char> labeled(static_cast<std::size_t>(n), 0);
        labeled[0] = labeled[1] = 1;
        bool canon = true;
        int next = 2;
        for (std::size_t i = 0; i < order.size() && canon; ++i) {
            int t = sigma[static_cast<std::size_t>(order[i])];
            if (labeled[static_cast<std::size_t>(t)]) continue;
            if (t != next) {
                canon = false;
                break;
            }
            labeled[static_cast<std::size_t>(t)] = 1;
            labeled[static_cast<std::size_t>(t ^ 1)] = 1;
            order.push_back(t);
            order.push_back(t ^ 1);
            next += 2;
        }
        if (!canon || next != n) continue;
        Map m;
        m.E = E;
        m.sigma = sigma;
        m.analyze();
        visit(m);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// ---- colorings -----------------------------------------------------

// Proper 2-colorings of all faces (0 = white, 1 = black); empty if the
// face-adjacency graph is not bipartite or some edge has equal sides.
inline std::vector<std::vector<int>> full_colorings(const Map& m) {
    if (m.E == 0) return {{0}, {1}};
    std::vector<int> col(static_cast<std::size_t>(m.F), -1);
    std::vector<std::pair<int, int>> adj;
    for (int e = 0; e < m.E; ++e) {
        int f1 = m.face[static_cast<std::size_t>(2 * e)], f2 = m.face[static_cast<std::size_t>(2 * e + 1)];
        if (f1 == f2) return {};
        adj.emplace_back(f1, f2);
    }
    col[0] = 0;
    bool changed = true;
    while (changed) { // small graphs: naive propagation
        changed = false;
        for (auto [f1, f2] : adj) {
            if (col[static_cast<std::size_t>(f1)] != -1 && col[static_cast<std::size_t>(f2)] == -1) {
                col[static_cast<std::size_t>(f2)] = 1 - col[static_cast<std::size_t>(f1)];
                changed = true;
            }
            if (col[static_cast<std::size_t>(f2)] != -1 && col[static_cast<std::size_t>(f1)] == -1) {
                col[static_cast<std::size_t>(f1)] = 1 - col[static_cast<std::size_t>(f2)];
                changed = true;
            }
        }
    }
    for (auto [f1, f2] : adj)
        if (col[static_cast<std::size_t>(f1)] == col[static_cast<std::size_t>(f2)]) return {};
    for (int f = 0; f < m.F; ++f)
        if (col[static_cast<std::size_t>(f)] == -1) return {}; // disconnected dual cannot happen on a sphere
    std::vector<int> swapped(col);
    for (auto& c : swapped) c = 1 - c;
    return {col, swapped};
}

// Proper colorings of the inner faces only (the root face is the
// uncolored boundary, marked -1). One entry per choice over the
// connected components of the inner-face adjacency graph.
inline std::vector<std::vector<int>> inner_colorings(const Map& m, int boundary_face) {
    std::vector<std::vector<std::pair<int, int>>> nb(static_cast<std::size_t>(m.F));
    for (int e = 0; e < m.E; ++e) {
        int f1 = m.face[static_cast<std::size_t>(2 * e)], f2 = m.face[static_cast<std::size_t>(2 * e + 1)];
        if (f1 == boundary_face || f2 == boundary_face) continue;
        if (f1 == f2) return {}; // inner bridge: no proper coloring
        nb[static_cast<std::size_t>(f1)].emplace_back(f2, 1);
        nb[static_cast<std::size_t>(f2)].emplace_back(f1, 1);
    }
    std::vector<int> comp(static_cast<std::size_t>(m.F), -1), rel(static_cast<std::size_t>(m.F), 0);
    int ncomp = 0;
    for (int f = 0; f < m.F; ++f) {
        if (f == boundary_face || comp[static_cast<std::size_t>(f)] != -1) continue;
        comp[static_cast<std::size_t>(f)] = ncomp;
        rel[static_cast<std::size_t>(f)] = 0;
        std::vector<int> stack{f};
        while (!stack.empty()) {
            int g = stack.back();
            stack.pop_back();
            for (auto [h, w] : nb[static_cast<std::size_t>(g)]) {
                if (comp[static_cast<std::size_t>(h)] == -1) {
                    comp[static_cast<std::size_t>(h)] = ncomp;
                    rel[static_cast<std::size_t>(h)] = rel[static_cast<std::size_t>(g)] ^ w;
                    stack.push_back(h);
                } else if (rel[static_cast<std::size_t>(h)] != (rel[static_cast<std::size_t>(g)] ^ w)) {
                    return {}; // odd cycle
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << ncomp); ++mask) {
        std::vector<int> col(static_cast<std::size_t>(m.F), -1);
        for (int f = 0; f < m.F; ++f) {
            if (f == boundary_face) continue;
            col[static_cast<std::size_t>(f)] = rel[static_cast<std::size_t>(f)] ^
                                               ((mask >> comp[static_cast<std::size_t>(f)]) & 1);
        }
        out.push_back(std::move(col));
    }
    return out;
}

// ---- separating cycles and ccw-girth --------------------------------

// For a properly colored two-boundary map, classify all simple directed
// cycles (in the canonical orientation: white on the right of each edge)
// that separate the central boundary from the outer one. The cycle's
// direction is counterclockwise when the central region lies on its left.
struct GirthInfo {
    int ccw_girth = -1; // -1 encodes infinity
    bool has_cw_separating = false;
    int cw_girth = -1;
    int cw_count_at_min = 0; // simple cw separating cycles of minimal length
};

inline GirthInfo girth_info(const Map& m, const std::vector<int>& col, int outer_face, int central_face) {
    GirthInfo info;
    std::vector<int> cd(static_cast<std::size_t>(m.E)); // canonical dart per edge: black face on its left
    for (int e = 0; e < m.E; ++e) {
        int d = 2 * e;
        cd[static_cast<std::size_t>(e)] = (col[static_cast<std::size_t>(m.face[static_cast<std::size_t>(d)])] == 1) ? d : d ^ 1;
    }
    std::vector<int> parent(static_cast<std::size_t>(m.F));
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    for (int S = 1; S < (1 << m.E); ++S) {
        // directed simple cycle test
        std::vector<int> outd(static_cast<std::size_t>(m.V), 0), ind(static_cast<std::size_t>(m.V), 0);
        bool ok = true;
        int count = 0, first = -1;
        for (int e = 0; e < m.E && ok; ++e) {
            if (!((S >> e) & 1)) continue;
            ++count;
            if (first < 0) first = e;
            int d = cd[static_cast<std::size_t>(e)];
            int tv = m.vert[static_cast<std::size_t>(d)], hv = m.vert[static_cast<std::size_t>(d ^ 1)];
            if (++outd[static_cast<std::size_t>(tv)] > 1 || ++ind[static_cast<std::size_t>(hv)] > 1) ok = false;
        }
        if (!ok) continue;
        bool closed = true;
        for (int v = 0; v < m.V; ++v)
            if (outd[static_cast<std::size_t>(v)] != ind[static_cast<std::size_t>(v)]) closed = false;
        if (!closed) continue;
        // single cycle: walk from `first`
        {
            int steps = 0, e = first;
            do {
                int d = cd[static_cast<std::size_t>(e)];
                int hv = m.vert[static_cast<std::size_t>(d ^ 1)];
                int nxt = -1;
                for (int e2 = 0; e2 < m.E; ++e2)
                    if (((S >> e2) & 1) && m.vert[static_cast<std::size_t>(cd[static_cast<std::size_t>(e2)])] == hv) nxt = e2;
                e = nxt;
                ++steps;
            } while (e != first && e >= 0 && steps <= m.E);
            if (e != first || steps != count) continue;
        }
        // separation: flood faces across edges not in S
        for (int f = 0; f < m.F; ++f) parent[static_cast<std::size_t>(f)] = f;
        for (int e = 0; e < m.E; ++e) {
            if ((S >> e) & 1) continue;
            int a = find(m.face[static_cast<std::size_t>(2 * e)]), b = find(m.face[static_cast<std::size_t>(2 * e + 1)]);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
        if (find(central_face) == find(outer_face)) continue;
        // side: central region on the left <=> counterclockwise
        bool ccw = false, consistent = true;
        bool set = false;
        for (int e = 0; e < m.E; ++e) {
            if (!((S >> e) & 1)) continue;
            int d = cd[static_cast<std::size_t>(e)];
            bool left_central = find(m.face[static_cast<std::size_t>(d)]) == find(central_face);
            if (!set) { ccw = left_central; set = true; }
            else if (ccw != left_central) consistent = false;
        }
        if (!consistent) continue; // cannot happen for a separating simple cycle
        if (ccw) {
            if (info.ccw_girth < 0 || count < info.ccw_girth) info.ccw_girth = count;
        } else {
            info.has_cw_separating = true;
            if (info.cw_girth < 0 || count < info.cw_girth) {
                info.cw_girth = count;
                info.cw_count_at_min = 1;
            } else if (count == info.cw_girth) {
                ++info.cw_count_at_min;
            }
        }
    }
    return info;
}

// Shortest counterclockwise separating directed cycle of a two-boundary
// colored map; -1 encodes infinity (possible only for a black outer and
// white central boundary).
inline int oracle_ccw_girth(const Map& m, const std::vector<int>& col, int outer_face,
                            int central_face) {
    return girth_info(m, col, outer_face, central_face).ccw_girth;
}

// Contour of `f` as a simple directed cycle? (needed for tightness)
inline bool contour_simple(const Map& m, int f) {
    std::vector<int> seen(static_cast<std::size_t>(m.V), 0);
    for (int d = 0; d < 2 * m.E; ++d) {
        if (m.face[static_cast<std::size_t>(d)] != f) continue;
        if (seen[static_cast<std::size_t>(m.vert[static_cast<std::size_t>(d)])]++) return false;
    }
    return true;
}

} // namespace oracle
} // namespace hypermaps
