#pragma once

#include "gcx/canonical.hpp"
#include "gcx/graph.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace gcx {

// One end of a directed edge as seen from its vertex. The half-edge at the
// head of an arrow has degree 1, the one at the tail has degree d-2; for d
// even only the head ends are odd.
struct HalfEdgeSlot {
    int edge = 0;         // 1-based edge label
    bool incoming = false; // true at the head vertex

    friend bool operator==(const HalfEdgeSlot&, const HalfEdgeSlot&) = default;
};

// Trivalent graph with arrow orientations (every vertex has both incoming
// and outgoing edges) and per-vertex orderings of the incident half-edges,
// incoming slots first. Type I vertices have in-degree 2, type II in-degree 1.
struct ArrowGraph {
    CanonicalGraph base;
    std::vector<std::pair<int, int>> direction;     // per edge: (tail, head)
    std::vector<std::array<HalfEdgeSlot, 3>> slots; // per vertex, index 0 = vertex 1

    int k() const { return base.underlying.degree_k(); }
    int vertices() const { return base.underlying.v; }
    int edges() const { return base.underlying.e(); }

    int in_degree(int vertex) const {
        int n = 0;
        for (const auto& [tail, head] : direction)
            if (head == vertex) ++n;
        return n;
    }

    bool type_one(int vertex) const { return in_degree(vertex) == 2; }

    // 0-based position of edge's end at `vertex` in the slot order
    int slot_of(int vertex, int edge, bool incoming) const {
        const auto& s = slots[static_cast<std::size_t>(vertex - 1)];
        for (int i = 0; i < 3; ++i)
            if (s[static_cast<std::size_t>(i)].edge == edge &&
                s[static_cast<std::size_t>(i)].incoming == incoming)
                return i;
        throw GraphError("slot_of: half-edge not found at vertex");
    }

    void validate() const {
        const LabelledGraph& g = base.underlying;
        if (g.excess() != 0) throw GraphError("arrow graph must be trivalent");
        if (!g.simple()) throw GraphError("arrow graph must be simple");
        if (static_cast<int>(direction.size()) != g.e())
            throw GraphError("arrow graph: one direction per edge required");
        for (int i = 0; i < g.e(); ++i) {
            const Edge& ed = g.edges[static_cast<std::size_t>(i)];
            const auto& [tail, head] = direction[static_cast<std::size_t>(i)];
            if (Edge(tail, head) != ed) throw GraphError("arrow graph: direction endpoints differ from edge");
        }
        int type_one_count = 0;
        for (int u = 1; u <= g.v; ++u) {
            int in = in_degree(u);
            if (in < 1 || in > 2) throw GraphError("arrow graph: vertex needs both inputs and outputs");
            if (in == 2) ++type_one_count;
            const auto& s = slots[static_cast<std::size_t>(u - 1)];
            for (int i = 0; i < 3; ++i) {
                const HalfEdgeSlot& h = s[static_cast<std::size_t>(i)];
                const auto& [tail, head] = direction[static_cast<std::size_t>(h.edge - 1)];
                if ((h.incoming ? head : tail) != u)
                    throw GraphError("arrow graph: slot does not point back to vertex");
                if (i < in && !h.incoming) throw GraphError("arrow graph: incoming slots must come first");
                if (i >= in && h.incoming) throw GraphError("arrow graph: outgoing slot out of place");
            }
        }
        if (type_one_count != k())
            throw GraphError("arrow graph: expected k type I and k type II vertices");
    }
};

// Graded sign of a permutation of the half-edge factors
// (e_{1+} ^ e_{1-}) ^ ... ^ (e_{3k+} ^ e_{3k-}): with d even the e_- factors
// have even degree and move freely; the sign is the parity of the odd (e_+)
// factors among themselves. Reference index of e_{i+} is 2(i-1), of e_{i-}
// is 2(i-1)+1; `reordering[j]` is the reference index of the j-th factor of
// the new order.
inline int halfedge_sign(const std::vector<int>& reordering) {
    std::vector<int> odd;
    for (int ref : reordering)
        if (ref % 2 == 0) odd.push_back(ref);
    int sign = 1;
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i + 1; j < odd.size(); ++j)
            if (odd[i] > odd[j]) sign = -sign;
    return sign;
}

namespace detail {

// Parity relating the edge-label orientation to the vertex-orientation order
// of half-edges: compare e_+ factors in edge-label order against the scan of
// incoming slots over vertices. (e_- factors are even and free for d even.)
inline int slot_compatibility_sign(const ArrowGraph& a) {
    std::vector<int> incoming_scan; // edge labels in (vertex, slot) scan order
    for (int u = 1; u <= a.vertices(); ++u)
        for (const HalfEdgeSlot& h : a.slots[static_cast<std::size_t>(u - 1)])
            if (h.incoming) incoming_scan.push_back(h.edge);
    int sign = 1;
    for (std::size_t i = 0; i < incoming_scan.size(); ++i)
        for (std::size_t j = i + 1; j < incoming_scan.size(); ++j)
            if (incoming_scan[i] > incoming_scan[j]) sign = -sign;
    return sign;
}

} // namespace detail

// Deterministic arrow orientation of a simple trivalent graph: the
// lexicographically first direction assignment (per edge label, head = larger
// endpoint tried first) in which every vertex keeps both inputs and outputs.
// Slots list incoming half-edges first, by edge label; if the resulting
// vertex orientation disagrees with the edge-label orientation, the two
// incoming slots of the first type I vertex are swapped.
inline ArrowGraph orient_arrows(const CanonicalGraph& g) {
    const LabelledGraph& graph = g.underlying;
    if (graph.excess() != 0) throw GraphError("orient_arrows: graph must be trivalent");
    if (!graph.simple()) throw GraphError("orient_arrows: graph must be simple");

    const int e = graph.e();
    const int v = graph.v;
    std::vector<int> in(static_cast<std::size_t>(v) + 1, 0);
    std::vector<int> out(static_cast<std::size_t>(v) + 1, 0);
    std::vector<int> remaining(static_cast<std::size_t>(v) + 1, 0);
    for (const Edge& ed : graph.edges) {
        ++remaining[static_cast<std::size_t>(ed.a)];
        ++remaining[static_cast<std::size_t>(ed.b)];
    }
    std::vector<std::pair<int, int>> direction(static_cast<std::size_t>(e));

    auto feasible = [&](int u) {
        // with `remaining[u]` ends undecided, u can still reach in>=1, out>=1
        return in[static_cast<std::size_t>(u)] + remaining[static_cast<std::size_t>(u)] >= 1 &&
               out[static_cast<std::size_t>(u)] + remaining[static_cast<std::size_t>(u)] >= 1 &&
               in[static_cast<std::size_t>(u)] <= 2 && out[static_cast<std::size_t>(u)] <= 2;
    };

    auto assign = [&](auto&& self, int i) -> bool {
        if (i == e) return true;
        const Edge& ed = graph.edges[static_cast<std::size_t>(i)];
        for (auto [tail, head] : {std::pair{ed.a, ed.b}, std::pair{ed.b, ed.a}}) {
            ++out[static_cast<std::size_t>(tail)];
            ++in[static_cast<std::size_t>(head)];
            --remaining[static_cast<std::size_t>(ed.a)];
            --remaining[static_cast<std::size_t>(ed.b)];
            if (feasible(ed.a) && feasible(ed.b)) {
                direction[static_cast<std::size_t>(i)] = {tail, head};
                if (self(self, i + 1)) return true;
            }
            --out[static_cast<std::size_t>(tail)];
            --in[static_cast<std::size_t>(head)];
            ++remaining[static_cast<std::size_t>(ed.a)];
            ++remaining[static_cast<std::size_t>(ed.b)];
        }
        return false;
    };
    if (!assign(assign, 0)) throw GraphError("orient_arrows: no valid orientation (unexpected)");

    ArrowGraph arrow;
    arrow.base = g;
    arrow.direction = direction;
    arrow.slots.resize(static_cast<std::size_t>(v));
    for (int u = 1; u <= v; ++u) {
        std::vector<HalfEdgeSlot> s;
        for (int i = 1; i <= e; ++i)
            if (direction[static_cast<std::size_t>(i - 1)].second == u)
                s.push_back({i, true});
        for (int i = 1; i <= e; ++i)
            if (direction[static_cast<std::size_t>(i - 1)].first == u)
                s.push_back({i, false});
        if (s.size() != 3) throw GraphError("orient_arrows: vertex is not trivalent");
        arrow.slots[static_cast<std::size_t>(u - 1)] = {s[0], s[1], s[2]};
    }

    if (detail::slot_compatibility_sign(arrow) < 0) {
        for (int u = 1; u <= v; ++u) {
            if (arrow.in_degree(u) == 2) {
                auto& s = arrow.slots[static_cast<std::size_t>(u - 1)];
                std::swap(s[0], s[1]);
                break;
            }
        }
        if (detail::slot_compatibility_sign(arrow) < 0)
            throw GraphError("orient_arrows: failed to fix vertex orientation");
    }
    arrow.validate();
    return arrow;
}

// All valid direction assignments for the base of `g`, each with compatible
// slots; used by the sign-uniformity checks.
inline std::vector<ArrowGraph> all_arrow_orientations(const CanonicalGraph& g) {
    const LabelledGraph& graph = g.underlying;
    if (graph.excess() != 0 || !graph.simple())
        throw GraphError("all_arrow_orientations: graph must be simple trivalent");
    const int e = graph.e();
    std::vector<ArrowGraph> out;
    for (unsigned mask = 0; mask < (1u << e); ++mask) {
        std::vector<std::pair<int, int>> direction(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i) {
            const Edge& ed = graph.edges[static_cast<std::size_t>(i)];
            direction[static_cast<std::size_t>(i)] =
                (mask >> i) & 1 ? std::pair{ed.b, ed.a} : std::pair{ed.a, ed.b};
        }
        std::vector<int> in(static_cast<std::size_t>(graph.v) + 1, 0);
        for (const auto& [tail, head] : direction) ++in[static_cast<std::size_t>(head)];
        bool ok = true;
        for (int u = 1; u <= graph.v; ++u)
            if (in[static_cast<std::size_t>(u)] < 1 || in[static_cast<std::size_t>(u)] > 2) ok = false;
        if (!ok) continue;

        ArrowGraph arrow;
        arrow.base = g;
        arrow.direction = direction;
        arrow.slots.resize(static_cast<std::size_t>(graph.v));
        for (int u = 1; u <= graph.v; ++u) {
            std::vector<HalfEdgeSlot> s;
            for (int i = 1; i <= e; ++i)
                if (direction[static_cast<std::size_t>(i - 1)].second == u) s.push_back({i, true});
            for (int i = 1; i <= e; ++i)
                if (direction[static_cast<std::size_t>(i - 1)].first == u) s.push_back({i, false});
            arrow.slots[static_cast<std::size_t>(u - 1)] = {s[0], s[1], s[2]};
        }
        if (detail::slot_compatibility_sign(arrow) < 0) {
            for (int u = 1; u <= graph.v; ++u) {
                if (arrow.in_degree(u) == 2) {
                    auto& s = arrow.slots[static_cast<std::size_t>(u - 1)];
                    std::swap(s[0], s[1]);
                    break;
                }
            }
        }
        arrow.validate();
        out.push_back(std::move(arrow));
    }
    return out;
}

} // namespace gcx
