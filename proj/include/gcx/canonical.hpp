#pragma once

#include "gcx/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace gcx {

// A zero-free graph class in canonical form: the lexicographically minimal
// sorted edge list over all vertex relabelings. Instances come out of
// canonicalize()/enumerate and never contain self-loops or parallel edges.
struct CanonicalGraph {
    LabelledGraph underlying;
    std::uint64_t aut_order = 1;
    bool orientation_reversing = false;

    friend bool operator==(const CanonicalGraph& x, const CanonicalGraph& y) {
        return x.underlying == y.underlying;
    }
    friend auto operator<=>(const CanonicalGraph& x, const CanonicalGraph& y) {
        return x.underlying <=> y.underlying;
    }
};

namespace detail {

// Backtracking search for the lex-minimal sorted edge list over vertex
// relabelings. Shared by canonicalize(), automorphisms() and the orderly
// generator's canonicity test.
//
// The sorted edge list is maintained as "groups": group f holds the second
// coordinates of the pairs (f, s), f < s, in increasing order. While labels
// 1..m are assigned, every not-yet-known second coordinate is > m, which is
// what makes partial lexicographic comparison sound.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const LabelledGraph& g) : g_(g), v_(g.v) {
        adj_.assign(static_cast<std::size_t>(v_ + 1), std::vector<bool>(v_ + 1, false));
        deg_.assign(static_cast<std::size_t>(v_ + 1), 0);
        for (const Edge& ed : g.edges) {
            adj_[static_cast<std::size_t>(ed.a)][static_cast<std::size_t>(ed.b)] = true;
            adj_[static_cast<std::size_t>(ed.b)][static_cast<std::size_t>(ed.a)] = true;
            ++deg_[static_cast<std::size_t>(ed.a)];
            ++deg_[static_cast<std::size_t>(ed.b)];
        }
    }

    // Full search: canonical groups + all labelings achieving them.
    void run() {
        seed_best_with_identity();
        find_smaller_only_ = false;
        dfs();
    }

    // Early-exit variant: true iff no relabeling beats the identity.
    bool identity_is_canonical() {
        seed_best_with_identity();
        find_smaller_only_ = true;
        found_smaller_ = false;
        dfs();
        return !found_smaller_;
    }

    std::vector<Edge> canonical_edges() const {
        std::vector<Edge> out;
        for (int f = 1; f <= v_; ++f)
            for (int s : best_groups_[static_cast<std::size_t>(f)]) out.emplace_back(f, s);
        return out;
    }

    // old-vertex -> new-label maps achieving the canonical form
    const std::vector<std::vector<int>>& achievers() const { return achievers_; }

private:
    enum class Cmp { Less, Equal, Greater, Unknown };

    void seed_best_with_identity() {
        best_groups_.assign(static_cast<std::size_t>(v_ + 1), {});
        for (const Edge& ed : g_.edges)
            best_groups_[static_cast<std::size_t>(ed.a)].push_back(ed.b);
        for (auto& grp : best_groups_) std::sort(grp.begin(), grp.end());
        achievers_.clear();
        label_.assign(static_cast<std::size_t>(v_ + 1), 0);
        groups_.assign(static_cast<std::size_t>(v_ + 1), {});
        order_.clear();
    }

    // Compare the partially known sorted edge list with the best one. Every
    // unknown second coordinate is > m (= labels assigned so far).
    Cmp compare_partial(int m) const {
        for (int f = 1; f <= v_; ++f) {
            const auto& cur = groups_[static_cast<std::size_t>(f)];
            const auto& best = best_groups_[static_cast<std::size_t>(f)];
            std::size_t n = std::max(cur.size(), best.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (i < cur.size() && i < best.size()) {
                    if (cur[i] < best[i]) return Cmp::Less;
                    if (cur[i] > best[i]) return Cmp::Greater;
                    continue;
                }
                if (i >= cur.size()) {
                    // current value here is either a future second (> m) or a
                    // pair from a later group (first coordinate > f)
                    if (best[i] <= m) return Cmp::Greater;
                    return Cmp::Unknown;
                }
                // best group exhausted: best's next pair has first coord > f
                return Cmp::Less;
            }
        }
        return Cmp::Equal;
    }

    void dfs() {
        int m = static_cast<int>(order_.size());
        if (m == v_) {
            Cmp c = compare_partial(m);
            if (find_smaller_only_) {
                if (c == Cmp::Less) found_smaller_ = true;
                return;
            }
            if (c == Cmp::Less) {
                best_groups_ = groups_;
                achievers_.clear();
                achievers_.push_back(label_);
            } else if (c == Cmp::Equal) {
                achievers_.push_back(label_);
            }
            return;
        }

        std::vector<int> candidates;
        for (int u = 1; u <= v_; ++u)
            if (label_[static_cast<std::size_t>(u)] == 0) candidates.push_back(u);
        std::stable_sort(candidates.begin(), candidates.end(), [&](int x, int y) {
            int ax = assigned_adjacency(x), ay = assigned_adjacency(y);
            if (ax != ay) return ax > ay;
            return deg_[static_cast<std::size_t>(x)] > deg_[static_cast<std::size_t>(y)];
        });

        int next_label = m + 1;
        for (int u : candidates) {
            label_[static_cast<std::size_t>(u)] = next_label;
            order_.push_back(u);
            std::vector<int> touched;
            for (int w : order_) {
                if (w == u) continue;
                if (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) {
                    int f = label_[static_cast<std::size_t>(w)];
                    groups_[static_cast<std::size_t>(f)].push_back(next_label);
                    touched.push_back(f);
                }
            }

            Cmp c = compare_partial(next_label);
            bool prune = (c == Cmp::Greater);
            if (find_smaller_only_ && c == Cmp::Less) found_smaller_ = true;
            if (!prune && !(find_smaller_only_ && found_smaller_)) dfs();

            for (int f : touched) groups_[static_cast<std::size_t>(f)].pop_back();
            order_.pop_back();
            label_[static_cast<std::size_t>(u)] = 0;
            if (find_smaller_only_ && found_smaller_) return;
        }
    }

    int assigned_adjacency(int u) const {
        int count = 0;
        for (int w : order_)
            if (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) ++count;
        return count;
    }

    const LabelledGraph& g_;
    int v_;
    std::vector<std::vector<bool>> adj_;
    std::vector<int> deg_;

    std::vector<std::vector<int>> best_groups_;
    std::vector<std::vector<int>> groups_;
    std::vector<int> label_; // old vertex -> new label (0 = unassigned)
    std::vector<int> order_; // old vertices in assignment order
    std::vector<std::vector<int>> achievers_;
    bool find_smaller_only_ = false;
    bool found_smaller_ = false;
};

inline int permutation_sign(std::vector<int> perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Parity of the edge permutation carrying g's edge-label order into the
// canonical sorted order, under the vertex relabeling `label`.
inline int edge_permutation_sign(const LabelledGraph& g, const std::vector<int>& label,
                                 const std::vector<Edge>& canonical_edges) {
    std::vector<int> perm(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        Edge mapped(label[static_cast<std::size_t>(g.edges[i].a)],
                    label[static_cast<std::size_t>(g.edges[i].b)]);
        auto it = std::lower_bound(canonical_edges.begin(), canonical_edges.end(), mapped);
        perm[i] = static_cast<int>(it - canonical_edges.begin());
    }
    return permutation_sign(std::move(perm));
}

} // namespace detail

struct Canonicalized {
    CanonicalGraph cls;
    int sign = 1; // +1 or -1
};

struct AutomorphismInfo {
    std::uint64_t order = 1;
    bool orientation_reversing = false;
};

// |Aut| of g as an abstract graph, and whether some automorphism induces an
// odd edge permutation. Requires g simple.
inline AutomorphismInfo automorphisms(const LabelledGraph& g) {
    if (!g.simple()) throw GraphError("automorphisms: graph must be simple");
    detail::CanonicalSearch search(g);
    search.run();
    std::vector<Edge> canon = search.canonical_edges();
    AutomorphismInfo info;
    info.order = search.achievers().size();
    int first_sign = 0;
    for (const auto& label : search.achievers()) {
        int s = detail::edge_permutation_sign(g, label, canon);
        if (first_sign == 0)
            first_sign = s;
        else if (s != first_sign)
            info.orientation_reversing = true;
    }
    return info;
}

// Zero classes (self-loop, parallel pair, orientation-reversing automorphism)
// map to nullopt; otherwise the canonical representative together with the
// parity of the edge relabeling.
inline std::optional<Canonicalized> canonicalize(const LabelledGraph& g) {
    if (g.has_loop() || g.has_parallel_pair()) return std::nullopt;
    detail::CanonicalSearch search(g);
    search.run();
    std::vector<Edge> canon = search.canonical_edges();

    int first_sign = 0;
    for (const auto& label : search.achievers()) {
        int s = detail::edge_permutation_sign(g, label, canon);
        if (first_sign == 0) first_sign = s;
        if (s != first_sign) return std::nullopt; // orientation-reversing automorphism
    }

    Canonicalized out;
    out.cls.underlying = LabelledGraph{g.v, canon};
    out.cls.aut_order = search.achievers().size();
    out.cls.orientation_reversing = false;
    out.sign = first_sign;
    return out;
}

// Canonical form of any simple graph, zero class or not. Unlike
// canonicalize(), orientation-reversing classes come back with the flag set
// instead of vanishing; surgery data is built on these too.
inline CanonicalGraph canonical_class(const LabelledGraph& g) {
    if (!g.simple()) throw GraphError("canonical_class: graph must be simple");
    detail::CanonicalSearch search(g);
    search.run();
    CanonicalGraph cls;
    cls.underlying = LabelledGraph{g.v, search.canonical_edges()};
    cls.aut_order = search.achievers().size();
    int first_sign = 0;
    for (const auto& label : search.achievers()) {
        int s = detail::edge_permutation_sign(g, label, cls.underlying.edges);
        if (first_sign == 0) first_sign = s;
        if (s != first_sign) cls.orientation_reversing = true;
    }
    return cls;
}

// Canonicity test used by the orderly generator: is the identity labeling of
// this (possibly partial, possibly disconnected) simple graph canonical?
inline bool identity_is_canonical(const LabelledGraph& g) {
    detail::CanonicalSearch search(g);
    return search.identity_is_canonical();
}

} // namespace gcx
