#pragma once

#include "gcx/canonical.hpp"
#include "gcx/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace gcx {

class ResourceLimitError : public GraphError {
public:
    explicit ResourceLimitError(const std::string& what) : GraphError(what) {}
};

// Basis of the bigrade (k, ell): canonical classes with v = 2k-ell vertices,
// e = 3k-ell edges, simple, connected, min valence 3, and no
// orientation-reversing automorphism, in lexicographic order of canonical
// edge lists.
struct GradedBasis {
    int k = 0;
    int ell = 0;
    std::vector<CanonicalGraph> classes;

    std::size_t dim() const { return classes.size(); }

    // index of a canonical class, or -1
    long find(const CanonicalGraph& cls) const {
        auto it = std::lower_bound(classes.begin(), classes.end(), cls);
        if (it != classes.end() && *it == cls) return it - classes.begin();
        return -1;
    }
};

namespace detail {

// Orderly generation: grow sorted edge lists one lex-increasing edge at a
// time, keeping only partial graphs whose identity labeling is canonical.
// Removing the lex-last edge of a canonical list leaves a canonical list, so
// every isomorphism class is reached exactly once.
class OrderlyGenerator {
public:
    OrderlyGenerator(int v, int e, int max_degree) : v_(v), e_(e), max_degree_(max_degree) {
        deg_.assign(static_cast<std::size_t>(v_) + 1, 0);
        cur_.v = v_;
    }

    std::vector<CanonicalGraph> generate() {
        out_.clear();
        if (v_ >= 2 && e_ >= 1 && e_ <= v_ * (v_ - 1) / 2) extend();
        return std::move(out_);
    }

private:
    void extend() {
        if (static_cast<int>(cur_.edges.size()) == e_) {
            finish();
            return;
        }
        int first_a = cur_.edges.empty() ? 1 : cur_.edges.back().a;
        int remaining = e_ - static_cast<int>(cur_.edges.size());
        for (int a = first_a; a <= v_ - 1; ++a) {
            // every future edge has both endpoints >= a
            if (!low_vertices_saturated(a)) break;
            if (!components_mergeable(a)) break;
            int first_b = (!cur_.edges.empty() && a == cur_.edges.back().a)
                              ? cur_.edges.back().b + 1
                              : a + 1;
            if (deg_[static_cast<std::size_t>(a)] >= max_degree_) continue;
            for (int b = first_b; b <= v_; ++b) {
                if (deg_[static_cast<std::size_t>(b)] >= max_degree_) continue;
                push(a, b);
                if (deficit() <= 2 * (remaining - 1) && identity_is_canonical(cur_)) extend();
                pop(a, b);
            }
        }
    }

    void finish() {
        for (int u = 1; u <= v_; ++u)
            if (deg_[static_cast<std::size_t>(u)] < 3) return;
        if (!cur_.connected()) return;
        AutomorphismInfo info = automorphisms(cur_);
        if (info.orientation_reversing) return;
        out_.push_back(CanonicalGraph{cur_, info.order, false});
    }

    void push(int a, int b) {
        cur_.edges.emplace_back(a, b);
        ++deg_[static_cast<std::size_t>(a)];
        ++deg_[static_cast<std::size_t>(b)];
    }

    void pop(int a, int b) {
        cur_.edges.pop_back();
        --deg_[static_cast<std::size_t>(a)];
        --deg_[static_cast<std::size_t>(b)];
    }

    int deficit() const {
        int d = 0;
        for (int u = 1; u <= v_; ++u) d += std::max(0, 3 - deg_[static_cast<std::size_t>(u)]);
        return d;
    }

    bool low_vertices_saturated(int a) const {
        for (int u = 1; u < a; ++u)
            if (deg_[static_cast<std::size_t>(u)] < 3) return false;
        return true;
    }

    // A component whose vertices all lie below a can never reach the rest.
    bool components_mergeable(int a) const {
        std::vector<int> parent(static_cast<std::size_t>(v_) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const Edge& ed : cur_.edges) {
            int ra = find(ed.a), rb = find(ed.b);
            if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
        }
        std::vector<int> comp_max(static_cast<std::size_t>(v_) + 1, 0);
        int touched = 0;
        std::vector<int> roots;
        for (int u = 1; u <= v_; ++u) {
            if (deg_[static_cast<std::size_t>(u)] == 0) continue;
            ++touched;
            int r = find(u);
            if (comp_max[static_cast<std::size_t>(r)] == 0) roots.push_back(r);
            comp_max[static_cast<std::size_t>(r)] =
                std::max(comp_max[static_cast<std::size_t>(r)], u);
        }
        for (int r : roots) {
            if (comp_max[static_cast<std::size_t>(r)] >= a) continue;
            // frozen component: only acceptable if it already is the whole graph
            if (touched < v_ || roots.size() > 1) return false;
        }
        return true;
    }

    int v_;
    int e_;
    int max_degree_;
    LabelledGraph cur_{0, {}};
    std::vector<int> deg_;
    std::vector<CanonicalGraph> out_;
};

} // namespace detail

inline GradedBasis enumerate_basis(int k, int ell, int cap_vertices = 14) {
    if (k < 1 || ell < 0 || 2 * k - ell < 1)
        throw GraphError("enumerate_basis: need k >= 1, ell >= 0, 2k-ell >= 1");
    int v = 2 * k - ell;
    int e = 3 * k - ell;
    if (v > cap_vertices)
        throw ResourceLimitError("enumerate_basis: vertex count " + std::to_string(v) +
                                 " exceeds cap " + std::to_string(cap_vertices));
    GradedBasis basis;
    basis.k = k;
    basis.ell = ell;
    detail::OrderlyGenerator gen(v, e, 3 + ell);
    basis.classes = gen.generate();
    std::sort(basis.classes.begin(), basis.classes.end());
    return basis;
}

} // namespace gcx
