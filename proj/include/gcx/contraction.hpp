#pragma once

#include "gcx/canonical.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/graph.hpp"
#include "gcx/rational.hpp"
#include "gcx/sparse_matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace gcx {

// Formal rational combination of canonical classes in one bigrade.
struct GraphVector {
    int k = 0;
    int ell = 0;
    std::map<CanonicalGraph, Rational> terms;

    void add(const CanonicalGraph& cls, const Rational& coeff) {
        auto it = terms.find(cls);
        if (it == terms.end()) {
            if (coeff != 0) terms[cls] = coeff;
            return;
        }
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }

    bool zero() const { return terms.empty(); }

    friend bool operator==(const GraphVector& x, const GraphVector& y) {
        return x.k == y.k && x.ell == y.ell && x.terms == y.terms;
    }
};

// The contracted graph Gamma/i: endpoints
// j0 < j1 merge into j0, vertex labels > j1 shift down by 1, edge labels > i
// shift down by 1. The sign (-1)^(i-1) moves edge i to the front of the
// wedge (i ^ o[i] = o). Edges parallel to i become self-loops and are kept;
// they die at canonicalization, not here. Returns nullopt on a self-loop.
inline std::optional<std::pair<LabelledGraph, int>> contract_edge(const LabelledGraph& g,
                                                                  int edge_label) {
    if (edge_label < 1 || edge_label > g.e()) throw GraphError("contract_edge: edge label out of range");
    const Edge target = g.edges[static_cast<std::size_t>(edge_label - 1)];
    if (target.loop()) return std::nullopt;
    const int j0 = target.a, j1 = target.b;

    auto relabel = [j0, j1](int u) {
        if (u == j1) return j0;
        return u > j1 ? u - 1 : u;
    };

    LabelledGraph out;
    out.v = g.v - 1;
    out.edges.reserve(g.edges.size() - 1);
    for (int i = 1; i <= g.e(); ++i) {
        if (i == edge_label) continue;
        const Edge& ed = g.edges[static_cast<std::size_t>(i - 1)];
        out.edges.emplace_back(relabel(ed.a), relabel(ed.b));
    }
    int sign = (edge_label - 1) % 2 == 0 ? 1 : -1;
    return std::make_pair(std::move(out), sign);
}

// delta(Gamma, o) = sum_i (Gamma/i, o[i]), reduced to canonical classes.
inline GraphVector delta(const CanonicalGraph& g) {
    GraphVector out;
    out.k = g.underlying.degree_k();
    out.ell = g.underlying.excess() + 1;
    for (int i = 1; i <= g.underlying.e(); ++i) {
        auto contracted = contract_edge(g.underlying, i);
        if (!contracted) continue;
        auto reduced = canonicalize(contracted->first);
        if (!reduced) continue;
        out.add(reduced->cls, Rational(contracted->second * reduced->sign));
    }
    return out;
}

// delta extended linearly.
inline GraphVector delta(const GraphVector& v) {
    GraphVector out;
    out.k = v.k;
    out.ell = v.ell + 1;
    for (const auto& [cls, coeff] : v.terms) {
        GraphVector d = delta(cls);
        for (const auto& [c2, q2] : d.terms) out.add(c2, coeff * q2);
    }
    return out;
}

// Matrix of delta: G_(k,ell) -> G_(k,ell+1) in the deterministic basis
// orders. Columns are indexed by the source basis; delta* is the transpose.
struct DifferentialMatrix {
    int k = 0;
    int ell = 0;
    GradedBasis source; // (k, ell)
    GradedBasis target; // (k, ell+1)
    SparseRationalMatrix matrix;
};

inline DifferentialMatrix delta_matrix(int k, int ell, int cap_vertices = 14) {
    DifferentialMatrix out;
    out.k = k;
    out.ell = ell;
    out.source = enumerate_basis(k, ell, cap_vertices);
    out.target = (2 * k - (ell + 1) >= 1) ? enumerate_basis(k, ell + 1, cap_vertices)
                                          : GradedBasis{k, ell + 1, {}};
    out.matrix = SparseRationalMatrix(out.target.dim(), out.source.dim());
    for (std::size_t col = 0; col < out.source.dim(); ++col) {
        GraphVector d = delta(out.source.classes[col]);
        for (const auto& [cls, coeff] : d.terms) {
            long row = out.target.find(cls);
            if (row < 0) throw GraphError("delta_matrix: contraction left the enumerated basis");
            out.matrix.add(static_cast<std::size_t>(row), col, coeff);
        }
    }
    return out;
}

} // namespace gcx
