#pragma once

#include "gcx/arrow.hpp"
#include "gcx/canonical.hpp"
#include "gcx/homology.hpp"
#include "gcx/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

namespace gcx {

// Arrow graph with the integer linking system of its Y-link. The synthesized
// system puts one Hopf link on every edge with Lk = +1, so
// L^{ij}_{lm} = (-1)^(d-1) exactly when slots (i,l) and (j,m) are the two
// ends of an edge; a raw table constructor is kept for experiments.
struct SurgeryData {
    ArrowGraph arrow;
    int d = 4;
    // key: ((vertex, slot), (vertex, slot)) with the lexicographically
    // smaller pair first
    std::map<std::tuple<int, int, int, int>, int> linking;

    int k() const { return arrow.k(); }

    int linking_entry(int vi, int si, int vj, int sj) const {
        std::tuple<int, int, int, int> key =
            std::make_tuple(vi, si, vj, sj) <= std::make_tuple(vj, sj, vi, si)
                ? std::make_tuple(vi, si, vj, sj)
                : std::make_tuple(vj, sj, vi, si);
        auto it = linking.find(key);
        return it == linking.end() ? 0 : it->second;
    }
};

inline SurgeryData make_surgery_data(const ArrowGraph& arrow, int d = 4) {
    if (d < 4 || d % 2 != 0) throw GraphError("make_surgery_data: d must be even and >= 4");
    arrow.validate();
    SurgeryData data;
    data.arrow = arrow;
    data.d = d;
    int hopf_sign = (d - 1) % 2 == 0 ? 1 : -1; // (-1)^(d-1)
    for (int i = 1; i <= arrow.edges(); ++i) {
        const auto& [tail, head] = arrow.direction[static_cast<std::size_t>(i - 1)];
        int tail_slot = arrow.slot_of(tail, i, false);
        int head_slot = arrow.slot_of(head, i, true);
        std::tuple<int, int, int, int> key =
            std::make_tuple(tail, tail_slot, head, head_slot) <=
                    std::make_tuple(head, head_slot, tail, tail_slot)
                ? std::make_tuple(tail, tail_slot, head, head_slot)
                : std::make_tuple(head, head_slot, tail, tail_slot);
        data.linking[key] = hopf_sign;
    }
    return data;
}

inline SurgeryData make_surgery_data_raw(const ArrowGraph& arrow, int d,
                                         std::map<std::tuple<int, int, int, int>, int> table) {
    if (d < 4 || d % 2 != 0) throw GraphError("make_surgery_data_raw: d must be even and >= 4");
    arrow.validate();
    SurgeryData data;
    data.arrow = arrow;
    data.d = d;
    data.linking = std::move(table);
    return data;
}

// One summand of I per vertex bijection sigma: the product of linking
// entries over the edges of the test graph times the graded sign of
// rearranging the 6k eta factors into per-vertex triples. Odd factors are
// the ones at incoming slots (their b-cycles are 1-dimensional).
struct PairingEvaluation {
    Rational total = 0;
    std::vector<Rational> summands; // nonzero contributions, in bijection order
    std::uint64_t bijections = 0;
};

namespace detail {

inline int inversion_sign(const std::vector<int>& seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) sign = -sign;
    return sign;
}

} // namespace detail

// I(test) for the surgery on data.arrow, computed on a labelled presentation
// of the test graph: sum over vertex bijections of the matched linking
// product with its half-edge sign. Nonzero only when the bijection is a
// graph isomorphism onto the base.
inline PairingEvaluation evaluate_I_labelled(const SurgeryData& data, const LabelledGraph& test) {
    const LabelledGraph& base = data.arrow.base.underlying;
    if (!test.simple()) throw GraphError("evaluate_I: test graph is a zero class (not simple)");
    if (test.degree_k() != base.degree_k() || test.excess() != 0)
        throw GraphError("evaluate_I: bigrade mismatch");

    const int n = base.v;
    // adjacency of base: edge label between vertex pair, 0 if none
    std::vector<std::vector<int>> edge_between(static_cast<std::size_t>(n) + 1,
                                               std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= base.e(); ++i) {
        const Edge& ed = base.edges[static_cast<std::size_t>(i - 1)];
        edge_between[static_cast<std::size_t>(ed.a)][static_cast<std::size_t>(ed.b)] = i;
        edge_between[static_cast<std::size_t>(ed.b)][static_cast<std::size_t>(ed.a)] = i;
    }

    PairingEvaluation out;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        ++out.bijections;
        long long linking_product = 1;
        std::vector<int> odd_tokens; // global ids of incoming slots, in test edge order
        odd_tokens.reserve(test.edges.size());
        bool matched = true;
        for (const Edge& ed : test.edges) {
            int vi = sigma[static_cast<std::size_t>(ed.a - 1)];
            int vj = sigma[static_cast<std::size_t>(ed.b - 1)];
            int f = edge_between[static_cast<std::size_t>(vi)][static_cast<std::size_t>(vj)];
            if (f == 0) {
                matched = false;
                break;
            }
            const auto& [tail, head] = data.arrow.direction[static_cast<std::size_t>(f - 1)];
            int tail_slot = data.arrow.slot_of(tail, f, false);
            int head_slot = data.arrow.slot_of(head, f, true);
            int entry = data.linking_entry(tail, tail_slot, head, head_slot);
            if (entry == 0) {
                matched = false;
                break;
            }
            linking_product *= entry;
            odd_tokens.push_back(3 * (head - 1) + head_slot);
        }
        if (!matched) continue;
        int sign = detail::inversion_sign(odd_tokens);
        Rational contribution(linking_product * sign);
        out.summands.push_back(contribution);
        out.total += contribution;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

inline Rational evaluate_I(const SurgeryData& data, const CanonicalGraph& test) {
    return evaluate_I_labelled(data, test.underlying).total;
}

// Z_k in A_k coordinates: the per-class form of the labelled sum, one term
// I(cls)/|Aut cls| per canonical class. Equals +/-[base] when the base class
// is nonzero and 0 otherwise.
inline std::vector<Rational> z_k(const SurgeryData& data, const AkSpace& space) {
    if (space.k != data.k()) throw GraphError("z_k: degree mismatch between data and A_k space");
    std::vector<Rational> coords(space.dim(), Rational(0));
    for (const CanonicalGraph& cls : space.generators.classes) {
        Rational value = evaluate_I(data, cls);
        if (value == 0) continue;
        GraphVector v{space.k, 0, {}};
        v.add(cls, value / Rational(cls.aut_order));
        std::vector<Rational> reduced = reduce_to_ak(v, space);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += reduced[i];
    }
    return coords;
}

} // namespace gcx
