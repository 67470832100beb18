#pragma once

#include "gcx/contraction.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gcx {

// Per-degree ladder of the complex: basis dimensions and differential ranks
// for every excess with at least one vertex. H^l = ker(delta_l) / im(delta_{l-1}).
struct ComplexLadder {
    int k = 0;
    std::vector<std::size_t> dims;  // dim G_(k,l) for l = 0..top
    std::vector<std::size_t> ranks; // rank of delta_l : G_l -> G_{l+1}

    std::size_t dim_cohomology(std::size_t ell) const {
        std::size_t kernel = dims[ell] - ranks[ell];
        std::size_t image = ell == 0 ? 0 : ranks[ell - 1];
        return kernel - image;
    }
};

inline ComplexLadder complex_ladder(int k, int cap_vertices = 14) {
    ComplexLadder ladder;
    ladder.k = k;
    int top = 2 * k - 1; // excess with v = 1
    for (int ell = 0; ell <= top; ++ell) {
        DifferentialMatrix d = delta_matrix(k, ell, cap_vertices);
        ladder.dims.push_back(d.source.dim());
        ladder.ranks.push_back(rank(d.matrix));
    }
    return ladder;
}

inline std::size_t dim_cohomology(int k, int ell, int cap_vertices = 14) {
    if (ell < 0 || 2 * k - ell < 1) return 0;
    DifferentialMatrix d_here = delta_matrix(k, ell, cap_vertices);
    std::size_t kernel = d_here.source.dim() - rank(d_here.matrix);
    std::size_t image = 0;
    if (ell > 0) image = rank(delta_matrix(k, ell - 1, cap_vertices).matrix);
    return kernel - image;
}

// A_k = P_k G_0 / IHX, where the IHX span is the image of delta* from excess
// 1, i.e. the row space of the delta matrix out of excess 0. The quotient
// basis is the set of non-pivot generator classes of a fixed RREF,
// so coordinates are reproducible across runs.
struct AkSpace {
    int k = 0;
    GradedBasis generators;                   // basis of (k, 0)
    std::vector<std::size_t> quotient_basis;  // indices into generators
    RREF ihx;                                 // RREF of delta_matrix(k,0).matrix

    std::size_t dim() const { return quotient_basis.size(); }
};

inline AkSpace ak_space(int k, int cap_vertices = 14) {
    if (k < 1) throw GraphError("ak_space: k must be >= 1");
    AkSpace space;
    space.k = k;
    DifferentialMatrix d = delta_matrix(k, 0, cap_vertices);
    space.generators = d.source;
    space.ihx = rref(d.matrix);
    std::vector<bool> is_pivot(space.generators.dim(), false);
    for (std::size_t p : space.ihx.pivot_cols) is_pivot[p] = true;
    for (std::size_t i = 0; i < space.generators.dim(); ++i)
        if (!is_pivot[i]) space.quotient_basis.push_back(i);
    return space;
}

// Coordinates of [v] in the quotient basis of A_k; zero iff v is an IHX
// combination.
inline std::vector<Rational> reduce_to_ak(const GraphVector& v, const AkSpace& space) {
    if (v.k != space.k || v.ell != 0)
        throw GraphError("reduce_to_ak: vector is not in bigrade (k, 0)");
    std::vector<Rational> x(space.generators.dim(), Rational(0));
    for (const auto& [cls, coeff] : v.terms) {
        long idx = space.generators.find(cls);
        if (idx < 0) throw GraphError("reduce_to_ak: class outside the enumerated basis");
        x[static_cast<std::size_t>(idx)] = coeff;
    }
    for (std::size_t i = 0; i < space.ihx.pivot_cols.size(); ++i) {
        Rational c = x[space.ihx.pivot_cols[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < x.size(); ++j) x[j] -= c * space.ihx.reduced[i][j];
    }
    std::vector<Rational> coords;
    coords.reserve(space.quotient_basis.size());
    for (std::size_t idx : space.quotient_basis) coords.push_back(x[idx]);
    return coords;
}

inline std::size_t dim_ak(int k, int cap_vertices = 14) {
    return ak_space(k, cap_vertices).dim();
}

// Euler characteristic consistency: alternating sums of space dimensions and
// cohomology dimensions agree.
inline bool euler_characteristic_check(int k, int cap_vertices = 14) {
    ComplexLadder ladder = complex_ladder(k, cap_vertices);
    long chi_spaces = 0, chi_cohomology = 0;
    for (std::size_t ell = 0; ell < ladder.dims.size(); ++ell) {
        long sign = ell % 2 == 0 ? 1 : -1;
        chi_spaces += sign * static_cast<long>(ladder.dims[ell]);
        chi_cohomology += sign * static_cast<long>(ladder.dim_cohomology(ell));
    }
    return chi_spaces == chi_cohomology;
}

} // namespace gcx
