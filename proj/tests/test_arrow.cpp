#include "gcx/arrow.hpp"
#include "gcx/canonical.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace gcx;

namespace {

CanonicalGraph w4() {
    return canonical_class(parse_graph("v=4; e=(1,2)(1,3)(1,4)(2,3)(2,4)(3,4)"));
}

CanonicalGraph prism() {
    return canonical_class(parse_graph("v=6; e=(1,2)(1,3)(2,3)(4,5)(4,6)(5,6)(1,4)(2,5)(3,6)"));
}

} // namespace

TEST_CASE("orient_arrows on K4 gives in-degree multiset {1,1,2,2}") {
    ArrowGraph a = orient_arrows(w4());
    std::vector<int> in;
    for (int u = 1; u <= 4; ++u) in.push_back(a.in_degree(u));
    std::sort(in.begin(), in.end());
    CHECK(in == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("exhaustive oracle: every valid K4 orientation has the degree constraint") {
    auto all = all_arrow_orientations(w4());
    REQUIRE_FALSE(all.empty());
    for (const ArrowGraph& a : all) {
        std::vector<int> in;
        for (int u = 1; u <= 4; ++u) in.push_back(a.in_degree(u));
        std::sort(in.begin(), in.end());
        CHECK(in == std::vector<int>{1, 1, 2, 2});
    }
    // the deterministic orientation is one of them
    ArrowGraph chosen = orient_arrows(w4());
    bool found = false;
    for (const ArrowGraph& a : all)
        if (a.direction == chosen.direction) found = true;
    CHECK(found);
}

TEST_CASE("type counts are (k, k)") {
    for (const CanonicalGraph& g : {w4(), prism()}) {
        ArrowGraph a = orient_arrows(g);
        int type_one = 0;
        for (int u = 1; u <= a.vertices(); ++u)
            if (a.type_one(u)) ++type_one;
        CHECK(type_one == a.k());
    }
}

TEST_CASE("a valid orientation of the prism exists") {
    CHECK_FALSE(all_arrow_orientations(prism()).empty());
    CHECK_NOTHROW(orient_arrows(prism()));
}

TEST_CASE("slots are compatible with the edge-label orientation") {
    for (const CanonicalGraph& g : {w4(), prism()}) {
        ArrowGraph a = orient_arrows(g);
        CHECK(detail::slot_compatibility_sign(a) == 1);
        for (const ArrowGraph& alt : all_arrow_orientations(g))
            CHECK(detail::slot_compatibility_sign(alt) == 1);
    }
}

TEST_CASE("halfedge_sign grades the permutation of half-edge factors") {
    std::vector<int> identity = {0, 1, 2, 3, 4, 5};
    CHECK(halfedge_sign(identity) == 1);

    // transposing two odd (e_+) factors
    std::vector<int> odd_swap = {2, 1, 0, 3, 4, 5};
    CHECK(halfedge_sign(odd_swap) == -1);

    // moving an even (e_-) factor is free
    std::vector<int> even_move = {1, 0, 2, 3, 4, 5};
    CHECK(halfedge_sign(even_move) == 1);
    std::vector<int> even_cycle = {0, 3, 1, 2, 4, 5};
    CHECK(halfedge_sign(even_cycle) == 1);

    // transposing two whole edge blocks matches an edge-label transposition
    std::vector<int> block_swap = {2, 3, 0, 1, 4, 5};
    CHECK(halfedge_sign(block_swap) == -1);
}

TEST_CASE("validate rejects inconsistent arrow data") {
    ArrowGraph a = orient_arrows(w4());
    ArrowGraph broken = a;
    std::swap(broken.direction[0].first, broken.direction[0].second);
    CHECK_THROWS_AS(broken.validate(), GraphError);

    ArrowGraph missing = a;
    missing.direction.pop_back();
    CHECK_THROWS_AS(missing.validate(), GraphError);
}
