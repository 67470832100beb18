#include "gcx/canonical.hpp"
#include "gcx/enumerate.hpp"

#include "brute_force.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>

using namespace gcx;

namespace {

// class count with the orientation-reversing filter, from the naive
// generator; dedupe and the filter use the all-permutations oracle
std::set<std::vector<Edge>> brute_force_classes(int v, int e) {
    std::set<std::vector<Edge>> classes;
    for (const LabelledGraph& g : gcx_test::brute_force_graphs(v, e)) {
        if (gcx_test::brute_force_automorphisms(g).orientation_reversing) continue;
        classes.insert(gcx_test::brute_force_canonical_edges(g));
    }
    return classes;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

} // namespace

TEST_CASE("basis (2,0) is exactly K4") {
    GradedBasis basis = enumerate_basis(2, 0);
    REQUIRE(basis.dim() == 1);
    CHECK(basis.classes[0].underlying ==
          parse_graph("v=4; e=(1,2)(1,3)(1,4)(2,3)(2,4)(3,4)"));
    CHECK(basis.classes[0].aut_order == 24);
}

TEST_CASE("basis (2,1) and the k=1 bigrades are empty") {
    CHECK(enumerate_basis(2, 1).dim() == 0); // v=3, e=5 forces parallel edges
    CHECK(enumerate_basis(1, 0).dim() == 0); // theta and dumbbell are zero classes
    CHECK(enumerate_basis(1, 1).dim() == 0);
}

TEST_CASE("enumerate_basis enforces the vertex cap") {
    CHECK_THROWS_AS(enumerate_basis(8, 0, 14), ResourceLimitError);
    CHECK_NOTHROW(enumerate_basis(2, 0, 4));
}

TEST_CASE("deterministic lexicographic order") {
    GradedBasis basis = enumerate_basis(3, 0);
    for (std::size_t i = 1; i < basis.dim(); ++i)
        CHECK(basis.classes[i - 1] < basis.classes[i]);
    GradedBasis again = enumerate_basis(3, 0);
    CHECK(again.classes == basis.classes);
}

TEST_CASE("counts match the exhaustive generator up to 7 vertices") {
    // (k, ell) pairs with v = 2k-ell <= 7
    const std::pair<int, int> bigrades[] = {{2, 0}, {2, 1}, {3, 0}, {3, 1},
                                            {3, 2}, {3, 3}, {4, 1}, {4, 2},
                                            {4, 3}, {5, 3}, {5, 4}};
    for (auto [k, ell] : bigrades) {
        int v = 2 * k - ell;
        int e = 3 * k - ell;
        auto expected = brute_force_classes(v, e);
        GradedBasis basis = enumerate_basis(k, ell);
        INFO("k=" << k << " ell=" << ell << " v=" << v << " e=" << e);
        REQUIRE(basis.dim() == expected.size());
        for (const CanonicalGraph& cls : basis.classes)
            CHECK(expected.count(cls.underlying.edges) == 1);
    }
}

TEST_CASE("cubic counts at 8 vertices: 5 classes before orientation filtering") {
    // independent generation; dedupe via the library canonical form
    std::set<std::vector<Edge>> all_classes;
    std::set<std::vector<Edge>> surviving;
    for (const LabelledGraph& g : gcx_test::brute_force_graphs(8, 12)) {
        auto info = automorphisms(g);
        detail::CanonicalSearch search(g);
        search.run();
        auto canon = search.canonical_edges();
        all_classes.insert(canon);
        if (!info.orientation_reversing) surviving.insert(canon);
    }
    CHECK(all_classes.size() == 5);

    GradedBasis basis = enumerate_basis(4, 0);
    REQUIRE(basis.dim() == surviving.size());
    for (const CanonicalGraph& cls : basis.classes)
        CHECK(surviving.count(cls.underlying.edges) == 1);
}

TEST_CASE("orbit counting: labeled copies equal (2k)!/|Aut| for k <= 3") {
    for (int k : {2, 3}) {
        int v = 2 * k;
        int e = 3 * k;
        auto labeled = gcx_test::brute_force_graphs(v, e);
        for (const CanonicalGraph& cls : enumerate_basis(k, 0).classes) {
            std::uint64_t copies = 0;
            for (const LabelledGraph& g : labeled)
                if (gcx_test::brute_force_canonical_edges(g) == cls.underlying.edges) ++copies;
            INFO(cls.underlying.format());
            CHECK(copies == factorial(v) / cls.aut_order);
        }
    }
}
