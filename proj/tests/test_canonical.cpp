#include "gcx/canonical.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/graph.hpp"

#include "brute_force.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gcx;

namespace {

const char* kK4 = "v=4; e=(1,2)(1,3)(1,4)(2,3)(2,4)(3,4)";
const char* kK33 = "v=6; e=(1,4)(1,5)(1,6)(2,4)(2,5)(2,6)(3,4)(3,5)(3,6)";
const char* kPrism = "v=6; e=(1,2)(1,3)(2,3)(4,5)(4,6)(5,6)(1,4)(2,5)(3,6)";

} // namespace

TEST_CASE("canonicalize of K4 in sorted order is the identity with sign +1") {
    LabelledGraph g = parse_graph(kK4);
    auto result = canonicalize(g);
    REQUIRE(result.has_value());
    CHECK(result->cls.underlying == g);
    CHECK(result->sign == 1);
    CHECK(result->cls.aut_order == 24);
}

TEST_CASE("one edge-label transposition flips the sign") {
    LabelledGraph g = parse_graph("v=4; e=(1,3)(1,2)(1,4)(2,3)(2,4)(3,4)");
    auto result = canonicalize(g);
    REQUIRE(result.has_value());
    CHECK(result->cls.underlying == parse_graph(kK4));
    CHECK(result->sign == -1);
}

TEST_CASE("theta graph and self-loops are the zero class") {
    CHECK_FALSE(canonicalize(parse_graph("v=2; e=(1,2)(1,2)(1,2)")).has_value());
    LabelledGraph loops{1, {Edge(1, 1), Edge(1, 1)}};
    CHECK_FALSE(canonicalize(loops).has_value());
    // dumbbell: two loops joined by an edge
    LabelledGraph dumbbell{2, {Edge(1, 1), Edge(1, 2), Edge(2, 2)}};
    CHECK_FALSE(canonicalize(dumbbell).has_value());
}

TEST_CASE("K33 and the prism are zero classes (odd automorphisms)") {
    // swapping two vertices of one K33 part transposes three edges;
    // reflecting the prism does the same: both kill the class
    CHECK_FALSE(canonicalize(parse_graph(kK33)).has_value());
    CHECK_FALSE(canonicalize(parse_graph(kPrism)).has_value());
    CHECK(gcx_test::brute_force_automorphisms(parse_graph(kK33)).orientation_reversing);
    CHECK(gcx_test::brute_force_automorphisms(parse_graph(kPrism)).orientation_reversing);
}

TEST_CASE("canonicalize is idempotent") {
    for (const CanonicalGraph& cls : enumerate_basis(4, 0).classes) {
        auto again = canonicalize(cls.underlying);
        REQUIRE(again.has_value());
        CHECK(again->cls.underlying == cls.underlying);
        CHECK(again->sign == 1);
    }
    auto k4 = canonicalize(parse_graph(kK4));
    REQUIRE(k4.has_value());
    CHECK(canonicalize(k4->cls.underlying)->sign == 1);
}

TEST_CASE("automorphism counts match the brute-force permutation oracle") {
    for (const char* text : {kK4, kK33, kPrism}) {
        LabelledGraph g = parse_graph(text);
        AutomorphismInfo fast = automorphisms(g);
        gcx_test::BruteAut slow = gcx_test::brute_force_automorphisms(g);
        INFO(text);
        CHECK(fast.order == slow.order);
        CHECK(fast.orientation_reversing == slow.orientation_reversing);
    }
}

TEST_CASE("expected automorphism orders: K4 24, K33 72, prism 12") {
    CHECK(gcx_test::brute_force_automorphisms(parse_graph(kK4)).order == 24);
    CHECK(gcx_test::brute_force_automorphisms(parse_graph(kK33)).order == 72);
    CHECK(gcx_test::brute_force_automorphisms(parse_graph(kPrism)).order == 12);
}

TEST_CASE("canonical edge list agrees with the all-permutations oracle") {
    for (const char* text : {kK4, kK33, kPrism}) {
        LabelledGraph g = parse_graph(text);
        detail::CanonicalSearch search(g);
        search.run();
        CHECK(search.canonical_edges() == gcx_test::brute_force_canonical_edges(g));
    }
}

TEST_CASE("relabeling consistency: sign tracks the edge permutation parity") {
    std::mt19937 rng(20240817u);
    std::vector<LabelledGraph> samples = {parse_graph(kK4)};
    for (const CanonicalGraph& cls : enumerate_basis(4, 0).classes)
        samples.push_back(cls.underlying);
    for (const LabelledGraph& g : samples) {
        auto base = canonicalize(g);
        REQUIRE(base.has_value());
        for (int trial = 0; trial < 40; ++trial) {
            // random vertex renaming
            std::vector<int> vperm(static_cast<std::size_t>(g.v));
            std::iota(vperm.begin(), vperm.end(), 1);
            std::shuffle(vperm.begin(), vperm.end(), rng);
            // random edge-list shuffle with tracked parity
            std::vector<int> eperm(g.edges.size());
            std::iota(eperm.begin(), eperm.end(), 0);
            std::shuffle(eperm.begin(), eperm.end(), rng);
            LabelledGraph h{g.v, {}};
            for (int idx : eperm) {
                const Edge& ed = g.edges[static_cast<std::size_t>(idx)];
                h.edges.emplace_back(vperm[static_cast<std::size_t>(ed.a - 1)],
                                     vperm[static_cast<std::size_t>(ed.b - 1)]);
            }
            auto moved = canonicalize(h);
            REQUIRE(moved.has_value());
            CHECK(moved->cls.underlying == base->cls.underlying);
            CHECK(moved->sign == base->sign * gcx_test::list_permutation_sign(eperm));
        }
    }
}
