#include "gcx/philox.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <vector>

using namespace gcx;

TEST_CASE("philox blocks are deterministic and sample-independent") {
    auto b1 = philox::block(42, 0, 7, 0);
    auto b2 = philox::block(42, 0, 7, 0);
    CHECK(b1 == b2);
    CHECK(philox::block(42, 0, 8, 0) != b1);
    CHECK(philox::block(43, 0, 7, 0) != b1);
    CHECK(philox::block(42, 1, 7, 0) != b1);
    CHECK(philox::block(42, 0, 7, 1) != b1);
}

TEST_CASE("per-sample streams do not collide on consecutive samples") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 4096; ++i) {
        CounterRng rng(5, 0, i);
        seen.insert(rng.next_u64());
    }
    CHECK(seen.size() == 4096);
}

TEST_CASE("unit doubles live in (0,1] and look uniform") {
    CounterRng rng(987, 0, 0);
    double sum = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double u = rng.next_unit();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
        sum += u;
    }
    CHECK(std::fabs(sum / n - 0.5) < 0.01);
}

TEST_CASE("gaussian moments are sane") {
    CounterRng rng(123, 0, 0);
    double sum = 0, sumsq = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double g = rng.next_gaussian();
        sum += g;
        sumsq += g * g;
    }
    CHECK(std::fabs(sum / n) < 0.02);
    CHECK(std::fabs(sumsq / n - 1.0) < 0.03);
}

TEST_CASE("restarting a sample stream replays the same values") {
    CounterRng one(9, 3, 17);
    std::vector<std::uint32_t> first;
    for (int i = 0; i < 13; ++i) first.push_back(one.next_u32());
    CounterRng two(9, 3, 17);
    for (int i = 0; i < 13; ++i) CHECK(two.next_u32() == first[static_cast<std::size_t>(i)]);
}
