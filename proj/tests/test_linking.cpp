#include "gcx/linking.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace gcx;

TEST_CASE("hopf(1,2,4) links with number +1") {
    ParamLink link = make_hopf(1, 2, 4);
    MCResult r = gauss_linking(link.components[0], link.components[1], 200000, 42, 4);
    INFO("estimate " << r.estimate << " stderr " << r.stderr_value);
    CHECK(std::fabs(r.estimate - 1.0) <= std::max(0.05, 3 * r.stderr_value));
}

TEST_CASE("classical hopf(1,1,3) links with number +1") {
    ParamLink link = make_hopf(1, 1, 3);
    MCResult r = gauss_linking(link.components[0], link.components[1], 200000, 7, 4);
    CHECK(std::fabs(r.estimate - 1.0) <= std::max(0.05, 3 * r.stderr_value));
}

TEST_CASE("the footnoted alternative orientation flips the sign") {
    ParamLink link = make_hopf(1, 2, 4, /*lk_normalized=*/false);
    MCResult r = gauss_linking(link.components[0], link.components[1], 100000, 42, 4);
    CHECK(std::fabs(r.estimate + 1.0) <= std::max(0.05, 3 * r.stderr_value));
}

TEST_CASE("split spheres do not link") {
    ParamLink link = make_split(1, 2, 4);
    MCResult r = gauss_linking(link.components[0], link.components[1], 100000, 11, 4);
    CHECK(std::fabs(r.estimate) <= 0.05);
}

TEST_CASE("borromean pairs are unlinked") {
    // only pairs with complementary dimensions carry a Gauss integral: for
    // B(2,2,1)_4 these are (L1,L3) and (L2,L3)
    ParamLink link = make_borromean(2, 2, 1, 4);
    const std::pair<int, int> pairs[] = {{0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        MCResult r = gauss_linking(link.components[static_cast<std::size_t>(i)],
                                   link.components[static_cast<std::size_t>(j)], 100000, 19, 4);
        INFO("pair " << i << "," << j << " estimate " << r.estimate);
        CHECK(std::fabs(r.estimate) <= 0.05);
    }
    CHECK_THROWS_AS(gauss_linking(link.components[0], link.components[1], 1000, 19), GraphError);

    // every pair of the classical rings has complementary dimensions
    ParamLink rings = make_borromean(1, 1, 1, 3);
    const std::pair<int, int> all[] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : all) {
        MCResult r = gauss_linking(rings.components[static_cast<std::size_t>(i)],
                                   rings.components[static_cast<std::size_t>(j)], 100000, 19, 4);
        INFO("rings pair " << i << "," << j << " estimate " << r.estimate);
        CHECK(std::fabs(r.estimate) <= 0.05);
    }
}

TEST_CASE("seed determinism across thread counts") {
    ParamLink link = make_hopf(1, 2, 4);
    MCResult a = gauss_linking(link.components[0], link.components[1], 50000, 5, 1);
    MCResult b = gauss_linking(link.components[0], link.components[1], 50000, 5, 3);
    MCResult c = gauss_linking(link.components[0], link.components[1], 50000, 5, 8);
    CHECK(a.estimate == b.estimate);
    CHECK(a.estimate == c.estimate);
    CHECK(a.stderr_value == b.stderr_value);
    // different seed, different stream
    MCResult d = gauss_linking(link.components[0], link.components[1], 50000, 6, 1);
    CHECK(a.estimate != d.estimate);
}

TEST_CASE("orientation linearity: flipping one component negates the estimate") {
    ParamLink link = make_hopf(1, 2, 4);
    MCResult base = gauss_linking(link.components[0], link.components[1], 50000, 21, 2);
    ParamLink flipped = make_hopf(1, 2, 4);
    flipped.components[0].flip_orientation();
    MCResult neg = gauss_linking(flipped.components[0], flipped.components[1], 50000, 21, 2);
    CHECK(neg.estimate == -base.estimate);
    CHECK(neg.stderr_value == base.stderr_value);
}

TEST_CASE("estimator consistency: stderr shrinks like inverse root of samples") {
    ParamLink link = make_hopf(1, 2, 4);
    double ratio_sum = 0;
    for (std::uint64_t rep = 0; rep < 10; ++rep) {
        MCResult small = gauss_linking(link.components[0], link.components[1], 20000, 100 + rep, 2);
        MCResult big = gauss_linking(link.components[0], link.components[1], 40000, 200 + rep, 2);
        ratio_sum += big.stderr_value / small.stderr_value;
    }
    double mean_ratio = ratio_sum / 10;
    double expected = 1.0 / std::sqrt(2.0);
    CHECK(mean_ratio > expected * 0.8);
    CHECK(mean_ratio < expected * 1.2);
}

TEST_CASE("antithetic flag keeps the estimator consistent") {
    ParamLink link = make_hopf(1, 2, 4);
    MCResult r = gauss_linking(link.components[0], link.components[1], 100000, 42, 2, true);
    CHECK(std::fabs(r.estimate - 1.0) <= std::max(0.05, 3 * r.stderr_value));
}

TEST_CASE("dimension mismatches and close components are rejected") {
    ParamLink link = make_hopf(1, 2, 4);
    CHECK_THROWS_AS(gauss_linking(link.components[0], link.components[0], 1000, 0), GraphError);

    // a circle copied and shifted by 1e-9 sits below the distance gate
    ParamLink classical = make_hopf(1, 1, 3);
    ParamSphere near_copy =
        ParamSphere::round_sphere(1, 3, {0, 1}, {1.0, 1.0}, {1e-9, 0.0, 0.0}, 1);
    CHECK_THROWS_AS(gauss_linking(classical.components[0], near_copy, 1000, 0), GraphError);
}

TEST_CASE("antipodal symmetry holds exactly for d = 2..5") {
    for (int d = 2; d <= 5; ++d) {
        INFO("d=" << d);
        CHECK(antipodal_symmetry_check(d, 32, 0));
    }
}

TEST_CASE("triple intersection sign of the spanning disks is +1") {
    CHECK(borromean_triple_sign(1, 1, 1, 3) == 1);
    CHECK(borromean_triple_sign(2, 2, 1, 4) == 1);
    CHECK(borromean_triple_sign(3, 3, 1, 5) == 1);
    CHECK(borromean_triple_sign(2, 3, 2, 5) == 1);
    CHECK_THROWS_AS(borromean_triple_sign(1, 1, 3, 3), GraphError);
}

TEST_CASE("permuting two odd-codimension coorientation blocks flips the sign") {
    // blocks for (1,1,1,3) all have size 1: transposing two of them is odd
    CHECK(borromean_triple_sign_ordered(1, 1, 1, 3, {1, 0, 2}) == -1);
    // blocks for (2,2,1,4): sizes 1,1,2; swapping the two size-1 blocks is odd
    CHECK(borromean_triple_sign_ordered(2, 2, 1, 4, {1, 0, 2}) == -1);
    // moving the even-size block past a full odd pair keeps the sign
    CHECK(borromean_triple_sign_ordered(1, 1, 1, 3, {2, 0, 1}) == 1);
}
