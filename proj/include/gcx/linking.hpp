#pragma once

#include "gcx/philox.hpp"
#include "gcx/rational.hpp"
#include "gcx/sphere.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace gcx {

struct MCResult {
    double estimate = 0.0;
    double stderr_value = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string convention;
};

namespace detail {

inline double det_inplace(std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

struct LinkingIntegrand {
    const ParamSphere* a;
    const ParamSphere* b;
    int d;
    double weight; // 4 vol(B^p) vol(B^q) / vol(S^{d-1}) and the fixed signs
    std::atomic<bool>* too_close = nullptr;

    // pullback density of the unit volume form at one chart configuration:
    // det[phi, dphi/dtheta] with phi = (b(y)-a(x))/|b(y)-a(x)|
    double operator()(int chart_a, const std::vector<double>& xa, int chart_b,
                      const std::vector<double>& xb) const {
        std::vector<double> pa, pb;
        a->map(chart_a, xa, pa);
        b->map(chart_b, xb, pb);
        std::vector<double> w(static_cast<std::size_t>(d));
        double norm2 = 0;
        for (int i = 0; i < d; ++i) {
            w[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i)] - pa[static_cast<std::size_t>(i)];
            norm2 += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
        }
        double norm = std::sqrt(norm2);
        if (norm < 1e-6) {
            if (too_close) too_close->store(true, std::memory_order_relaxed);
            return 0.0;
        }
        std::vector<std::vector<double>> ja, jb;
        a->partials(chart_a, xa, ja);
        b->partials(chart_b, xb, jb);

        // columns of the d x d matrix: phi itself, then the projected and
        // normalized tangent images (-da for the first factor, +db for the
        // second, product orientation o(S^p) ^ o(S^q))
        std::vector<std::vector<double>> cols;
        cols.reserve(static_cast<std::size_t>(d));
        std::vector<double> phi(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) phi[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / norm;
        cols.push_back(phi);
        auto push_projected = [&](const std::vector<double>& v, double sign) {
            double dot = 0;
            for (int i = 0; i < d; ++i) dot += phi[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
            std::vector<double> u(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                u[static_cast<std::size_t>(i)] =
                    sign * (v[static_cast<std::size_t>(i)] - dot * phi[static_cast<std::size_t>(i)]) / norm;
            cols.push_back(std::move(u));
        };
        for (const auto& col : ja) push_projected(col, -1.0);
        for (const auto& col : jb) push_projected(col, +1.0);

        // determinant over rows: transpose is free for a determinant
        std::vector<std::vector<double>> m(static_cast<std::size_t>(d),
                                           std::vector<double>(static_cast<std::size_t>(d)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        double density = det_inplace(m);
        int chart_signs = a->chart_sign(chart_a) * b->chart_sign(chart_b) *
                          a->orientation_sign() * b->orientation_sign();
        return weight * chart_signs * density;
    }
};

} // namespace detail

// minimum distance over sampled point pairs; independent pairs plus
// parameter-correlated pairs, which catch near-coincident parametrizations
// that independent sampling essentially never does
inline double sampled_min_distance(const ParamSphere& a, const ParamSphere& b, std::uint64_t seed,
                                   int pairs = 4096) {
    double best = 1e300;
    std::vector<double> xa, xb, pa, pb;
    auto account = [&](const std::vector<double>& u, const std::vector<double>& v) {
        double dist2 = 0;
        for (std::size_t j = 0; j < u.size(); ++j) dist2 += (u[j] - v[j]) * (u[j] - v[j]);
        best = std::min(best, std::sqrt(dist2));
    };
    for (int i = 0; i < pairs; ++i) {
        CounterRng rng(seed, /*stream=*/1, static_cast<std::uint64_t>(i));
        int ca = 0, cb = 0;
        a.sample_chart_point(rng, ca, xa);
        b.sample_chart_point(rng, cb, xb);
        a.map(ca, xa, pa);
        b.map(cb, xb, pb);
        account(pa, pb);
        if (a.dim() == b.dim()) {
            // same parameters on both components
            b.map(ca, xa, pb);
            account(pa, pb);
        }
    }
    return best;
}

// Monte Carlo estimate of Lk(a,b) = int phi* Vol_{S^{d-1}} over S^p x S^q.
// Chunked counter-based sampling: the estimate is a deterministic function
// of (seed, samples) alone, independent of the thread count. Antithetic
// pairing (odd samples take the antipodal configuration of the previous
// draw) sits behind a flag.
inline MCResult gauss_linking(const ParamSphere& a, const ParamSphere& b, std::uint64_t samples,
                              std::uint64_t seed, int threads = 1, bool antithetic = false) {
    if (a.ambient() != b.ambient()) throw GraphError("gauss_linking: ambient dimensions differ");
    const int d = a.ambient();
    if (a.dim() + b.dim() != d - 1) throw GraphError("gauss_linking: need dim a + dim b = d-1");
    if (samples == 0) throw GraphError("gauss_linking: need at least one sample");
    if (sampled_min_distance(a, b, seed) < 1e-6)
        throw GraphError("gauss_linking: components too close");

    std::atomic<bool> too_close{false};
    detail::LinkingIntegrand f{&a, &b, d,
                               4.0 * ball_volume(a.dim()) * ball_volume(b.dim()) /
                                   sphere_volume(d - 1),
                               &too_close};

    // with antithetic pairing each draw contributes the mean over the
    // configuration and its antipode, and the variance is taken over draws
    const std::uint64_t draws = antithetic ? (samples + 1) / 2 : samples;
    const std::uint64_t chunk_size = 1 << 14;
    const std::uint64_t chunk_count = (draws + chunk_size - 1) / chunk_size;
    std::vector<double> sums(chunk_count, 0.0), squares(chunk_count, 0.0);

    auto run_chunk = [&](std::uint64_t c) {
        std::uint64_t begin = c * chunk_size;
        std::uint64_t end = std::min(draws, begin + chunk_size);
        double sum = 0.0, sq = 0.0;
        std::vector<double> xa, xb;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, /*stream=*/0, i);
            int ca = 0, cb = 0;
            a.sample_chart_point(rng, ca, xa);
            b.sample_chart_point(rng, cb, xb);
            double value = f(ca, xa, cb, xb);
            if (antithetic) {
                for (double& x : xa) x = -x;
                for (double& x : xb) x = -x;
                value = 0.5 * (value + f(1 - ca, xa, 1 - cb, xb));
            }
            sum += value;
            sq += value * value;
        }
        sums[c] = sum;
        squares[c] = sq;
    };

    if (threads <= 1) {
        for (std::uint64_t c = 0; c < chunk_count; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t per = (chunk_count + static_cast<std::uint64_t>(threads) - 1) /
                            static_cast<std::uint64_t>(threads);
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = static_cast<std::uint64_t>(t) * per;
            std::uint64_t hi = std::min(chunk_count, lo + per);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi]() {
                for (std::uint64_t c = lo; c < hi; ++c) run_chunk(c);
            });
        }
        for (auto& th : pool) th.join();
    }

    if (too_close.load()) throw GraphError("gauss_linking: components too close");

    double total = 0.0, total_sq = 0.0;
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
        total += sums[c];
        total_sq += squares[c];
    }
    double n = static_cast<double>(draws);
    double mean = total / n;
    double variance = draws > 1 ? (total_sq - n * mean * mean) / (n - 1.0) : 0.0;
    if (variance < 0) variance = 0;

    MCResult result;
    result.estimate = mean;
    result.stderr_value = std::sqrt(variance / n);
    result.samples = samples;
    result.seed = seed;
    return result;
}

// Exact determinant identity behind iota* Vol = (-1)^d Vol for the antipodal
// map: det[-x, -v_1, ..., -v_{d-1}] = (-1)^d det[x, v_1, ..., v_{d-1}] on
// rational frames with |x| = 1 exactly (x from a rational stereographic
// point). No tolerance anywhere.
inline bool antipodal_symmetry_check(int d, int trials = 32, std::uint64_t seed = 0) {
    if (d < 2) throw GraphError("antipodal_symmetry_check: need d >= 2");
    auto det_rational = [](std::vector<std::vector<Rational>> m) {
        const std::size_t n = m.size();
        Rational det(1);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) return Rational(0);
            if (piv != col) {
                std::swap(m[piv], m[col]);
                det = -det;
            }
            det *= m[col][col];
            for (std::size_t r = col + 1; r < n; ++r) {
                if (m[r][col] == 0) continue;
                Rational f = m[r][col] / m[col][col];
                for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            }
        }
        return det;
    };

    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, /*stream=*/2, static_cast<std::uint64_t>(t));
        auto small_int = [&rng]() { return Rational(static_cast<int>(rng.next_u32() % 19) - 9); };
        // rational point on the unit sphere via stereographic coordinates
        std::vector<Rational> xi(static_cast<std::size_t>(d - 1));
        for (auto& c : xi) c = small_int() / Rational(4);
        Rational r2(0);
        for (const auto& c : xi) r2 += c * c;
        std::vector<Rational> x(static_cast<std::size_t>(d));
        for (int i = 0; i < d - 1; ++i) x[static_cast<std::size_t>(i)] = 2 * xi[static_cast<std::size_t>(i)] / (1 + r2);
        x[static_cast<std::size_t>(d - 1)] = (r2 - 1) / (1 + r2);

        std::vector<std::vector<Rational>> frame(static_cast<std::size_t>(d),
                                                 std::vector<Rational>(static_cast<std::size_t>(d)));
        for (int i = 0; i < d; ++i) frame[static_cast<std::size_t>(i)][0] = x[static_cast<std::size_t>(i)];
        for (int j = 1; j < d; ++j)
            for (int i = 0; i < d; ++i) frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = small_int();
        std::vector<std::vector<Rational>> negated = frame;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                negated[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    -frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

        Rational lhs = det_rational(negated);
        Rational rhs = det_rational(frame);
        if (d % 2 != 0) rhs = -rhs;
        if (lhs != rhs) return false;
    }
    return true;
}

// Sign of the triple intersection of the standard Borromean spanning disks
// at the origin: the determinant of the concatenated coorientation frames
// (dx-block, dy-block, dz-block as columns, in the given disk order)
// against the standard orientation of R^d. Exact integer arithmetic.
inline int borromean_triple_sign_ordered(int p, int q, int r, int d,
                                         const std::array<int, 3>& order) {
    if (!(0 < p && p < d - 1 && 0 < q && q < d - 1 && 0 < r && r < d - 1 && p + q + r == 2 * d - 3))
        throw GraphError("borromean_triple_sign: parameter constraints violated");
    const int sizes[3] = {d - p - 1, d - q - 1, d - r - 1};
    const int offsets[3] = {0, sizes[0], sizes[0] + sizes[1]};

    // columns: for each disk in `order`, the unit vectors of its block
    std::vector<std::vector<long>> m(static_cast<std::size_t>(d),
                                     std::vector<long>(static_cast<std::size_t>(d), 0));
    int col = 0;
    for (int which : order) {
        for (int i = 0; i < sizes[which]; ++i) {
            m[static_cast<std::size_t>(offsets[which] + i)][static_cast<std::size_t>(col)] = 1;
            ++col;
        }
    }
    // integer determinant by Bareiss
    long prev = 1;
    long det = 1;
    std::size_t n = static_cast<std::size_t>(d);
    std::size_t rank_rows = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = rank_rows;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != rank_rows) {
            std::swap(m[piv], m[rank_rows]);
            det = -det;
        }
        for (std::size_t rr = rank_rows + 1; rr < n; ++rr) {
            for (std::size_t cc = c + 1; cc < n; ++cc)
                m[rr][cc] = (m[rank_rows][c] * m[rr][cc] - m[rr][c] * m[rank_rows][cc]) / prev;
            m[rr][c] = 0;
        }
        prev = m[rank_rows][c];
        ++rank_rows;
    }
    det *= prev > 0 ? 1 : -1;
    return det > 0 ? 1 : -1;
}

inline int borromean_triple_sign(int p, int q, int r, int d) {
    return borromean_triple_sign_ordered(p, q, r, d, {0, 1, 2});
}

} // namespace gcx
