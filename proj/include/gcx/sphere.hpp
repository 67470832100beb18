#pragma once

#include "gcx/graph.hpp" // GraphError
#include "gcx/philox.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gcx {

// Smoothly parametrized p-sphere in R^d, covered by two stereographic-style
// charts over the closed unit ball B^p: chart 0 covers the lower hemisphere
// (projection from the north pole), chart 1 the upper one. The two domains
// overlap only on the equator, which has measure zero, and each chart's
// parameter volume is exactly vol(B^p).
//
// Built-in spheres are affine images x -> center + A s(xi) of the round unit
// sphere, with A given by an increasing ambient axis list and positive
// per-axis scales, so partials are analytic. Custom maps fall back to
// central finite differences with step 1e-5.
class ParamSphere {
public:
    using CustomMap = std::function<void(int chart, const std::vector<double>& xi,
                                         std::vector<double>& out)>;

    static ParamSphere round_sphere(int p, int d, std::vector<int> axes,
                                    std::vector<double> scales, std::vector<double> center,
                                    int orientation_sign) {
        ParamSphere s;
        s.p_ = p;
        s.d_ = d;
        s.axes_ = std::move(axes);
        s.scales_ = std::move(scales);
        s.center_ = std::move(center);
        s.orientation_sign_ = orientation_sign;
        if (static_cast<int>(s.axes_.size()) != p + 1 || s.scales_.size() != s.axes_.size())
            throw GraphError("ParamSphere: need p+1 axes and scales");
        for (std::size_t i = 1; i < s.axes_.size(); ++i)
            if (s.axes_[i] <= s.axes_[i - 1])
                throw GraphError("ParamSphere: axis list must be increasing");
        if (static_cast<int>(s.center_.size()) != d) throw GraphError("ParamSphere: center size");
        return s;
    }

    static ParamSphere custom(int p, int d, CustomMap map, int orientation_sign = 1) {
        ParamSphere s;
        s.p_ = p;
        s.d_ = d;
        s.custom_ = std::move(map);
        s.orientation_sign_ = orientation_sign;
        return s;
    }

    int dim() const { return p_; }
    int ambient() const { return d_; }
    int orientation_sign() const { return orientation_sign_; }
    void flip_orientation() { orientation_sign_ = -orientation_sign_; }

    // orientation of the chart frame relative to the standard
    // (outward-normal-first boundary-of-ball) orientation of the sphere
    int chart_sign(int chart) const {
        return (chart == 0 ? (p_ + 1) : p_) % 2 == 0 ? 1 : -1;
    }

    // unit sphere point for chart coordinates xi in B^p
    void unit_map(int chart, const std::vector<double>& xi, std::vector<double>& s) const {
        double r2 = 0;
        for (double x : xi) r2 += x * x;
        double denom = 1.0 + r2;
        s.assign(static_cast<std::size_t>(p_) + 1, 0.0);
        for (int i = 0; i < p_; ++i) s[static_cast<std::size_t>(i)] = 2.0 * xi[static_cast<std::size_t>(i)] / denom;
        s[static_cast<std::size_t>(p_)] = (chart == 0 ? (r2 - 1.0) : (1.0 - r2)) / denom;
    }

    void map(int chart, const std::vector<double>& xi, std::vector<double>& out) const {
        if (custom_) {
            custom_(chart, xi, out);
            return;
        }
        std::vector<double> s;
        unit_map(chart, xi, s);
        out = center_;
        for (int j = 0; j <= p_; ++j)
            out[static_cast<std::size_t>(axes_[static_cast<std::size_t>(j)])] +=
                scales_[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(j)];
    }

    // columns[i] = d(map)/d(xi_i), each a d-vector
    void partials(int chart, const std::vector<double>& xi,
                  std::vector<std::vector<double>>& columns) const {
        columns.assign(static_cast<std::size_t>(p_), std::vector<double>(d_, 0.0));
        if (custom_) {
            const double h = 1e-5;
            std::vector<double> plus, minus, shifted;
            for (int i = 0; i < p_; ++i) {
                shifted = xi;
                shifted[static_cast<std::size_t>(i)] += h;
                custom_(chart, shifted, plus);
                shifted[static_cast<std::size_t>(i)] -= 2 * h;
                custom_(chart, shifted, minus);
                for (int j = 0; j < d_; ++j)
                    columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        (plus[static_cast<std::size_t>(j)] - minus[static_cast<std::size_t>(j)]) /
                        (2 * h);
            }
            return;
        }
        double r2 = 0;
        for (double x : xi) r2 += x * x;
        double denom = 1.0 + r2;
        double denom2 = denom * denom;
        for (int i = 0; i < p_; ++i) {
            // d s_j / d xi_i for the unit sphere
            for (int j = 0; j < p_; ++j) {
                double val = -4.0 * xi[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>(j)] / denom2;
                if (i == j) val += 2.0 / denom;
                columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                    axes_[static_cast<std::size_t>(j)])] = scales_[static_cast<std::size_t>(j)] * val;
            }
            double dlast = (chart == 0 ? 4.0 : -4.0) * xi[static_cast<std::size_t>(i)] / denom2;
            columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                axes_[static_cast<std::size_t>(p_)])] = scales_[static_cast<std::size_t>(p_)] * dlast;
        }
    }

    // uniform point of the chart ball from a per-sample counter stream
    void sample_chart_point(CounterRng& rng, int& chart, std::vector<double>& xi) const {
        chart = (rng.next_u32() & 1u) ? 1 : 0;
        xi.assign(static_cast<std::size_t>(p_), 0.0);
        double norm2 = 0;
        for (int i = 0; i < p_; ++i) {
            xi[static_cast<std::size_t>(i)] = rng.next_gaussian();
            norm2 += xi[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>(i)];
        }
        double norm = std::sqrt(norm2);
        double radius = std::pow(rng.next_unit(), 1.0 / p_);
        if (norm == 0) norm = 1; // measure-zero guard
        for (double& x : xi) x = x / norm * radius;
    }

private:
    int p_ = 1;
    int d_ = 3;
    std::vector<int> axes_;
    std::vector<double> scales_;
    std::vector<double> center_;
    int orientation_sign_ = 1;
    CustomMap custom_;
};

struct ParamLink {
    std::vector<ParamSphere> components;
    std::string convention;
};

inline double ball_volume(int n) {
    return std::pow(3.14159265358979323846, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

inline double sphere_volume(int dim_minus_one) {
    int d = dim_minus_one + 1;
    return 2.0 * std::pow(3.14159265358979323846, d / 2.0) / std::tgamma(d / 2.0);
}

// H(p,q)_d in R^d = R_t x R^p_u x R^q_v: the S^p component is the unit
// sphere of the (t,u) plane, the S^q one is the unit sphere of the (t,v)
// plane centered at t = 1. The S^p side carries the boundary-of-ball
// orientation (at (1,0,...,0) this is du_1 for p = 1); the S^q side is
// oriented so that Lk = +1, which for (p,q) = (1,d-2) reproduces the
// explicit dv_1^...^dv_{d-2} frame at the origin, the choice opposite to
// the one induced from the standard orientation of the tv-plane. Passing
// lk_normalized = false selects that induced alternative instead.
inline ParamLink make_hopf(int p, int q, int d, bool lk_normalized = true) {
    if (!(0 < p && p < d - 1 && 0 < q && q < d - 1 && p + q == d - 1))
        throw GraphError("make_hopf: need 0 < p,q < d-1 and p+q = d-1");
    std::vector<int> axes_a = {0};
    for (int i = 1; i <= p; ++i) axes_a.push_back(i);
    std::vector<int> axes_b = {0};
    for (int i = p + 1; i <= p + q; ++i) axes_b.push_back(i);
    std::vector<double> center_a(static_cast<std::size_t>(d), 0.0);
    std::vector<double> center_b(static_cast<std::size_t>(d), 0.0);
    center_b[0] = 1.0;

    int sign_b = (q + d - 1) % 2 == 0 ? 1 : -1;
    if (!lk_normalized) sign_b = -sign_b;

    ParamLink link;
    link.components.push_back(ParamSphere::round_sphere(
        p, d, axes_a, std::vector<double>(static_cast<std::size_t>(p) + 1, 1.0), center_a, 1));
    link.components.push_back(ParamSphere::round_sphere(
        q, d, axes_b, std::vector<double>(static_cast<std::size_t>(q) + 1, 1.0), center_b, sign_b));
    link.convention = std::string("hopf: S^p boundary-of-ball; S^q sign ") +
                      (sign_b > 0 ? "+1" : "-1") +
                      (lk_normalized ? " (Lk=+1 normalization)" : " (induced alternative)");
    return link;
}

// B(p,q,r)_d from the three quadric equations in
// R^d = R^{d-p-1}_x x R^{d-q-1}_y x R^{d-r-1}_z; each component is oriented
// through the coorientation of its spanning disk (dx-, dy-, dz-frames).
inline ParamLink make_borromean(int p, int q, int r, int d) {
    if (!(0 < p && p < d - 1 && 0 < q && q < d - 1 && 0 < r && r < d - 1 && p + q + r == 2 * d - 3))
        throw GraphError("make_borromean: need 0 < p,q,r < d-1 and p+q+r = 2d-3");
    const int nx = d - p - 1, ny = d - q - 1, nz = d - r - 1;
    std::vector<int> x_axes, y_axes, z_axes;
    for (int i = 0; i < nx; ++i) x_axes.push_back(i);
    for (int i = 0; i < ny; ++i) y_axes.push_back(nx + i);
    for (int i = 0; i < nz; ++i) z_axes.push_back(nx + ny + i);
    std::vector<double> origin(static_cast<std::size_t>(d), 0.0);

    auto build = [&](int dim, const std::vector<int>& first, double first_scale,
                     const std::vector<int>& second, double second_scale, int sign) {
        std::vector<int> axes = first;
        axes.insert(axes.end(), second.begin(), second.end());
        std::vector<double> scales(first.size(), first_scale);
        scales.insert(scales.end(), second.size(), second_scale);
        return ParamSphere::round_sphere(dim, d, axes, scales, origin, sign);
    };

    // coorientation-induced signs: o(D) ^ coframe ~ o(R^d)
    int sign1 = (nx * (p + 1)) % 2 == 0 ? 1 : -1; // move dx past the (y,z) block
    int sign2 = (ny * nz) % 2 == 0 ? 1 : -1;      // reorder o(R^d) into (x,z,y)
    int sign3 = 1;                                // dz block is already last

    ParamLink link;
    link.components.push_back(build(p, y_axes, 2.0, z_axes, 1.0, sign1)); // |y|^2/4+|z|^2=1
    link.components.push_back(build(q, x_axes, 1.0, z_axes, 2.0, sign2)); // |z|^2/4+|x|^2=1
    link.components.push_back(build(r, x_axes, 2.0, y_axes, 1.0, sign3)); // |x|^2/4+|y|^2=1
    link.convention = "borromean: orientations induced from spanning-disk coorientations";
    return link;
}

// two far-apart round spheres; the linking integral vanishes. The spheres
// sit in overlapping coordinate planes that jointly span R^d, so the
// integrand is not pointwise zero and the estimate is genuinely statistical.
inline ParamLink make_split(int p, int q, int d) {
    if (!(0 < p && p < d && 0 < q && q < d && p + q == d - 1))
        throw GraphError("make_split: need p+q = d-1");
    std::vector<int> axes_a, axes_b;
    for (int i = 0; i <= p; ++i) axes_a.push_back(i);
    for (int i = p; i <= p + q; ++i) axes_b.push_back(i);
    std::vector<double> center_a(static_cast<std::size_t>(d), 0.0);
    std::vector<double> center_b(static_cast<std::size_t>(d), 0.0);
    center_b[0] = 10.0;
    ParamLink link;
    link.components.push_back(ParamSphere::round_sphere(
        p, d, axes_a, std::vector<double>(static_cast<std::size_t>(p) + 1, 1.0), center_a, 1));
    link.components.push_back(ParamSphere::round_sphere(
        q, d, axes_b, std::vector<double>(static_cast<std::size_t>(q) + 1, 1.0), center_b, 1));
    link.convention = "split: disjoint balls";
    return link;
}

} // namespace gcx
