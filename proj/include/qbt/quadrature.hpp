#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "qbt/errors.hpp"

namespace qbt {

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;        // absolute floor; 0 means purely relative
    int max_intervals = 40000;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double gk_node[8] = {
    0.0,
    0.405845151377397166906606412076961,
    0.741531185599394439863864773280788,
    0.949107912342758524526189684047851,
    0.207784955007898467600689403773245,
    0.586087235467691130294144838258730,
    0.864864423359769072789712788640926,
    0.991455371120812639206854697526329};
inline constexpr double gk_wgauss[8] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
    0.0, 0.0, 0.0, 0.0};
inline constexpr double gk_wkron[8] = {
    0.209482141084727828012999174891714,
    0.190350578064785409913256402421014,
    0.140653259715525918745189590510238,
    0.063092092629978553290700663189204,
    0.204432940075298892414161999234649,
    0.169004726639267902826583426598550,
    0.104790010322250183839876322541518,
    0.022935322010529224963732008058970};

template <class T>
double norm_of(const T& v) {
    return std::abs(v);
}

}  // namespace detail

// One Gauss-Kronrod 15-point panel; returns the K15 estimate, fills err with
// the |K15 - G7| discrepancy. Value type may be double or std::complex<double>.
template <class F>
auto gk15_panel(const F& f, double a, double b, double& err) -> decltype(f(0.0)) {
    using V = decltype(f(0.0));
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    V f0 = f(c);
    V gauss = detail::gk_wgauss[0] * f0;
    V kron = detail::gk_wkron[0] * f0;
    for (int i = 1; i < 8; ++i) {
        V v = f(c + h * detail::gk_node[i]) + f(c - h * detail::gk_node[i]);
        gauss += detail::gk_wgauss[i] * v;
        kron += detail::gk_wkron[i] * v;
    }
    err = detail::norm_of(V(kron - gauss)) * std::abs(h);
    return kron * h;
}

// Globally adaptive GK15 on a finite interval: always splits the interval
// with the largest error estimate. Endpoint singularities are tolerated as
// long as the integrand is finite at the interior nodes.
template <class F>
auto integrate(const F& f, double a, double b, const QuadratureOptions& opt = {})
    -> decltype(f(0.0)) {
    using V = decltype(f(0.0));
    struct Panel {
        double a, b, err;
        V val;
    };
    std::vector<Panel> panels;
    double e0;
    V v0 = gk15_panel(f, a, b, e0);
    panels.push_back({a, b, e0, v0});
    double total_err = e0;
    double total_norm = detail::norm_of(v0);

    auto tolerance = [&](double norm) {
        return std::max(opt.abs_tol, opt.rel_tol * std::max(norm, 1e-300));
    };

    while (total_err > tolerance(total_norm)) {
        if ((int)panels.size() >= opt.max_intervals)
            throw QuadratureFailure("integrate: interval budget exhausted before tolerance");
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel& x, const Panel& y) { return x.err < y.err; });
        Panel p = *worst;
        if (p.b - p.a < 1e-15 * (std::abs(p.a) + std::abs(p.b)) || p.b - p.a < 1e-305) {
            // cannot subdivide further; accept this panel as-is
            if (p.err > 1e3 * tolerance(total_norm))
                throw QuadratureFailure("integrate: stalled on a non-integrable point");
            worst->err = 0.0;
            total_err = 0.0;
            for (const auto& q : panels) total_err += q.err;
            continue;
        }
        double m = 0.5 * (p.a + p.b);
        double e1, e2;
        V v1 = gk15_panel(f, p.a, m, e1);
        V v2 = gk15_panel(f, m, p.b, e2);
        *worst = {p.a, m, e1, v1};
        panels.push_back({m, p.b, e2, v2});
        total_err += e1 + e2 - p.err;
        total_norm += detail::norm_of(V(v1 + v2 - p.val));
        if (total_norm < 0) total_norm = 0;
        // recompute occasionally to undo cancellation drift
        if (panels.size() % 256 == 0) {
            total_err = 0;
            V s{};
            for (const auto& q : panels) {
                total_err += q.err;
                s += q.val;
            }
            total_norm = detail::norm_of(s);
        }
    }
    V sum{};
    for (const auto& q : panels) sum += q.val;
    return sum;
}

// Integral over [a, infinity) of an integrand known to decay at least as fast
// as tail_coeff / w^3: integrates on doubling windows and closes with the
// analytic tail  tail_coeff / (2 Y^2)  once the increment is below tolerance.
template <class F>
double integrate_to_infinity(const F& f, double a, double y0, double tail_coeff,
                             const QuadratureOptions& opt = {}) {
    double y = std::max(y0, 2.0 * std::abs(a) + 1.0);
    double sum = integrate(f, a, y, opt);
    for (int k = 0; k < 60; ++k) {
        double tail = tail_coeff / (2.0 * y * y);
        double inc = integrate(f, y, 2.0 * y, opt);
        double tail2 = tail_coeff / (8.0 * y * y);
        sum += inc;
        y *= 2.0;
        double change = std::abs(inc + tail2 - tail);
        if (change <= std::max(opt.abs_tol, opt.rel_tol * std::abs(sum)) ||
            std::abs(tail2) <= std::max(opt.abs_tol, 0.05 * opt.rel_tol * std::abs(sum)))
            return sum + tail2;
    }
    throw QuadratureFailure("integrate_to_infinity: tail did not settle");
}

}  // namespace qbt
