#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <type_traits>
#include <vector>

namespace lqvac::quad {

/// Result of an adaptive integration: value, summed error estimate, and
/// whether the requested tolerance was met before the subdivision budget ran out.
template <typename T>
struct Estimate {
    T value{};
    double error = 0.0;
    std::size_t subdivisions = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod nodes (non-negative half) with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <typename T>
struct Panel {
    double a;
    double b;
    T value;
    double error;
};

template <typename T, typename F>
Panel<T> kronrod15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(center);
    T kronrod = fc * kKronrodWeights[7];
    T gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const T sum = f(center - dx) + f(center + dx);
        kronrod += sum * kKronrodWeights[j];
        if (j % 2 == 1) {
            gauss += sum * kGaussWeights[j / 2];
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, magnitude(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b],
/// starting from `initial_panels` equal panels (use one panel per few
/// oscillations for oscillatory integrands).
///
/// Panels with the largest error estimate are bisected until the summed
/// error drops below max(abs_tol, rel_tol * |integral|) or max_subdivisions
/// is exhausted. The evaluation order depends only on the inputs, so
/// results are reproducible bit for bit.
template <typename F>
auto integrate(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
               std::size_t max_subdivisions = 2000, std::size_t initial_panels = 1) {
    using T = std::decay_t<decltype(f(a))>;
    using detail::Panel;
    auto worse = [](const Panel<T>& l, const Panel<T>& r) { return l.error < r.error; };
    std::priority_queue<Panel<T>, std::vector<Panel<T>>, decltype(worse)> panels(worse);

    Estimate<T> out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    initial_panels = std::max<std::size_t>(initial_panels, 1);
    T total{};
    double error = 0.0;
    const double width = (b - a) / static_cast<double>(initial_panels);
    for (std::size_t i = 0; i < initial_panels; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = i + 1 == initial_panels ? b : a + width * static_cast<double>(i + 1);
        const Panel<T> p = detail::kronrod15<T>(f, lo, hi);
        total += p.value;
        error += p.error;
        panels.push(p);
    }

    while (true) {
        const double target = std::max(abs_tol, rel_tol * detail::magnitude(total));
        if (error <= target) {
            out.converged = true;
            break;
        }
        if (out.subdivisions >= max_subdivisions) {
            break;
        }
        const Panel<T> worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            break;  // interval exhausted at double resolution
        }
        const Panel<T> left = detail::kronrod15<T>(f, worst.a, mid);
        const Panel<T> right = detail::kronrod15<T>(f, mid, worst.b);
        total += (left.value + right.value) - worst.value;
        error += (left.error + right.error) - worst.error;
        panels.push(left);
        panels.push(right);
        ++out.subdivisions;
    }

    // Re-sum the final panels in interval order so the value carries no
    // drift from the incremental updates above.
    std::vector<Panel<T>> final_panels;
    final_panels.reserve(panels.size());
    while (!panels.empty()) {
        final_panels.push_back(panels.top());
        panels.pop();
    }
    std::sort(final_panels.begin(), final_panels.end(),
              [](const Panel<T>& l, const Panel<T>& r) { return l.a < r.a; });
    out.value = T{};
    out.error = 0.0;
    for (const auto& p : final_panels) {
        out.value += p.value;
        out.error += p.error;
    }
    if (!out.converged) {
        out.converged = out.error <= std::max(abs_tol, rel_tol * detail::magnitude(out.value));
    }
    return out;
}

/// Gauss-Legendre nodes and weights on [0, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Computes an n-point Gauss-Legendre rule mapped onto [0, 1] by Newton
/// iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre_unit(std::size_t n);

}  // namespace lqvac::quad
