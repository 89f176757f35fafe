#include <cmath>

#include "kernels_impl.hpp"

namespace lqvac::kernels::scalar {

void exp_batch(std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = std::exp(x[i]);
    }
}

void width_batch(std::span<const double> rho, std::span<const double> t, const WidthCoeffs& k,
                 std::span<double> out) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
        out[i] = width_value(rho[i], t[i], k);
    }
}

void density_cm_batch(std::span<const double> r2, std::span<const double> width, std::span<double> out) {
    for (std::size_t i = 0; i < r2.size(); ++i) {
        out[i] = density_cm_value(r2[i], width[i]);
    }
}

void density_rel_batch(std::span<const double> rho, std::span<const double> sin2, std::span<const double> t,
                       const RelCoeffs& k, std::span<double> out) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
        out[i] = density_rel_value(rho[i], sin2[i], t[i], k);
    }
}

void plate_remainder_terms(double b, std::size_t first, std::span<const double> nodes,
                           std::span<const double> weights, std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double n = static_cast<double>(first + i);
        double acc = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const double s = nodes[j];
            const double x = b * (n + s);
            const double kernel = 0.5 * weights[j] * s * (1.0 - s);
            acc += kernel * (std::exp(-x) * (x * x - 2.0 * x));
        }
        out[i] = acc;
    }
}

}  // namespace lqvac::kernels::scalar
