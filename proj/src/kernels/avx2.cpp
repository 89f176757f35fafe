#include <immintrin.h>

#include <cstdint>

#include "kernels_impl.hpp"

namespace lqvac::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

__m256i tail_mask(std::size_t remaining) {
    alignas(32) const std::int64_t bits[4] = {
        remaining > 0 ? -1 : 0, remaining > 1 ? -1 : 0, remaining > 2 ? -1 : 0, remaining > 3 ? -1 : 0};
    return _mm256_load_si256(reinterpret_cast<const __m256i*>(bits));
}

// exp(x) for four doubles: x = n ln2 + r with |r| <= ln2/2, degree-13
// Taylor polynomial for e^r, exponent assembled directly. Arguments below
// the normal range flush to zero; above it saturate to +inf.
__m256d exp_pd(__m256d x) {
    const __m256d hi = _mm256_set1_pd(709.782712893384);
    const __m256d lo = _mm256_set1_pd(-708.3964185322641);
    const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    const __m256d overflow = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
    x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(6.93147180369123816490e-01), x);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(1.90821492927058770002e-10), r);

    __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

    // 2^n: place n + 1023 in the low mantissa bits via the 1.5 * 2^52 trick,
    // then shift it into the exponent field. n lies in [-1022, 1024] here;
    // split the scale in two so n = 1024 does not overflow the biased exponent.
    const __m256d magic = _mm256_set1_pd(6755399441055744.0);
    const __m256d n_half = _mm256_round_pd(_mm256_mul_pd(n, _mm256_set1_pd(0.5)),
                                           _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
    const __m256d n_rest = _mm256_sub_pd(n, n_half);
    const __m256d bias = _mm256_set1_pd(1023.0);
    const __m256i e1 = _mm256_slli_epi64(_mm256_castpd_si256(_mm256_add_pd(_mm256_add_pd(n_half, bias), magic)), 52);
    const __m256i e2 = _mm256_slli_epi64(_mm256_castpd_si256(_mm256_add_pd(_mm256_add_pd(n_rest, bias), magic)), 52);
    __m256d result = _mm256_mul_pd(_mm256_mul_pd(p, _mm256_castsi256_pd(e1)), _mm256_castsi256_pd(e2));

    result = _mm256_andnot_pd(underflow, result);
    result = _mm256_blendv_pd(result, _mm256_set1_pd(__builtin_huge_val()), overflow);
    return result;
}

__m256d load(std::span<const double> v, std::size_t i, std::size_t n) {
    if (i + kLanes <= n) {
        return _mm256_loadu_pd(v.data() + i);
    }
    return _mm256_maskload_pd(v.data() + i, tail_mask(n - i));
}

void store(std::span<double> v, std::size_t i, std::size_t n, __m256d x) {
    if (i + kLanes <= n) {
        _mm256_storeu_pd(v.data() + i, x);
    } else {
        _mm256_maskstore_pd(v.data() + i, tail_mask(n - i), x);
    }
}

}  // namespace

void exp_batch(std::span<const double> x, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; i += kLanes) {
        store(out, i, n, exp_pd(load(x, i, n)));
    }
}

void width_batch(std::span<const double> rho, std::span<const double> t, const WidthCoeffs& k,
                 std::span<double> out) {
    const std::size_t n = rho.size();
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d c = _mm256_set1_pd(k.c);
    const __m256d ma0 = _mm256_set1_pd(k.m * k.a0);
    const __m256d a0sq = _mm256_set1_pd(k.a0 * k.a0);
    for (std::size_t i = 0; i < n; i += kLanes) {
        const __m256d tau = _mm256_sub_pd(load(t, i, n), _mm256_div_pd(_mm256_mul_pd(two, load(rho, i, n)), c));
        const __m256d spread = _mm256_div_pd(tau, ma0);
        store(out, i, n, _mm256_sqrt_pd(_mm256_add_pd(a0sq, _mm256_mul_pd(spread, spread))));
    }
}

void density_cm_batch(std::span<const double> r2, std::span<const double> width, std::span<double> out) {
    const std::size_t n = r2.size();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d norm = _mm256_set1_pd(0.17958712212516656);
    const __m256d sign = _mm256_set1_pd(-0.0);
    for (std::size_t i = 0; i < n; i += kLanes) {
        // Masked-off lanes load width 0; their 1/0 results are never stored.
        const __m256d inv_w = _mm256_div_pd(one, load(width, i, n));
        const __m256d inv_w2 = _mm256_mul_pd(inv_w, inv_w);
        const __m256d arg = _mm256_mul_pd(_mm256_xor_pd(load(r2, i, n), sign), inv_w2);
        const __m256d value = _mm256_mul_pd(_mm256_mul_pd(norm, _mm256_mul_pd(inv_w2, inv_w)), exp_pd(arg));
        store(out, i, n, value);
    }
}

void density_rel_batch(std::span<const double> rho, std::span<const double> sin2, std::span<const double> t,
                       const RelCoeffs& k, std::span<double> out) {
    const std::size_t n = rho.size();
    const __m256d c = _mm256_set1_pd(k.c);
    const __m256d gamma = _mm256_set1_pd(k.gamma);
    const __m256d prefactor = _mm256_set1_pd(3.0 * k.gamma / (8.0 * std::numbers::pi * k.c));
    const __m256d one = _mm256_set1_pd(1.0);
    for (std::size_t i = 0; i < n; i += kLanes) {
        __m256d r = load(rho, i, n);
        const __m256d ct = _mm256_mul_pd(c, load(t, i, n));
        const __m256d outside = _mm256_cmp_pd(r, ct, _CMP_GT_OQ);
        // Guard masked-off lanes (rho = 0) against division by zero.
        r = _mm256_blendv_pd(r, one, _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_EQ_OQ));
        const __m256d decay = exp_pd(_mm256_div_pd(_mm256_mul_pd(gamma, _mm256_sub_pd(r, ct)), c));
        const __m256d value =
            _mm256_mul_pd(_mm256_div_pd(_mm256_mul_pd(prefactor, load(sin2, i, n)), _mm256_mul_pd(r, r)), decay);
        store(out, i, n, _mm256_andnot_pd(outside, value));
    }
}

void plate_remainder_terms(double b, std::size_t first, std::span<const double> nodes,
                           std::span<const double> weights, std::span<double> out) {
    const std::size_t n = out.size();
    const __m256d vb = _mm256_set1_pd(b);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d sign = _mm256_set1_pd(-0.0);
    const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    for (std::size_t i = 0; i < n; i += kLanes) {
        const __m256d panel = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(first + i)), lane);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const double s = nodes[j];
            const __m256d x = _mm256_mul_pd(vb, _mm256_add_pd(panel, _mm256_set1_pd(s)));
            const __m256d kernel = _mm256_set1_pd(0.5 * weights[j] * s * (1.0 - s));
            const __m256d poly = _mm256_sub_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(two, x));
            const __m256d g2 = _mm256_mul_pd(exp_pd(_mm256_xor_pd(x, sign)), poly);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(kernel, g2));
        }
        store(out, i, n, acc);
    }
}

}  // namespace lqvac::kernels::avx2
