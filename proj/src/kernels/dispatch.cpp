#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "lqvac/error.hpp"

namespace lqvac::kernels {

namespace {

struct KernelTable {
    decltype(&scalar::exp_batch) exp_batch;
    decltype(&scalar::width_batch) width_batch;
    decltype(&scalar::density_cm_batch) density_cm_batch;
    decltype(&scalar::density_rel_batch) density_rel_batch;
    decltype(&scalar::plate_remainder_terms) plate_remainder_terms;
};

constexpr KernelTable kScalarTable{&scalar::exp_batch, &scalar::width_batch, &scalar::density_cm_batch,
                                   &scalar::density_rel_batch, &scalar::plate_remainder_terms};

#if defined(LQVAC_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{&avx2::exp_batch, &avx2::width_batch, &avx2::density_cm_batch,
                                 &avx2::density_rel_batch, &avx2::plate_remainder_terms};
#endif

bool cpu_has_avx2() noexcept {
#if defined(LQVAC_HAVE_AVX2_KERNELS)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() {
    const bool avx2 = cpu_has_avx2();
    if (const char* env = std::getenv("LQVAC_SIMD")) {
        const std::string choice(env);
        if (choice == "scalar") {
            return Backend::scalar;
        }
        if (choice == "avx2" && avx2) {
            return Backend::avx2;
        }
    }
    return avx2 ? Backend::avx2 : Backend::scalar;
}

const KernelTable* table_for(Backend b) noexcept {
#if defined(LQVAC_HAVE_AVX2_KERNELS)
    if (b == Backend::avx2) {
        return &kAvx2Table;
    }
#endif
    (void)b;
    return &kScalarTable;
}

struct State {
    std::atomic<Backend> backend;
    std::atomic<const KernelTable*> table;
    State() : backend(initial_backend()), table(table_for(backend.load())) {}
};

State& state() {
    static State s;
    return s;
}

const KernelTable& active() { return *state().table.load(std::memory_order_acquire); }

void require_sizes(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        throw ArgumentError(std::string("kernel ") + what + ": span size mismatch");
    }
}

}  // namespace

std::string_view backend_name(Backend b) noexcept { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool avx2_available() noexcept {
    static const bool available = cpu_has_avx2();
    return available;
}

Backend active_backend() noexcept { return state().backend.load(); }

void set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_available()) {
        throw ArgumentError("AVX2 kernels are not available on this machine");
    }
    state().backend.store(b);
    state().table.store(table_for(b), std::memory_order_release);
}

void exp_batch(std::span<const double> x, std::span<double> out) {
    require_sizes(x.size(), out.size(), "exp_batch");
    active().exp_batch(x, out);
}

void width_batch(std::span<const double> rho, std::span<const double> t, const WidthCoeffs& k,
                 std::span<double> out) {
    require_sizes(rho.size(), t.size(), "width_batch");
    require_sizes(rho.size(), out.size(), "width_batch");
    active().width_batch(rho, t, k, out);
}

void density_cm_batch(std::span<const double> r2, std::span<const double> width, std::span<double> out) {
    require_sizes(r2.size(), width.size(), "density_cm_batch");
    require_sizes(r2.size(), out.size(), "density_cm_batch");
    active().density_cm_batch(r2, width, out);
}

void density_rel_batch(std::span<const double> rho, std::span<const double> sin2, std::span<const double> t,
                       const RelCoeffs& k, std::span<double> out) {
    require_sizes(rho.size(), sin2.size(), "density_rel_batch");
    require_sizes(rho.size(), t.size(), "density_rel_batch");
    require_sizes(rho.size(), out.size(), "density_rel_batch");
    active().density_rel_batch(rho, sin2, t, k, out);
}

void plate_remainder_terms(double b, std::size_t first, std::span<const double> nodes,
                           std::span<const double> weights, std::span<double> out) {
    require_sizes(nodes.size(), weights.size(), "plate_remainder_terms");
    active().plate_remainder_terms(b, first, nodes, weights, out);
}

}  // namespace lqvac::kernels
