#include "qucc/kernels.hpp"

namespace qucc::kernels {

namespace {

inline double parity_sign(std::uint64_t bits) {
    return __builtin_parityll(bits) ? -1.0 : 1.0;
}

void pauli_exp_flip_scalar(cplx* amps, std::uint64_t n, std::uint64_t x_mask,
                           std::uint64_t phase_mask, double cos_t, cplx w0, cplx w1) {
    const int h = 63 - __builtin_clzll(x_mask);
    const std::uint64_t low = (1ULL << h) - 1;
    const std::uint64_t half = n >> 1;
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = ((k & ~low) << 1) | (k & low);
        const std::uint64_t i1 = i0 ^ x_mask;
        const double s = parity_sign(i0 & phase_mask);
        const cplx a0 = amps[i0], a1 = amps[i1];
        amps[i0] = cos_t * a0 + s * w0 * a1;
        amps[i1] = cos_t * a1 + s * w1 * a0;
    }
}

void pauli_exp_diag_scalar(cplx* amps, std::uint64_t n, std::uint64_t phase_mask,
                           double cos_t, double sin_t) {
    const cplx plus{cos_t, sin_t}, minus{cos_t, -sin_t};
    for (std::uint64_t b = 0; b < n; ++b)
        amps[b] *= __builtin_parityll(b & phase_mask) ? minus : plus;
}

cplx phase_dot_scalar(const cplx* amps, std::uint64_t n, std::uint64_t x_mask,
                      const cplx* diag) {
    cplx acc{0, 0};
    for (std::uint64_t b = 0; b < n; ++b)
        acc += std::conj(amps[b ^ x_mask]) * diag[b] * amps[b];
    return acc;
}

double weighted_norm_scalar(const cplx* amps, std::uint64_t n, const double* w) {
    double acc = 0.0;
    for (std::uint64_t b = 0; b < n; ++b)
        acc += w[b] * (amps[b].real() * amps[b].real() + amps[b].imag() * amps[b].imag());
    return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{pauli_exp_flip_scalar, pauli_exp_diag_scalar,
                           phase_dot_scalar, weighted_norm_scalar, "scalar"};
    return k;
}

}  // namespace qucc::kernels
