#pragma once

#include <complex>
#include <cstdint>

namespace qucc::kernels {

using cplx = std::complex<double>;

/// Data-parallel inner loops of the statevector engine. `phase_mask` is the
/// z-support of the Pauli string (sign (-1)^popcount(b & phase_mask)); the
/// i^{n_Y} factor is folded into the complex constants by the caller.
///
/// pauli_exp_flip:  amps <- cos*amps + phase * sin-terms for strings with a
///                  nonempty x-support; w0/w1 are i*sin(theta)*conj(i^nY) and
///                  i*sin(theta)*i^nY.
/// pauli_exp_diag:  same for diagonal (x == 0) strings.
/// phase_dot:       sum_b conj(a[b ^ x_mask]) * diag[b] * a[b].
/// weighted_norm:   sum_b w[b] * |a[b]|^2.
struct Kernels {
    void (*pauli_exp_flip)(cplx* amps, std::uint64_t n, std::uint64_t x_mask,
                           std::uint64_t phase_mask, double cos_t, cplx w0, cplx w1);
    void (*pauli_exp_diag)(cplx* amps, std::uint64_t n, std::uint64_t phase_mask,
                           double cos_t, double sin_t);
    cplx (*phase_dot)(const cplx* amps, std::uint64_t n, std::uint64_t x_mask,
                      const cplx* diag);
    double (*weighted_norm)(const cplx* amps, std::uint64_t n, const double* w);
    const char* name;
};

const Kernels& scalar_kernels();

/// AVX2+FMA variants; null when the CPU lacks them.
const Kernels* avx2_kernels();

/// Runtime-selected implementation. The QUCC_KERNELS environment variable
/// ("scalar" or "avx2") overrides the automatic choice.
const Kernels& active_kernels();

}  // namespace qucc::kernels
