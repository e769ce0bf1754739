// AVX2+FMA statevector kernels. Two complex doubles per ymm register; the
// partner stream of a bit-flip mask is contiguous when the mask's low bit is
// clear and lane-swapped when it is set.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "qucc/kernels.hpp"

namespace qucc::kernels {

namespace {

inline double parity_sign(std::uint64_t bits) {
    return __builtin_parityll(bits) ? -1.0 : 1.0;
}

// [re0,im0,re1,im1] * (wre + i*wim), elementwise complex multiply.
inline __m256d cmul_const(__m256d v, __m256d wre, __m256d wim) {
    __m256d vs = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(wre, v, _mm256_mul_pd(wim, vs));
}

void pauli_exp_flip_avx2(cplx* amps, std::uint64_t n, std::uint64_t x_mask,
                         std::uint64_t phase_mask, double cos_t, cplx w0, cplx w1) {
    const int h = 63 - __builtin_clzll(x_mask);
    const std::uint64_t low = (1ULL << h) - 1;
    const std::uint64_t half = n >> 1;
    if (h < 1 || half < 2) {
        scalar_kernels().pauli_exp_flip(amps, n, x_mask, phase_mask, cos_t, w0, w1);
        return;
    }
    const bool swapped = (x_mask & 1) != 0;
    const __m256d vcos = _mm256_set1_pd(cos_t);
    const __m256d w0re = _mm256_set1_pd(w0.real()), w0im = _mm256_set1_pd(w0.imag());
    const __m256d w1re = _mm256_set1_pd(w1.real()), w1im = _mm256_set1_pd(w1.imag());
    double* base = reinterpret_cast<double*>(amps);
    for (std::uint64_t k = 0; k < half; k += 2) {
        const std::uint64_t i0 = ((k & ~low) << 1) | (k & low);
        const std::uint64_t i1 = i0 ^ x_mask;
        const double sa = parity_sign(i0 & phase_mask);
        const double sb = parity_sign((i0 + 1) & phase_mask);
        const __m256d sgn = _mm256_setr_pd(sa, sa, sb, sb);
        double* p0 = base + 2 * i0;
        double* p1 = base + 2 * (swapped ? i1 - 1 : i1);
        __m256d v0 = _mm256_loadu_pd(p0);
        __m256d v1 = _mm256_loadu_pd(p1);
        if (swapped) v1 = _mm256_permute2f128_pd(v1, v1, 0x01);
        __m256d n0 = _mm256_fmadd_pd(vcos, v0, _mm256_mul_pd(sgn, cmul_const(v1, w0re, w0im)));
        __m256d n1 = _mm256_fmadd_pd(vcos, v1, _mm256_mul_pd(sgn, cmul_const(v0, w1re, w1im)));
        if (swapped) n1 = _mm256_permute2f128_pd(n1, n1, 0x01);
        _mm256_storeu_pd(p0, n0);
        _mm256_storeu_pd(p1, n1);
    }
}

void pauli_exp_diag_avx2(cplx* amps, std::uint64_t n, std::uint64_t phase_mask,
                         double cos_t, double sin_t) {
    if (n < 2) {
        scalar_kernels().pauli_exp_diag(amps, n, phase_mask, cos_t, sin_t);
        return;
    }
    const __m256d vcos = _mm256_set1_pd(cos_t);
    double* base = reinterpret_cast<double*>(amps);
    for (std::uint64_t b = 0; b < n; b += 2) {
        const double sa = __builtin_parityll(b & phase_mask) ? -sin_t : sin_t;
        const double sb = __builtin_parityll((b + 1) & phase_mask) ? -sin_t : sin_t;
        const __m256d vsin = _mm256_setr_pd(sa, sa, sb, sb);
        __m256d v = _mm256_loadu_pd(base + 2 * b);
        // (cos + i*s) * v
        __m256d vs = _mm256_permute_pd(v, 0x5);
        __m256d r = _mm256_fmaddsub_pd(vcos, v, _mm256_mul_pd(vsin, vs));
        _mm256_storeu_pd(base + 2 * b, r);
    }
}

cplx phase_dot_avx2(const cplx* amps, std::uint64_t n, std::uint64_t x_mask,
                    const cplx* diag) {
    if (n < 2) return scalar_kernels().phase_dot(amps, n, x_mask, diag);
    const bool swapped = (x_mask & 1) != 0;
    const double* base = reinterpret_cast<const double*>(amps);
    const double* dbase = reinterpret_cast<const double*>(diag);
    __m256d acc = _mm256_setzero_pd();
    for (std::uint64_t b = 0; b < n; b += 2) {
        const std::uint64_t p = b ^ x_mask;
        __m256d v = _mm256_loadu_pd(base + 2 * b);
        __m256d d = _mm256_loadu_pd(dbase + 2 * b);
        __m256d u = _mm256_loadu_pd(base + 2 * (swapped ? p - 1 : p));
        if (swapped) u = _mm256_permute2f128_pd(u, u, 0x01);
        // t = v * d
        __m256d dre = _mm256_movedup_pd(d);
        __m256d dim = _mm256_permute_pd(d, 0xF);
        __m256d vs = _mm256_permute_pd(v, 0x5);
        __m256d t = _mm256_fmaddsub_pd(dre, v, _mm256_mul_pd(dim, vs));
        // acc += conj(u) * t
        __m256d ure = _mm256_movedup_pd(u);
        __m256d uim = _mm256_permute_pd(u, 0xF);
        __m256d ts = _mm256_permute_pd(t, 0x5);
        __m256d z = _mm256_fmsubadd_pd(ure, t, _mm256_mul_pd(uim, ts));
        acc = _mm256_add_pd(acc, z);
    }
    alignas(32) double out[4];
    _mm256_store_pd(out, acc);
    return {out[0] + out[2], out[1] + out[3]};
}

double weighted_norm_avx2(const cplx* amps, std::uint64_t n, const double* w) {
    if (n < 4) return scalar_kernels().weighted_norm(amps, n, w);
    const double* base = reinterpret_cast<const double*>(amps);
    __m256d acc = _mm256_setzero_pd();
    for (std::uint64_t b = 0; b < n; b += 4) {
        __m256d v0 = _mm256_loadu_pd(base + 2 * b);
        __m256d v1 = _mm256_loadu_pd(base + 2 * b + 4);
        __m256d sq = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        // sq = [|z0|^2, |z2|^2, |z1|^2, |z3|^2]; permute w to match.
        __m256d wv = _mm256_loadu_pd(w + b);
        wv = _mm256_permute4x64_pd(wv, _MM_SHUFFLE(3, 1, 2, 0));
        acc = _mm256_fmadd_pd(sq, wv, acc);
    }
    alignas(32) double out[4];
    _mm256_store_pd(out, acc);
    return out[0] + out[1] + out[2] + out[3];
}

}  // namespace

const Kernels* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Kernels k{pauli_exp_flip_avx2, pauli_exp_diag_avx2,
                           phase_dot_avx2, weighted_norm_avx2, "avx2"};
    return &k;
}

}  // namespace qucc::kernels

#else

#include "qucc/kernels.hpp"

namespace qucc::kernels {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace qucc::kernels

#endif
