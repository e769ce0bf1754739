#include "qucc/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qucc::kernels {

const Kernels& active_kernels() {
    static const Kernels* selected = [] {
        const char* env = std::getenv("QUCC_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
        const Kernels* simd = avx2_kernels();
        if (env && std::strcmp(env, "avx2") == 0 && simd) return simd;
        if (env && std::strcmp(env, "avx2") == 0) return &scalar_kernels();
        return simd ? simd : &scalar_kernels();
    }();
    return *selected;
}

}  // namespace qucc::kernels
