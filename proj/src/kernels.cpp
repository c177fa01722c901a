#include "kinlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace kinlab::kern {

const Kernels* avx2_impl();  // defined in kernels_avx2.cpp

const Kernels* avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return avx2_impl();
#endif
    return nullptr;
}

const Kernels& active() {
    static const Kernels* chosen = [] {
        const char* env = std::getenv("KINLAB_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar();
        if (env && std::strcmp(env, "avx2") == 0) {
            if (const Kernels* k = avx2()) return k;
            return &scalar();  // requested ISA missing; fall back
        }
        if (const Kernels* k = avx2()) return k;
        return &scalar();
    }();
    return *chosen;
}

}  // namespace kinlab::kern
