#include <atomic>
#include <cstdlib>
#include <cstring>

#include "tml/simd/kernels.hpp"

namespace tml::simd {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Backend detect_backend() {
    if (const char* env = std::getenv("TML_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_ops() && cpu_has_avx2()) return Backend::avx2;
        return Backend::scalar;
    }
    return (avx2_ops() && cpu_has_avx2()) ? Backend::avx2 : Backend::scalar;
}

std::atomic<int> g_backend{-1};

}  // namespace

Backend active_backend() {
    int b = g_backend.load(std::memory_order_relaxed);
    if (b < 0) {
        b = static_cast<int>(detect_backend());
        g_backend.store(b, std::memory_order_relaxed);
    }
    return static_cast<Backend>(b);
}

void force_backend(Backend b) {
    if (b == Backend::avx2 && !(avx2_ops() && cpu_has_avx2())) b = Backend::scalar;
    g_backend.store(static_cast<int>(b), std::memory_order_relaxed);
}

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

const Ops& ops() {
    return active_backend() == Backend::avx2 ? *avx2_ops() : scalar_ops;
}

}  // namespace tml::simd
