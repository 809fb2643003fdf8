#include "permtodd/kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(PERMTODD_HAVE_AVX2_KERNEL)
#include <immintrin.h>
#endif
#if defined(PERMTODD_HAVE_NEON_KERNEL)
#include <arm_neon.h>
#endif

namespace permtodd::kernels {

bool extend_subset_sums_scalar(const std::int64_t* base, std::int64_t x, const std::int64_t* lower,
                               const std::int64_t* upper, std::int64_t* out, std::size_t count) {
    bool ok = true;
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t s = base[i] + x;
        out[i] = s;
        ok &= (s >= lower[i]) & (s <= upper[i]);
    }
    return ok;
}

#if defined(PERMTODD_HAVE_AVX2_KERNEL)
__attribute__((target("avx2"))) bool extend_subset_sums_avx2(const std::int64_t* base, std::int64_t x,
                                                             const std::int64_t* lower,
                                                             const std::int64_t* upper, std::int64_t* out,
                                                             std::size_t count) {
    const __m256i vx = _mm256_set1_epi64x(x);
    __m256i bad = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i s = _mm256_add_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + i)), vx);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), s);
        const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lower + i));
        const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(upper + i));
        bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(lo, s));
        bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(s, hi));
    }
    bool ok = _mm256_testz_si256(bad, bad);
    // Subset counts are powers of two, so the tail only fires for count < 4.
    return extend_subset_sums_scalar(base + i, x, lower + i, upper + i, out + i, count - i) && ok;
}
#endif

#if defined(PERMTODD_HAVE_NEON_KERNEL)
bool extend_subset_sums_neon(const std::int64_t* base, std::int64_t x, const std::int64_t* lower,
                             const std::int64_t* upper, std::int64_t* out, std::size_t count) {
    const int64x2_t vx = vdupq_n_s64(x);
    uint64x2_t bad = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const int64x2_t s = vaddq_s64(vld1q_s64(base + i), vx);
        vst1q_s64(out + i, s);
        bad = vorrq_u64(bad, vcgtq_s64(vld1q_s64(lower + i), s));
        bad = vorrq_u64(bad, vcgtq_s64(s, vld1q_s64(upper + i)));
    }
    bool ok = (vgetq_lane_u64(bad, 0) | vgetq_lane_u64(bad, 1)) == 0;
    return extend_subset_sums_scalar(base + i, x, lower + i, upper + i, out + i, count - i) && ok;
}
#endif

Isa detected_isa() {
    if (const char* force = std::getenv("PERMTODD_FORCE_SCALAR"); force && std::strcmp(force, "1") == 0)
        return Isa::Scalar;
#if defined(PERMTODD_HAVE_AVX2_KERNEL)
    if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
#if defined(PERMTODD_HAVE_NEON_KERNEL)
    return Isa::Neon;
#endif
    return Isa::Scalar;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
        case Isa::Scalar: break;
    }
    return "scalar";
}

ExtendFn extend_subset_sums_for(Isa isa) {
    switch (isa) {
#if defined(PERMTODD_HAVE_AVX2_KERNEL)
        case Isa::Avx2: return &extend_subset_sums_avx2;
#endif
#if defined(PERMTODD_HAVE_NEON_KERNEL)
        case Isa::Neon: return &extend_subset_sums_neon;
#endif
        default: break;
    }
    return &extend_subset_sums_scalar;
}

}  // namespace permtodd::kernels
