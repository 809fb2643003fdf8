#pragma once

// Inner loop of the brute-force lattice-point counter.
//
// Coordinates are assigned one at a time. When coordinate j receives value x,
// every subset whose largest element is j gets its sum from the subset
// without j:  out[m] = base[m] + x  for m in [0, 2^j).  The point survives
// only if lower[m] <= out[m] <= upper[m] for all those m.
//
// All variants must return identical results; the scalar one is the reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace permtodd::kernels {

using ExtendFn = bool (*)(const std::int64_t* base, std::int64_t x, const std::int64_t* lower,
                          const std::int64_t* upper, std::int64_t* out, std::size_t count);

bool extend_subset_sums_scalar(const std::int64_t* base, std::int64_t x, const std::int64_t* lower,
                               const std::int64_t* upper, std::int64_t* out, std::size_t count);

#if defined(__x86_64__) || defined(_M_X64)
#define PERMTODD_HAVE_AVX2_KERNEL 1
bool extend_subset_sums_avx2(const std::int64_t* base, std::int64_t x, const std::int64_t* lower,
                             const std::int64_t* upper, std::int64_t* out, std::size_t count);
#endif

#if defined(__aarch64__)
#define PERMTODD_HAVE_NEON_KERNEL 1
bool extend_subset_sums_neon(const std::int64_t* base, std::int64_t x, const std::int64_t* lower,
                             const std::int64_t* upper, std::int64_t* out, std::size_t count);
#endif

enum class Isa { Scalar, Avx2, Neon };

// Best variant the running CPU supports. PERMTODD_FORCE_SCALAR=1 in the
// environment pins the scalar path.
Isa detected_isa();
std::string_view isa_name(Isa isa);
ExtendFn extend_subset_sums_for(Isa isa);

inline bool extend_subset_sums(std::span<const std::int64_t> base, std::int64_t x,
                               std::span<const std::int64_t> lower, std::span<const std::int64_t> upper,
                               std::span<std::int64_t> out) {
    static const ExtendFn fn = extend_subset_sums_for(detected_isa());
    return fn(base.data(), x, lower.data(), upper.data(), out.data(), base.size());
}

}  // namespace permtodd::kernels
