#pragma once

#include <cstdint>

namespace cwskit::kernels {

// Result of a minimum-weight scan: the smallest weight seen and the
// candidate value attaining it first (smallest x). weight is UINT32_MAX
// when count == 0.
struct ScanResult {
    std::uint32_t weight;
    std::uint64_t value;
};

// For i in [0, count): w_i = popcount((ztab[i] ^ z_fix) | (x_base + i)).
// Returns the minimum w_i and the candidate x = x_base + i attaining it at
// the smallest i. Callers must ensure x_base + count does not overflow the
// intended bit width; in practice x values stay below 2^62.
//
// This is the inner loop of the exhaustive diagonal-distance scan: ztab
// holds precomputed adjacency sums for a block of low bits, z_fix the sum
// for the fixed high bits, and x_base the high bits themselves.
ScanResult sympweight_scan(const std::uint64_t* ztab, std::uint64_t count,
                           std::uint64_t z_fix, std::uint64_t x_base);

// Reference implementation (always available).
ScanResult sympweight_scan_scalar(const std::uint64_t* ztab, std::uint64_t count,
                                  std::uint64_t z_fix, std::uint64_t x_base);

#if defined(__x86_64__) || defined(_M_X64)
// AVX2 implementation; call only when avx2_available().
ScanResult sympweight_scan_avx2(const std::uint64_t* ztab, std::uint64_t count,
                                std::uint64_t z_fix, std::uint64_t x_base);
#endif

bool avx2_available();

enum class Backend { automatic, scalar, avx2 };

// Selects the backend used by sympweight_scan. The default (automatic)
// picks AVX2 when the CPU supports it, honoring the CWSKIT_KERNEL
// environment variable ("scalar", "avx2", "auto") read at first use.
// Requesting avx2 on a CPU without it falls back to scalar.
void set_backend(Backend b);

// Name of the backend currently in effect: "scalar" or "avx2".
const char* active_backend();

} // namespace cwskit::kernels
