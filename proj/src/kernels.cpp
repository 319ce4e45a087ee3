#include "cwskit/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <limits>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace cwskit::kernels {

ScanResult sympweight_scan_scalar(const std::uint64_t* ztab, std::uint64_t count,
                                  std::uint64_t z_fix, std::uint64_t x_base) {
    ScanResult best{std::numeric_limits<std::uint32_t>::max(), 0};
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t x = x_base + i;
        const auto w = static_cast<std::uint32_t>(std::popcount((ztab[i] ^ z_fix) | x));
        if (w < best.weight) {
            best.weight = w;
            best.value = x;
        }
    }
    return best;
}

#if defined(__x86_64__) || defined(_M_X64)

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) static inline __m256i popcount_epi64(__m256i v) {
    // Nibble-table popcount: per-byte counts via PSHUFB, then per-lane sums
    // via SAD against zero.
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    const __m256i cnt8 =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt8, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) ScanResult sympweight_scan_avx2(const std::uint64_t* ztab,
                                                                std::uint64_t count,
                                                                std::uint64_t z_fix,
                                                                std::uint64_t x_base) {
    ScanResult best{std::numeric_limits<std::uint32_t>::max(), 0};
    const std::uint64_t vec_count = count & ~std::uint64_t{3};

    if (vec_count) {
        const __m256i vz_fix = _mm256_set1_epi64x(static_cast<long long>(z_fix));
        __m256i vx = _mm256_setr_epi64x(static_cast<long long>(x_base),
                                        static_cast<long long>(x_base + 1),
                                        static_cast<long long>(x_base + 2),
                                        static_cast<long long>(x_base + 3));
        const __m256i vfour = _mm256_set1_epi64x(4);
        // Weights are <= 64 and x values < 2^62, so signed 64-bit compares
        // are safe for both.
        __m256i vmin_w = _mm256_set1_epi64x(std::numeric_limits<std::int64_t>::max());
        __m256i vmin_x = _mm256_setzero_si256();

        for (std::uint64_t i = 0; i < vec_count; i += 4) {
            const __m256i vz =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ztab + i));
            const __m256i combined = _mm256_or_si256(_mm256_xor_si256(vz, vz_fix), vx);
            const __m256i w = popcount_epi64(combined);
            // Strict improvement only: ties keep the earlier (smaller) x
            // within a lane.
            const __m256i better = _mm256_cmpgt_epi64(vmin_w, w);
            vmin_w = _mm256_blendv_epi8(vmin_w, w, better);
            vmin_x = _mm256_blendv_epi8(vmin_x, vx, better);
            vx = _mm256_add_epi64(vx, vfour);
        }

        alignas(32) std::uint64_t lane_w[4], lane_x[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lane_w), vmin_w);
        _mm256_store_si256(reinterpret_cast<__m256i*>(lane_x), vmin_x);
        for (int lane = 0; lane < 4; ++lane) {
            const auto w = static_cast<std::uint32_t>(lane_w[lane]);
            if (w < best.weight || (w == best.weight && lane_x[lane] < best.value)) {
                best.weight = w;
                best.value = lane_x[lane];
            }
        }
    }

    const ScanResult tail = sympweight_scan_scalar(ztab + vec_count, count - vec_count,
                                                   z_fix, x_base + vec_count);
    // Tail indices are all larger than vector indices, so a strict
    // comparison keeps first-hit semantics.
    if (tail.weight < best.weight) best = tail;
    return best;
}

#else

bool avx2_available() { return false; }

#endif

namespace {

using ScanFn = ScanResult (*)(const std::uint64_t*, std::uint64_t, std::uint64_t,
                              std::uint64_t);

ScanFn resolve(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::avx2 || (b == Backend::automatic && avx2_available()))
        if (avx2_available()) return &sympweight_scan_avx2;
#endif
    (void)b;
    return &sympweight_scan_scalar;
}

Backend env_backend() {
    const char* env = std::getenv("CWSKIT_KERNEL");
    if (env) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0) return Backend::avx2;
    }
    return Backend::automatic;
}

ScanFn& active_fn() {
    static ScanFn fn = resolve(env_backend());
    return fn;
}

} // namespace

ScanResult sympweight_scan(const std::uint64_t* ztab, std::uint64_t count,
                           std::uint64_t z_fix, std::uint64_t x_base) {
    return active_fn()(ztab, count, z_fix, x_base);
}

void set_backend(Backend b) { active_fn() = resolve(b); }

const char* active_backend() {
    return active_fn() == &sympweight_scan_scalar ? "scalar" : "avx2";
}

} // namespace cwskit::kernels
