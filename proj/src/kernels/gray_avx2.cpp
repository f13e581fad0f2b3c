#include "hlcd/kernels.hpp"

#if defined(HLCD_HAVE_AVX2)
#include <immintrin.h>

#include <bit>
#endif

namespace hlcd::kernels::avx2 {

#if defined(HLCD_HAVE_AVX2)

namespace {

// Per-64-bit-lane popcount via nibble lookup and SAD (no AVX-512 VPOPCNTQ).
inline __m256i popcount_epi64(__m256i v) noexcept {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

// Four lanes walk the four quarters of the block in lockstep. For
// 0 < s < 2^(bits-2), position j*2^(bits-2) + s has the same trailing-zero
// count as s, so every lane applies the same flip each step.
unsigned gray_block_min(PackedWord start, const PackedWord* flips, unsigned bits) noexcept {
    if (bits < 4) return scalar::gray_block_min(start, flips, bits);

    const unsigned lane_bits = bits - 2;
    alignas(32) std::uint64_t lo_init[4];
    alignas(32) std::uint64_t hi_init[4];
    for (std::uint64_t j = 0; j < 4; ++j) {
        const std::uint64_t pos = j << lane_bits;
        std::uint64_t g = pos ^ (pos >> 1);
        PackedWord cw = start;
        while (g != 0) {
            cw ^= flips[std::countr_zero(g)];
            g &= g - 1;
        }
        lo_init[j] = cw.lo;
        hi_init[j] = cw.hi;
    }

    __m256i lo = _mm256_load_si256(reinterpret_cast<const __m256i*>(lo_init));
    __m256i hi = _mm256_load_si256(reinterpret_cast<const __m256i*>(hi_init));
    __m256i best = popcount_epi64(_mm256_or_si256(lo, hi));

    const std::uint64_t count = std::uint64_t{1} << lane_bits;
    for (std::uint64_t s = 1; s < count; ++s) {
        const PackedWord f = flips[std::countr_zero(s)];
        lo = _mm256_xor_si256(lo, _mm256_set1_epi64x(static_cast<long long>(f.lo)));
        hi = _mm256_xor_si256(hi, _mm256_set1_epi64x(static_cast<long long>(f.hi)));
        // Counts are < 65 and sit in the low 32 bits of each lane.
        best = _mm256_min_epu32(best, popcount_epi64(_mm256_or_si256(lo, hi)));
    }

    alignas(32) std::uint64_t out[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(out), best);
    std::uint64_t m = out[0];
    for (int j = 1; j < 4; ++j) m = out[j] < m ? out[j] : m;
    return static_cast<unsigned>(m);
}

#else

unsigned gray_block_min(PackedWord start, const PackedWord* flips, unsigned bits) noexcept {
    return scalar::gray_block_min(start, flips, bits);
}

#endif

}  // namespace hlcd::kernels::avx2
