#include <bit>

#include "hlcd/kernels.hpp"

namespace hlcd::kernels::scalar {

unsigned gray_block_min(PackedWord start, const PackedWord* flips, unsigned bits) noexcept {
    PackedWord cw = start;
    unsigned best = packed_weight(cw);
    const std::uint64_t count = std::uint64_t{1} << bits;
    for (std::uint64_t s = 1; s < count; ++s) {
        cw ^= flips[std::countr_zero(s)];
        const unsigned w = packed_weight(cw);
        best = w < best ? w : best;
    }
    return best;
}

}  // namespace hlcd::kernels::scalar
