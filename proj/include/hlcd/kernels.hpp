#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "hlcd/packed.hpp"

// Minimum-weight enumeration kernels.
//
// A "Gray block" is the set of 2^bits codewords
//     start ^ sum_{b in gray(s)} flips[b],   0 <= s < 2^bits,
// where gray(s) = s ^ (s >> 1). Consecutive codewords differ by exactly one
// flip (flips[ctz(s)]), so each step costs one XOR of two planes and a
// popcount. The scalar kernel is the reference; SIMD variants must return
// identical results and are selected at runtime.
namespace hlcd::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

// True if the binary contains the variant and the CPU can run it.
bool isa_available(Isa isa) noexcept;

// Kernel used by gray_block_min(). Defaults to the best available ISA;
// HLCD_FORCE_SCALAR=1 in the environment pins the scalar kernel.
Isa active_isa() noexcept;
// Throws InvalidArgument if `isa` is not available.
void set_active_isa(Isa isa);

// Min weight over the whole block; requires bits <= 62 and flips.size() >= bits.
unsigned gray_block_min(PackedWord start, std::span<const PackedWord> flips, unsigned bits);

// Min weight over the first `count` codewords of the block (count >= 1).
unsigned gray_prefix_min(PackedWord start, std::span<const PackedWord> flips, std::uint64_t count) noexcept;

// Codeword at position s of the block.
PackedWord gray_codeword_at(PackedWord start, std::span<const PackedWord> flips, std::uint64_t s) noexcept;

namespace scalar {
unsigned gray_block_min(PackedWord start, const PackedWord* flips, unsigned bits) noexcept;
}

namespace avx2 {
// Falls back to the scalar kernel for bits < 4.
unsigned gray_block_min(PackedWord start, const PackedWord* flips, unsigned bits) noexcept;
}

}  // namespace hlcd::kernels
