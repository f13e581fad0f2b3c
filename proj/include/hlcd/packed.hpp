#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

#include "hlcd/field.hpp"

namespace hlcd {

// A GF(4) vector of length <= 64 stored as two bit planes: bit i of `lo`
// is bit 0 of coordinate i, bit i of `hi` is bit 1. Addition is XOR of both
// planes; the Hamming weight is popcount(lo | hi).
struct PackedWord {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    friend constexpr PackedWord operator^(PackedWord a, PackedWord b) noexcept { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
    constexpr PackedWord& operator^=(PackedWord o) noexcept {
        lo ^= o.lo;
        hi ^= o.hi;
        return *this;
    }
    friend constexpr bool operator==(PackedWord, PackedWord) noexcept = default;
};

inline constexpr std::size_t kMaxPackedLength = 64;

constexpr unsigned packed_weight(PackedWord v) noexcept { return static_cast<unsigned>(std::popcount(v.lo | v.hi)); }

// w * (h, l) = (h ^ l, h) coordinatewise.
constexpr PackedWord mul_omega(PackedWord v) noexcept { return {v.hi, v.hi ^ v.lo}; }

constexpr PackedWord mul(PackedWord v, Gf4 a) noexcept {
    switch (a.bits()) {
        case 0: return {};
        case 1: return v;
        case 2: return mul_omega(v);
        default: return mul_omega(mul_omega(v));
    }
}

// Requires x.size() <= kMaxPackedLength.
PackedWord pack(std::span<const Gf4> x) noexcept;
F4Vector unpack(PackedWord v, std::size_t length);

}  // namespace hlcd
