#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

#include "hlcd/errors.hpp"
#include "hlcd/kernels.hpp"

namespace hlcd {

PackedWord pack(std::span<const Gf4> x) noexcept {
    PackedWord v;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::uint64_t b = x[i].bits();
        v.lo |= (b & 1u) << i;
        v.hi |= (b >> 1) << i;
    }
    return v;
}

F4Vector unpack(PackedWord v, std::size_t length) {
    F4Vector out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out[i] = Gf4::from_bits(static_cast<unsigned>(((v.lo >> i) & 1u) | (((v.hi >> i) & 1u) << 1)));
    }
    return out;
}

}  // namespace hlcd

namespace hlcd::kernels {

namespace {

Isa detect_default() noexcept {
    if (const char* env = std::getenv("HLCD_FORCE_SCALAR"); env != nullptr && std::string(env) == "1") {
        return Isa::Scalar;
    }
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& active() noexcept {
    static std::atomic<Isa> isa{detect_default()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(HLCD_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_available(isa)) throw InvalidArgument(std::string("kernel ISA not available: ") + std::string(isa_name(isa)));
    active().store(isa, std::memory_order_relaxed);
}

unsigned gray_block_min(PackedWord start, std::span<const PackedWord> flips, unsigned bits) {
    if (bits > 62 || flips.size() < bits) throw InvalidArgument("gray_block_min: bad block size");
    switch (active_isa()) {
        case Isa::Avx2: return avx2::gray_block_min(start, flips.data(), bits);
        case Isa::Scalar: break;
    }
    return scalar::gray_block_min(start, flips.data(), bits);
}

unsigned gray_prefix_min(PackedWord start, std::span<const PackedWord> flips, std::uint64_t count) noexcept {
    PackedWord cw = start;
    unsigned best = packed_weight(cw);
    for (std::uint64_t s = 1; s < count; ++s) {
        cw ^= flips[std::countr_zero(s)];
        const unsigned w = packed_weight(cw);
        best = w < best ? w : best;
    }
    return best;
}

PackedWord gray_codeword_at(PackedWord start, std::span<const PackedWord> flips, std::uint64_t s) noexcept {
    std::uint64_t g = s ^ (s >> 1);
    PackedWord cw = start;
    while (g != 0) {
        cw ^= flips[std::countr_zero(g)];
        g &= g - 1;
    }
    return cw;
}

}  // namespace hlcd::kernels
