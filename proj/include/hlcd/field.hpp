#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hlcd {

// An element of GF(4) = {0, 1, w, w^2} with w^2 + w + 1 = 0.
//
// Encoded in two bits: 0 -> 00, 1 -> 01, w -> 10, w^2 -> 11. Under this
// encoding addition is XOR, and bit 0 / bit 1 are the two planes used by
// the packed kernels.
class Gf4 {
public:
    constexpr Gf4() noexcept = default;

    static constexpr Gf4 zero() noexcept { return Gf4(0); }
    static constexpr Gf4 one() noexcept { return Gf4(1); }
    static constexpr Gf4 omega() noexcept { return Gf4(2); }
    static constexpr Gf4 omega2() noexcept { return Gf4(3); }
    static constexpr Gf4 from_bits(unsigned bits) noexcept { return Gf4(static_cast<std::uint8_t>(bits & 3u)); }

    constexpr std::uint8_t bits() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) noexcept { return Gf4(a.v_ ^ b.v_); }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) noexcept { return a + b; }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) noexcept { return Gf4(kMul[a.v_ * 4 + b.v_]); }
    constexpr Gf4& operator+=(Gf4 o) noexcept { return *this = *this + o; }
    constexpr Gf4& operator*=(Gf4 o) noexcept { return *this = *this * o; }

    friend constexpr bool operator==(Gf4, Gf4) noexcept = default;
    friend constexpr auto operator<=>(Gf4, Gf4) noexcept = default;

    // Frobenius a -> a^2; fixes 0 and 1, swaps w and w^2.
    constexpr Gf4 conj() const noexcept { return Gf4(kConj[v_]); }
    // Multiplicative inverse; inverse of zero is zero.
    constexpr Gf4 inverse() const noexcept { return Gf4(kInv[v_]); }

    // I/O symbols: '0', '1', 'w' (omega), 'W' (omega^2).
    constexpr char symbol() const noexcept { return "01wW"[v_]; }
    static bool from_symbol(char c, Gf4& out) noexcept;

private:
    constexpr explicit Gf4(std::uint8_t v) noexcept : v_(v) {}

    // row = a, column = b, entries in the 2-bit encoding.
    static constexpr std::array<std::uint8_t, 16> kMul = {
        0, 0, 0, 0,  //
        0, 1, 2, 3,  //
        0, 2, 3, 1,  //
        0, 3, 1, 2,
    };
    static constexpr std::array<std::uint8_t, 4> kConj = {0, 1, 3, 2};
    static constexpr std::array<std::uint8_t, 4> kInv = {0, 1, 3, 2};

    std::uint8_t v_ = 0;
};

constexpr Gf4 conj(Gf4 a) noexcept { return a.conj(); }

inline constexpr std::array<Gf4, 4> kAllGf4 = {Gf4::zero(), Gf4::one(), Gf4::omega(), Gf4::omega2()};
inline constexpr std::array<Gf4, 3> kNonzeroGf4 = {Gf4::one(), Gf4::omega(), Gf4::omega2()};

// Dense vector over GF(4).
class F4Vector {
public:
    F4Vector() = default;
    explicit F4Vector(std::size_t length) : entries_(length) {}
    F4Vector(std::initializer_list<Gf4> init) : entries_(init) {}
    explicit F4Vector(std::vector<Gf4> entries) : entries_(std::move(entries)) {}
    explicit F4Vector(std::span<const Gf4> entries) : entries_(entries.begin(), entries.end()) {}

    // Parses a string of 0/1/w/W symbols; whitespace is ignored.
    static F4Vector parse(std::string_view symbols);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Gf4 operator[](std::size_t i) const noexcept { return entries_[i]; }
    Gf4& operator[](std::size_t i) noexcept { return entries_[i]; }

    std::span<const Gf4> span() const noexcept { return entries_; }
    std::span<Gf4> span() noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_zero() const noexcept;
    std::string to_string() const;

    friend bool operator==(const F4Vector&, const F4Vector&) = default;

private:
    std::vector<Gf4> entries_;
};

std::size_t weight(std::span<const Gf4> x) noexcept;
inline std::size_t weight(const F4Vector& x) noexcept { return weight(x.span()); }

// (x, y)_h = sum_i x_i * conj(y_i). Throws LengthMismatch.
Gf4 hermitian_inner(std::span<const Gf4> x, std::span<const Gf4> y);
inline Gf4 hermitian_inner(const F4Vector& x, const F4Vector& y) { return hermitian_inner(x.span(), y.span()); }

F4Vector scale(const F4Vector& v, Gf4 alpha);
F4Vector add(const F4Vector& x, const F4Vector& y);
// x += alpha * y, in place. Throws LengthMismatch.
void axpy(std::span<Gf4> x, Gf4 alpha, std::span<const Gf4> y);

}  // namespace hlcd
