#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hlcd/code.hpp"

namespace hlcd {

// Nonzero x, y of equal length with (x,x)_h = (y,y)_h = (x,y)_h = 0.
class IsotropicPair {
public:
    // Throws LengthMismatch, ZeroVector, or IsotropyViolated.
    IsotropicPair(F4Vector x, F4Vector y);

    const F4Vector& x() const noexcept { return x_; }
    const F4Vector& y() const noexcept { return y_; }
    std::size_t size() const noexcept { return x_.size(); }

private:
    F4Vector x_;
    F4Vector y_;
};

struct IsotropyReport {
    Gf4 xx;
    Gf4 yy;
    Gf4 xy;
    bool pass = false;
};

// Throws LengthMismatch.
IsotropyReport check_isotropic(const F4Vector& x, const F4Vector& y);

// Sorted, distinct, 1-based coordinates.
class CoordinateSet {
public:
    CoordinateSet() = default;
    // Throws InvalidCoordinate on 0 or duplicates.
    CoordinateSet(std::initializer_list<std::size_t> one_based);
    explicit CoordinateSet(std::vector<std::size_t> one_based);

    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    bool contains(std::size_t one_based) const noexcept;
    // Throws InvalidCoordinate if any index exceeds n.
    void check_range(std::size_t n) const;

private:
    std::vector<std::size_t> indices_;
};

// Generator (I_k | A(x,y)) where row i of A(x,y) is r_i + (r_i,y)_h x + (r_i,x)_h y.
// c.generator() must already be (I_k | A); pair length must be n - k.
// Throws NotStandardForm, LengthMismatch.
LinearCode axy_construct(const LinearCode& c, const IsotropicPair& pair);

// Delete the coordinates in t. Throws AllCoordinatesDeleted if t covers every coordinate.
LinearCode puncture(const LinearCode& c, const CoordinateSet& t);
// Keep codewords vanishing on t, then delete t.
LinearCode shorten(const LinearCode& c, const CoordinateSet& t);

enum class LcdDerivative { Punctured, Shortened };

struct DerivativeLcd {
    bool punctured = false;
    bool shortened = false;
};

// Direct LCD check of C^i and C_i, no precondition (1-based i).
DerivativeLcd derivative_lcd(const LinearCode& c, std::size_t i);

// Which of C^i, C_i is LCD. Requires c LCD with d >= 2 and d^⊥h >= 2,
// otherwise PreconditionViolated names the failed condition.
LcdDerivative lcd_exactly_one(const LinearCode& c, std::size_t i, const MinWeightOptions& options = {});

// Generator G of the same code with G * conj(G)^T = I_k. Throws NotLcd.
F4Matrix orthonormalize(const LinearCode& c);

struct ColumnParity {
    std::size_t coordinate = 0;  // 1-based
    std::size_t column_weight = 0;
    bool puncture_lcd = false;   // predicted: column weight even
    bool shorten_lcd = false;    // predicted: column weight odd
};

struct ParityReport {
    F4Matrix orthonormal;
    std::vector<ColumnParity> columns;
};

// Per-coordinate LCD predictions from the column weights of an orthonormal generator.
ParityReport lcd_column_parity(const LinearCode& c);
ParityReport lcd_column_parity(const F4Matrix& orthonormal);

}  // namespace hlcd
