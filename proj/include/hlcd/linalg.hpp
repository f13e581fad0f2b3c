#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hlcd/field.hpp"

namespace hlcd {

// Row-major dense matrix over GF(4).
class F4Matrix {
public:
    F4Matrix() = default;
    F4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    // Throws DimensionMismatch if rows have unequal lengths.
    static F4Matrix from_rows(std::span<const F4Vector> rows);
    static F4Matrix from_rows(std::initializer_list<F4Vector> rows);
    // One string of symbols per row, e.g. {"10w", "01W"}.
    static F4Matrix parse(std::initializer_list<std::string_view> rows);
    static F4Matrix identity(std::size_t k);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Gf4 operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Gf4& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Gf4> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Gf4> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    F4Vector row_vector(std::size_t r) const { return F4Vector(row(r)); }
    F4Vector column_vector(std::size_t c) const;

    void swap_rows(std::size_t a, std::size_t b) noexcept;
    void append_row(std::span<const Gf4> r);
    bool is_zero() const noexcept;

    // Columns picked in the given order (0-based source indices).
    F4Matrix select_columns(std::span<const std::size_t> cols) const;
    F4Matrix select_rows(std::size_t first, std::size_t count) const;

    std::string to_string() const;  // rows separated by '\n'

    friend bool operator==(const F4Matrix&, const F4Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Gf4> data_;
};

struct RrefResult {
    F4Matrix matrix;                  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // 0-based pivot columns, ascending
};

// Reduced row echelon form. Pivot choice: first nonzero entry top-to-bottom
// in the leftmost unresolved column. Zero rows are dropped from the result,
// so result.matrix.rows() == rank.
RrefResult rref(const F4Matrix& m);
std::size_t rank(const F4Matrix& m);

F4Matrix conj_transpose(const F4Matrix& m);
F4Matrix transpose(const F4Matrix& m);
F4Matrix multiply(const F4Matrix& a, const F4Matrix& b);
// a * conj(b)^T, without materializing the transpose.
F4Matrix gram(const F4Matrix& a, const F4Matrix& b);
inline F4Matrix gram(const F4Matrix& a) { return gram(a, a); }

F4Matrix vstack(const F4Matrix& top, const F4Matrix& bottom);
F4Matrix hstack(const F4Matrix& left, const F4Matrix& right);

// A column permutation: new column j is old column source[j].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> source);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return source_.size(); }
    std::size_t operator[](std::size_t j) const noexcept { return source_[j]; }
    std::span<const std::size_t> source() const noexcept { return source_; }
    bool is_identity() const noexcept;
    Permutation inverse() const;

    F4Matrix apply(const F4Matrix& m) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> source_;
};

struct StandardForm {
    F4Matrix matrix;          // (I_k | A)
    Permutation permutation;  // matrix = RREF(g) with columns permuted
    F4Matrix redundancy() const;  // the k x (n-k) block A
};

// True iff the left k x k block is exactly the identity.
bool is_standard_form(const F4Matrix& g);
// Throws RankDeficient if g does not have full row rank.
StandardForm standard_form(const F4Matrix& g);

}  // namespace hlcd
