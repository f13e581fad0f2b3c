#include "hlcd/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "hlcd/errors.hpp"

namespace hlcd {

F4Matrix F4Matrix::from_rows(std::span<const F4Vector> rows) {
    if (rows.empty()) return {};
    F4Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw DimensionMismatch("row " + std::to_string(r + 1) + " has length " +
                                    std::to_string(rows[r].size()) + ", expected " + std::to_string(m.cols_));
        }
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

F4Matrix F4Matrix::from_rows(std::initializer_list<F4Vector> rows) {
    return from_rows(std::span<const F4Vector>(rows.begin(), rows.size()));
}

F4Matrix F4Matrix::parse(std::initializer_list<std::string_view> rows) {
    std::vector<F4Vector> v;
    for (auto r : rows) v.push_back(F4Vector::parse(r));
    return from_rows(v);
}

F4Matrix F4Matrix::identity(std::size_t k) {
    F4Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = Gf4::one();
    return m;
}

F4Vector F4Matrix::column_vector(std::size_t c) const {
    F4Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void F4Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void F4Matrix::append_row(std::span<const Gf4> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionMismatch("append_row: length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

bool F4Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Gf4 a) { return a.is_zero(); });
}

F4Matrix F4Matrix::select_columns(std::span<const std::size_t> cols) const {
    F4Matrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
    return out;
}

F4Matrix F4Matrix::select_rows(std::size_t first, std::size_t count) const {
    F4Matrix out(count, cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, out.data_.begin());
    return out;
}

std::string F4Matrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (Gf4 a : row(r)) s.push_back(a.symbol());
        s.push_back('\n');
    }
    return s;
}

RrefResult rref(const F4Matrix& input) {
    F4Matrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t p = lead;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, lead);
        const Gf4 inv = m(lead, c).inverse();
        for (Gf4& a : m.row(lead)) a *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            axpy(m.row(r), m(r, c), m.row(lead));
        }
        pivots.push_back(c);
        ++lead;
    }
    return {m.select_rows(0, lead), std::move(pivots)};
}

std::size_t rank(const F4Matrix& m) { return rref(m).pivots.size(); }

F4Matrix conj_transpose(const F4Matrix& m) {
    F4Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
    return out;
}

F4Matrix transpose(const F4Matrix& m) {
    F4Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    return out;
}

F4Matrix multiply(const F4Matrix& a, const F4Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    F4Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Gf4 x = a(i, l);
            if (x.is_zero()) continue;
            axpy(out.row(i), x, b.row(l));
        }
    return out;
}

F4Matrix gram(const F4Matrix& a, const F4Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("gram: column counts differ");
    F4Matrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) out(i, j) = hermitian_inner(a.row(i), b.row(j));
    return out;
}

F4Matrix vstack(const F4Matrix& top, const F4Matrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
    F4Matrix out = top;
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
    return out;
}

F4Matrix hstack(const F4Matrix& left, const F4Matrix& right) {
    if (left.rows() != right.rows()) throw DimensionMismatch("hstack: row counts differ");
    F4Matrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        std::copy(left.row(r).begin(), left.row(r).end(), out.row(r).begin());
        std::copy(right.row(r).begin(), right.row(r).end(), out.row(r).begin() + static_cast<std::ptrdiff_t>(left.cols()));
    }
    return out;
}

Permutation::Permutation(std::vector<std::size_t> source) : source_(std::move(source)) {
    std::vector<bool> seen(source_.size(), false);
    for (std::size_t s : source_) {
        if (s >= source_.size() || seen[s]) throw InvalidArgument("not a permutation");
        seen[s] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), std::size_t{0});
    return Permutation(std::move(s));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t j = 0; j < source_.size(); ++j)
        if (source_[j] != j) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(source_.size());
    for (std::size_t j = 0; j < source_.size(); ++j) inv[source_[j]] = j;
    return Permutation(std::move(inv));
}

F4Matrix Permutation::apply(const F4Matrix& m) const {
    if (m.cols() != source_.size()) throw DimensionMismatch("permutation size differs from column count");
    return m.select_columns(source_);
}

F4Matrix StandardForm::redundancy() const {
    const std::size_t k = matrix.rows();
    std::vector<std::size_t> cols(matrix.cols() - k);
    std::iota(cols.begin(), cols.end(), k);
    return matrix.select_columns(cols);
}

bool is_standard_form(const F4Matrix& g) {
    if (g.rows() > g.cols()) return false;
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.rows(); ++c)
            if (g(r, c) != (r == c ? Gf4::one() : Gf4::zero())) return false;
    return true;
}

StandardForm standard_form(const F4Matrix& g) {
    auto [reduced, pivots] = rref(g);
    if (pivots.size() != g.rows()) {
        throw RankDeficient("generator matrix has rank " + std::to_string(pivots.size()) + " < " +
                            std::to_string(g.rows()) + " rows");
    }
    // Pivot columns first, then the rest, each in ascending order.
    std::vector<std::size_t> order = pivots;
    std::vector<bool> is_pivot(g.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!is_pivot[c]) order.push_back(c);
    Permutation perm(std::move(order));
    return {perm.apply(reduced), std::move(perm)};
}

}  // namespace hlcd
