#include "hlcd/transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlcd/errors.hpp"

namespace hlcd {

IsotropicPair::IsotropicPair(F4Vector x, F4Vector y) : x_(std::move(x)), y_(std::move(y)) {
    const IsotropyReport r = check_isotropic(x_, y_);
    if (x_.is_zero() || y_.is_zero()) throw ZeroVector("isotropic pair vectors must be nonzero");
    if (!r.pass) {
        std::string which;
        if (!r.xx.is_zero()) which += " (x,x)_h";
        if (!r.yy.is_zero()) which += " (y,y)_h";
        if (!r.xy.is_zero()) which += " (x,y)_h";
        throw IsotropyViolated("nonzero inner product:" + which, {r.xx.bits(), r.yy.bits(), r.xy.bits()});
    }
}

IsotropyReport check_isotropic(const F4Vector& x, const F4Vector& y) {
    if (x.size() != y.size()) {
        throw LengthMismatch("x has length " + std::to_string(x.size()) + ", y has length " + std::to_string(y.size()));
    }
    IsotropyReport r;
    r.xx = hermitian_inner(x, x);
    r.yy = hermitian_inner(y, y);
    r.xy = hermitian_inner(x, y);
    r.pass = r.xx.is_zero() && r.yy.is_zero() && r.xy.is_zero();
    return r;
}

CoordinateSet::CoordinateSet(std::initializer_list<std::size_t> one_based)
    : CoordinateSet(std::vector<std::size_t>(one_based)) {}

CoordinateSet::CoordinateSet(std::vector<std::size_t> one_based) : indices_(std::move(one_based)) {
    std::sort(indices_.begin(), indices_.end());
    if (!indices_.empty() && indices_.front() == 0) throw InvalidCoordinate("coordinates are 1-based");
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw InvalidCoordinate("duplicate coordinate");
    }
}

bool CoordinateSet::contains(std::size_t one_based) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), one_based);
}

void CoordinateSet::check_range(std::size_t n) const {
    if (!indices_.empty() && indices_.back() > n) {
        throw InvalidCoordinate("coordinate " + std::to_string(indices_.back()) + " exceeds length " + std::to_string(n));
    }
}

LinearCode axy_construct(const LinearCode& c, const IsotropicPair& pair) {
    const F4Matrix& g = c.generator();
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    if (!is_standard_form(g)) throw NotStandardForm("axy_construct needs a generator of the form (I_k | A)");
    if (pair.size() != n - k) {
        throw LengthMismatch("pair length " + std::to_string(pair.size()) + " but n - k = " + std::to_string(n - k));
    }
    F4Matrix out = g;
    for (std::size_t i = 0; i < k; ++i) {
        const auto r = g.row(i).subspan(k);
        const Gf4 ry = hermitian_inner(r, pair.y().span());
        const Gf4 rx = hermitian_inner(r, pair.x().span());
        auto dst = out.row(i).subspan(k);
        axpy(dst, ry, pair.x().span());
        axpy(dst, rx, pair.y().span());  // minus equals plus in characteristic 2
    }
    return LinearCode(std::move(out));
}

namespace {

std::vector<std::size_t> complement(const CoordinateSet& t, std::size_t n) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < n; ++c)
        if (!t.contains(c + 1)) keep.push_back(c);
    return keep;
}

void check_deletable(const CoordinateSet& t, std::size_t n) {
    t.check_range(n);
    if (t.size() >= n) throw AllCoordinatesDeleted("cannot delete all " + std::to_string(n) + " coordinates");
}

}  // namespace

LinearCode puncture(const LinearCode& c, const CoordinateSet& t) {
    check_deletable(t, c.length());
    return LinearCode::span_of(c.generator().select_columns(complement(t, c.length())));
}

LinearCode shorten(const LinearCode& c, const CoordinateSet& t) {
    const std::size_t n = c.length();
    check_deletable(t, n);
    // Eliminate on the T columns first; rows with no pivot there vanish on T.
    std::vector<std::size_t> order;
    for (std::size_t i : t.indices()) order.push_back(i - 1);
    const std::vector<std::size_t> keep = complement(t, n);
    order.insert(order.end(), keep.begin(), keep.end());

    const RrefResult reduced = rref(c.generator().select_columns(order));
    F4Matrix sub(0, keep.size());
    for (std::size_t r = 0; r < reduced.matrix.rows(); ++r) {
        if (reduced.pivots[r] < t.size()) continue;
        sub.append_row(reduced.matrix.row(r).subspan(t.size()));
    }
    return LinearCode::span_of(sub);
}

DerivativeLcd derivative_lcd(const LinearCode& c, std::size_t i) {
    const CoordinateSet t{i};
    return {is_lcd(puncture(c, t)), is_lcd(shorten(c, t))};
}

LcdDerivative lcd_exactly_one(const LinearCode& c, std::size_t i, const MinWeightOptions& options) {
    if (c.dimension() == 0) throw PreconditionViolated("the zero code has no minimum weight");
    if (!is_lcd(c)) throw PreconditionViolated("code is not Hermitian LCD");
    const std::size_t d = exact_min_weight(c, options);
    if (d < 2) throw PreconditionViolated("minimum weight d = " + std::to_string(d) + " < 2");
    const LinearCode dual = hermitian_dual(c);
    if (dual.dimension() > 0) {
        const std::size_t dd = exact_min_weight(dual, options);
        if (dd < 2) throw PreconditionViolated("dual minimum weight = " + std::to_string(dd) + " < 2");
    }
    const DerivativeLcd r = derivative_lcd(c, i);
    if (r.punctured == r.shortened) {
        throw std::logic_error("exactly-one property failed at coordinate " + std::to_string(i));
    }
    return r.punctured ? LcdDerivative::Punctured : LcdDerivative::Shortened;
}

namespace {

// A vector of the row space with (v,v)_h = 1, i.e. of odd weight. If every
// row is even, some r_i + a r_j is odd unless all (r_i, r_j)_h vanish, in
// which case the space is self-orthogonal.
bool find_odd_vector(const F4Matrix& rows, F4Vector& out) {
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        if (weight(rows.row(i)) % 2 == 1) {
            out = rows.row_vector(i);
            return true;
        }
    }
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = i + 1; j < rows.rows(); ++j)
            for (Gf4 a : kNonzeroGf4) {
                F4Vector v = rows.row_vector(i);
                axpy(v.span(), a, rows.row(j));
                if (weight(v) % 2 == 1) {
                    out = std::move(v);
                    return true;
                }
            }
    return false;
}

}  // namespace

F4Matrix orthonormalize(const LinearCode& c) {
    const std::size_t n = c.length();
    F4Matrix rest = c.generator();
    F4Matrix out(0, n);
    while (rest.rows() > 0) {
        F4Vector v;
        if (!find_odd_vector(rest, v)) {
            throw NotLcd("a " + std::to_string(rest.rows()) +
                         "-dimensional subspace of the code is Hermitian self-orthogonal");
        }
        out.append_row(v.span());
        // r -> r - (r,v)_h v projects onto the orthogonal complement of v.
        for (std::size_t r = 0; r < rest.rows(); ++r) {
            const Gf4 coeff = hermitian_inner(rest.row(r), v.span());
            axpy(rest.row(r), coeff, v.span());
        }
        const std::size_t expected = rest.rows() - 1;
        rest = rref(rest).matrix;
        if (rest.rows() != expected) throw std::logic_error("orthonormalize: projection lost a dimension");
    }
    return out;
}

ParityReport lcd_column_parity(const F4Matrix& orthonormal) {
    ParityReport report{orthonormal, {}};
    for (std::size_t col = 0; col < orthonormal.cols(); ++col) {
        ColumnParity p;
        p.coordinate = col + 1;
        p.column_weight = weight(orthonormal.column_vector(col));
        p.puncture_lcd = p.column_weight % 2 == 0;
        p.shorten_lcd = !p.puncture_lcd;
        report.columns.push_back(p);
    }
    return report;
}

ParityReport lcd_column_parity(const LinearCode& c) { return lcd_column_parity(orthonormalize(c)); }

}  // namespace hlcd
