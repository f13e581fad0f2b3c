#include "hlcd/code.hpp"

#include "hlcd/errors.hpp"

namespace hlcd {

LinearCode::LinearCode(std::size_t n, F4Matrix generator, RrefResult reduced)
    : n_(n), generator_(std::move(generator)), canonical_(std::move(reduced.matrix)), pivots_(std::move(reduced.pivots)) {}

LinearCode::LinearCode(F4Matrix generator) {
    RrefResult reduced = rref(generator);
    if (reduced.pivots.size() != generator.rows()) {
        throw RankDeficient("generator matrix has rank " + std::to_string(reduced.pivots.size()) + " but " +
                            std::to_string(generator.rows()) + " rows");
    }
    n_ = generator.cols();
    generator_ = std::move(generator);
    canonical_ = std::move(reduced.matrix);
    pivots_ = std::move(reduced.pivots);
}

LinearCode LinearCode::zero_code(std::size_t n) { return LinearCode(n, F4Matrix(0, n), RrefResult{F4Matrix(0, n), {}}); }

LinearCode LinearCode::span_of(const F4Matrix& m) {
    RrefResult reduced = rref(m);
    if (reduced.pivots.empty()) return zero_code(m.cols());
    F4Matrix g = reduced.matrix;
    return LinearCode(m.cols(), std::move(g), std::move(reduced));
}

LinearCode hermitian_dual(const LinearCode& c) {
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    if (k == 0) return LinearCode(F4Matrix::identity(n));
    if (k == n) return LinearCode::zero_code(n);

    // In standard-form coordinates C = rowspace(I | A) and C^⊥h = rowspace(conj(A)^T | I).
    const StandardForm sf = standard_form(c.canonical());
    const F4Matrix a = sf.redundancy();
    const F4Matrix h_perm = hstack(conj_transpose(a), F4Matrix::identity(n - k));
    return LinearCode(sf.permutation.inverse().apply(h_perm));
}

std::size_t hull_dim(const LinearCode& c) { return c.dimension() - rank(gram(c.generator())); }

std::size_t hull_dim_oracle(const LinearCode& c) {
    const LinearCode dual = hermitian_dual(c);
    const std::size_t sum_rank = rank(vstack(c.generator(), dual.generator()));
    return c.dimension() + dual.dimension() - sum_rank;
}

bool is_lcd(const LinearCode& c) { return rank(gram(c.generator())) == c.dimension(); }

bool is_even(const LinearCode& c) {
    const F4Matrix& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (weight(g.row(i)) % 2 != 0) return false;
        for (std::size_t j = i + 1; j < g.rows(); ++j)
            if (!hermitian_inner(g.row(i), g.row(j)).is_zero()) return false;
    }
    return true;
}

bool is_self_dual(const LinearCode& c) { return 2 * c.dimension() == c.length() && is_even(c); }

CodeSummary summarize(const LinearCode& c, const MinWeightOptions& options) {
    CodeSummary s;
    s.n = c.length();
    s.k = c.dimension();
    if (s.k > 0) {
        const MinWeightResult r = min_weight(c, options);
        s.d = r.weight;
        s.d_exact = r.exact;
    }
    const LinearCode dual = hermitian_dual(c);
    if (dual.dimension() > 0) {
        const MinWeightResult r = min_weight(dual, options);
        s.d_dual = r.weight;
        s.d_dual_exact = r.exact;
    }
    s.hull_dim = hull_dim(c);
    s.is_lcd = s.hull_dim == 0;
    s.is_even = is_even(c);
    return s;
}

}  // namespace hlcd
