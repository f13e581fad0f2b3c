#include <doctest.h>

#include <set>

#include "hlcd/code.hpp"
#include "hlcd/errors.hpp"
#include "hlcd/linalg.hpp"
#include "support/generators.hpp"

using namespace hlcd;

namespace {

// Rank from the size of the row space: |rowspace| = 4^rank.
std::size_t rank_by_span(const F4Matrix& m) {
    std::set<std::string> seen;
    const std::uint64_t total = std::uint64_t{1} << (2 * m.rows());
    for (std::uint64_t c = 0; c < total; ++c) {
        F4Vector v(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) axpy(v.span(), Gf4::from_bits(static_cast<unsigned>(c >> (2 * r))), m.row(r));
        seen.insert(v.to_string());
    }
    std::size_t r = 0;
    for (std::size_t size = seen.size(); size > 1; size /= 4) ++r;
    return r;
}

}  // namespace

TEST_CASE("rref examples") {
    const F4Matrix id = F4Matrix::identity(4);
    const RrefResult r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});

    const F4Matrix repeated = F4Matrix::parse({"1w0W", "01ww", "1w0W"});
    CHECK(rref(repeated).matrix.rows() == 2);

    const F4Matrix scalar = F4Matrix::parse({"1w0", "wW0"});
    CHECK(rank(scalar) == 1);
    CHECK(rref(scalar).matrix == F4Matrix::parse({"1w0"}));
}

TEST_CASE("rref normalizes pivots and clears pivot columns") {
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
        const F4Matrix m = rng.matrix(testing::uniform(rng, 1, 6), testing::uniform(rng, 1, 9));
        const RrefResult r = rref(m);
        REQUIRE(r.pivots.size() == r.matrix.rows());
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            if (i > 0) CHECK(r.pivots[i] > r.pivots[i - 1]);
            for (std::size_t c = 0; c < r.pivots[i]; ++c) CHECK(r.matrix(i, c).is_zero());
            for (std::size_t j = 0; j < r.matrix.rows(); ++j)
                CHECK(r.matrix(j, r.pivots[i]) == (i == j ? Gf4::one() : Gf4::zero()));
        }
        CHECK(rref(r.matrix).matrix == r.matrix);
    }
}

TEST_CASE("rank examples and oracle") {
    CHECK(rank(F4Matrix(3, 5)) == 0);
    CHECK(rank(F4Matrix::identity(6)) == 6);
    Rng rng(22);
    for (int t = 0; t < 200; ++t) {
        const F4Matrix m = rng.matrix(testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 7));
        const std::size_t r = rank(m);
        CHECK(r == rank_by_span(m));
        CHECK(r == rank(conj_transpose(m)));
        CHECK(r == rank(transpose(m)));
        CHECK(r <= std::min(m.rows(), m.cols()));
    }
}

TEST_CASE("conj_transpose") {
    const F4Matrix binary = F4Matrix::parse({"101", "011"});
    CHECK(conj_transpose(binary) == transpose(binary));
    CHECK(conj_transpose(F4Matrix::parse({"w"})) == F4Matrix::parse({"W"}));
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const F4Matrix m = rng.matrix(testing::uniform(rng, 1, 6), testing::uniform(rng, 1, 6));
        CHECK(conj_transpose(conj_transpose(m)) == m);
    }
}

TEST_CASE("multiply") {
    Rng rng(24);
    const F4Matrix a = rng.matrix(3, 4);
    CHECK(multiply(a, F4Matrix::identity(4)) == a);
    CHECK(multiply(a, F4Matrix(4, 2)).is_zero());
    const F4Matrix v = F4Matrix::parse({"wW"});
    CHECK(multiply(v, conj_transpose(v)) == F4Matrix::parse({"0"}));
    CHECK_THROWS_AS(multiply(a, a), DimensionMismatch);
    for (int t = 0; t < 100; ++t) {
        const std::size_t p = testing::uniform(rng, 1, 5), q = testing::uniform(rng, 1, 5);
        const std::size_t r = testing::uniform(rng, 1, 5), s = testing::uniform(rng, 1, 5);
        const F4Matrix x = rng.matrix(p, q), y = rng.matrix(q, r), z = rng.matrix(r, s);
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("gram entries are inner products of rows") {
    Rng rng(25);
    for (int t = 0; t < 50; ++t) {
        const F4Matrix a = rng.matrix(testing::uniform(rng, 1, 5), 7);
        const F4Matrix b = rng.matrix(testing::uniform(rng, 1, 5), 7);
        const F4Matrix g = gram(a, b);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < b.rows(); ++j) CHECK(g(i, j) == hermitian_inner(a.row(i), b.row(j)));
        CHECK(gram(a) == multiply(a, conj_transpose(a)));
    }
}

TEST_CASE("stacking and selection") {
    const F4Matrix a = F4Matrix::parse({"1w", "0W"});
    const F4Matrix b = F4Matrix::parse({"11"});
    CHECK(vstack(a, b) == F4Matrix::parse({"1w", "0W", "11"}));
    CHECK(hstack(a, F4Matrix::identity(2)) == F4Matrix::parse({"1w10", "0W01"}));
    CHECK_THROWS_AS(hstack(a, b), DimensionMismatch);
    const std::vector<std::size_t> cols{1};
    CHECK(a.select_columns(cols) == F4Matrix::parse({"w", "W"}));
    CHECK(a.column_vector(1) == F4Vector::parse("wW"));
}

TEST_CASE("permutations") {
    const Permutation p(std::vector<std::size_t>{2, 0, 1});
    const F4Matrix m = F4Matrix::parse({"1wW"});
    CHECK(p.apply(m) == F4Matrix::parse({"W1w"}));
    CHECK(p.inverse().apply(p.apply(m)) == m);
    CHECK(Permutation::identity(3).is_identity());
    CHECK_FALSE(p.is_identity());
    CHECK_THROWS(Permutation(std::vector<std::size_t>{0, 0}));
}

TEST_CASE("standard form examples") {
    const F4Matrix sys = F4Matrix::parse({"10w1", "01WW"});
    CHECK(is_standard_form(sys));
    const StandardForm a = standard_form(sys);
    CHECK(a.permutation.is_identity());
    CHECK(a.matrix == sys);
    CHECK(a.redundancy() == F4Matrix::parse({"w1", "WW"}));

    const F4Matrix zero_first = F4Matrix::parse({"01w", "001"});
    CHECK_FALSE(is_standard_form(zero_first));
    const StandardForm b = standard_form(zero_first);
    CHECK(b.permutation[0] == 1);
    CHECK(is_standard_form(b.matrix));
    CHECK_THROWS_AS(standard_form(F4Matrix::parse({"1w", "wW"})), RankDeficient);
}

TEST_CASE("standard form preserves the code up to the recorded permutation") {
    Rng rng(26);
    for (int t = 0; t < 200; ++t) {
        const LinearCode c = testing::random_code(rng, 12);
        const StandardForm sf = standard_form(c.generator());
        CHECK(is_standard_form(sf.matrix));
        const F4Matrix back = sf.permutation.inverse().apply(sf.matrix);
        CHECK(rref(back).matrix == c.canonical());
        CHECK(LinearCode(sf.permutation.apply(c.generator())) == LinearCode(sf.matrix));
    }
}

TEST_CASE("hull dimension is invariant under standard form") {
    Rng rng(27);
    for (int t = 0; t < 100; ++t) {
        const LinearCode c = testing::random_code(rng, 12);
        CHECK(hull_dim(LinearCode(standard_form(c.generator()).matrix)) == hull_dim(c));
    }
}
