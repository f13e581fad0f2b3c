#include <doctest.h>

#include <set>

#include "hlcd/errors.hpp"
#include "hlcd/search.hpp"
#include "support/generators.hpp"

using namespace hlcd;

namespace {

CodeSummary lcd_summary(std::size_t n, std::size_t k, std::size_t d) {
    CodeSummary s;
    s.n = n;
    s.k = k;
    s.d = d;
    s.is_lcd = true;
    return s;
}

}  // namespace

TEST_CASE("rng streams are reproducible and distinct") {
    Rng a = Rng::derive(1, 2, 3);
    Rng b = Rng::derive(1, 2, 3);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    std::set<std::uint64_t> firsts;
    for (std::uint64_t s = 0; s < 4; ++s)
        for (std::uint64_t st = 0; st < 4; ++st)
            for (std::uint64_t i = 0; i < 4; ++i) firsts.insert(Rng::derive(s, st, i).next());
    CHECK(firsts.size() == 64);
}

TEST_CASE("rng helpers") {
    Rng rng(71);
    std::array<int, 4> counts{};
    for (int i = 0; i < 40000; ++i) ++counts[rng.symbol().bits()];
    for (int c : counts) CHECK(std::abs(c - 10000) < 600);
    for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
    CHECK(rng.below(1) == 0);
    CHECK(rng.vector(9).size() == 9);
    const F4Matrix m = rng.matrix(3, 5);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 5);
}

TEST_CASE("random LCD codes") {
    Rng rng(72);
    bool saw_unit = false;
    for (int i = 0; i < 50; ++i) {
        const LinearCode c = random_lcd(2, 1, rng);
        CHECK(is_lcd(c));
        saw_unit = saw_unit || c == LinearCode(F4Matrix::parse({"10"}));
    }
    CHECK(saw_unit);
    for (int i = 0; i < 1000; ++i) {
        const LinearCode c = random_lcd(12, 6, rng);
        CHECK(is_lcd(c));
        CHECK(is_standard_form(c.generator()));
    }
    Rng x(5), y(5);
    CHECK(random_lcd(10, 4, x) == random_lcd(10, 4, y));
    CHECK_THROWS_AS(random_lcd(3, 0, rng), InvalidArgument);
    CHECK_THROWS_AS(random_lcd(3, 4, rng), InvalidArgument);
    CHECK(random_lcd(5, 5, rng) == LinearCode(F4Matrix::identity(5)));
}

TEST_CASE("isotropic pair sampling") {
    Rng rng(73);
    CHECK_THROWS_AS(sample_isotropic_pair(1, rng), NoPairExists);
    CHECK_THROWS_AS(sample_isotropic_pair(0, rng), NoPairExists);
    for (int i = 0; i < 100; ++i) {
        // At length 2 the only isotropic vectors are the multiples of (a, b) with a, b != 0,
        // and y must be a multiple of x.
        const IsotropicPair p = sample_isotropic_pair(2, rng);
        CHECK(weight(p.x()) == 2);
        bool multiple = false;
        for (Gf4 a : kNonzeroGf4) multiple = multiple || scale(p.x(), a) == p.y();
        CHECK(multiple);
    }
    for (int i = 0; i < 1000; ++i) {
        const IsotropicPair p = sample_isotropic_pair(10, rng);
        CHECK(check_isotropic(p.x(), p.y()).pass);
    }
}

TEST_CASE("strategy names") {
    for (Strategy s : {Strategy::Random, Strategy::AxyNeighborhood, Strategy::PunctureShorten})
        CHECK(parse_strategy(strategy_name(s)) == s);
    CHECK(strategy_name(Strategy::PunctureShorten) == "puncture-shorten");
    CHECK_THROWS_AS(parse_strategy("greedy"), InvalidArgument);
}

TEST_CASE("search with target 1 takes the first candidate") {
    SearchConfig cfg;
    cfg.n = 10;
    cfg.k = 5;
    cfg.target_d = 1;
    cfg.seed = 3;
    cfg.budget = 10;
    const SearchResult r = search(cfg);
    REQUIRE(r.found);
    CHECK(r.candidates_tried == 1);
    CHECK(is_lcd(*r.found));
}

TEST_CASE("random search reaches [12,8,4] within 10^5 candidates") {
    SearchConfig cfg;
    cfg.n = 12;
    cfg.k = 8;
    cfg.target_d = 4;
    cfg.seed = 27;
    cfg.budget = 100000;
    const SearchResult r = search(cfg);
    REQUIRE(r.found);
    REQUIRE(r.summary);
    CHECK(r.summary->d == 4);
    CHECK(r.summary->d_exact);
    CHECK(r.summary->is_lcd);
    CHECK(min_weight_oracle(*r.found) == 4);
    CHECK(r.candidates_tried <= cfg.budget);
}

TEST_CASE("unsuccessful search reports the best weight seen") {
    SearchConfig cfg;
    cfg.n = 8;
    cfg.k = 4;
    cfg.target_d = 5;  // no [8,4,5] code over GF(4) exists
    cfg.seed = 1;
    cfg.budget = 300;
    const SearchResult r = search(cfg);
    CHECK_FALSE(r.found);
    CHECK_FALSE(r.summary);
    CHECK(r.candidates_tried == 300);
    CHECK(r.best_d >= 3);
    CHECK(r.best_d <= 4);
}

TEST_CASE("search results do not depend on the thread count") {
    for (Strategy s : {Strategy::Random, Strategy::AxyNeighborhood, Strategy::PunctureShorten}) {
        CAPTURE(strategy_name(s));
        SearchConfig cfg;
        cfg.n = 10;
        cfg.k = 5;
        cfg.target_d = 5;
        cfg.seed = 9;
        cfg.budget = 2000;
        cfg.strategy = s;
        cfg.plateau_cap = 10;
        cfg.threads = 1;
        const SearchResult one = search(cfg);
        cfg.threads = 3;
        const SearchResult three = search(cfg);
        CHECK(one.candidates_tried == three.candidates_tried);
        CHECK(one.best_d == three.best_d);
        CHECK(one.found.has_value() == three.found.has_value());
        if (one.found && three.found) {
            CHECK(one.found->generator() == three.found->generator());
            CHECK(*one.summary == *three.summary);
        }
    }
}

TEST_CASE("found codes are LCD with exact weight at least the target") {
    Rng pick(74);
    for (Strategy s : {Strategy::Random, Strategy::AxyNeighborhood, Strategy::PunctureShorten}) {
        for (int t = 0; t < 4; ++t) {
            SearchConfig cfg;
            cfg.n = testing::uniform(pick, 6, 11);
            cfg.k = testing::uniform(pick, 2, cfg.n - 3);
            cfg.target_d = 2;
            cfg.seed = pick.next();
            cfg.budget = 500;
            cfg.strategy = s;
            const SearchResult r = search(cfg);
            if (!r.found) continue;
            CHECK(r.found->length() == cfg.n);
            CHECK(r.found->dimension() == cfg.k);
            CHECK(is_lcd(*r.found));
            CHECK(r.summary->d_exact);
            CHECK(*r.summary->d >= cfg.target_d);
            if (cfg.k <= 8) CHECK(min_weight_oracle(*r.found) == *r.summary->d);
        }
    }
}

TEST_CASE("axy search climbs within the orbit of a supplied base") {
    Rng rng(75);
    SearchConfig cfg;
    cfg.n = 12;
    cfg.k = 6;
    cfg.seed = 4;
    cfg.budget = 20000;
    cfg.strategy = Strategy::AxyNeighborhood;
    const LinearCode base(standard_form(random_lcd(12, 6, rng).generator()).matrix);
    REQUIRE(min_weight(base).weight == 2);
    cfg.bases.push_back(base);
    cfg.target_d = 3;
    const SearchResult r = search(cfg);
    REQUIRE(r.found);
    CHECK(r.candidates_tried > 1);
    CHECK(*r.summary->d >= 3);
    CHECK(is_standard_form(r.found->generator()));
    // Every A(x,y) move keeps G conj(G)^T, so the result stays in the base's orbit.
    CHECK(gram(r.found->generator()) == gram(base.generator()));
}

TEST_CASE("axy search from random starts") {
    SearchConfig cfg;
    cfg.n = 12;
    cfg.k = 6;
    cfg.target_d = 5;
    cfg.seed = 4;
    cfg.budget = 20000;
    cfg.strategy = Strategy::AxyNeighborhood;
    const SearchResult r = search(cfg);
    REQUIRE(r.found);
    CHECK(is_lcd(*r.found));
    CHECK(*r.summary->d >= 5);
}

TEST_CASE("puncture-shorten search derives from longer parents") {
    Rng rng(76);
    SearchConfig cfg;
    cfg.n = 11;
    cfg.k = 5;
    cfg.target_d = 4;
    cfg.seed = 1;
    cfg.budget = 5000;
    cfg.strategy = Strategy::PunctureShorten;
    const SearchResult r = search(cfg);
    REQUIRE(r.found);
    CHECK(r.found->length() == 11);
    CHECK(r.found->dimension() == 5);
    CHECK(is_lcd(*r.found));
    CHECK(*r.summary->d >= 4);
}

TEST_CASE("puncture-shorten search accepts non-LCD parents") {
    Rng rng(77);
    SearchConfig cfg;
    cfg.n = 9;
    cfg.k = 4;
    cfg.target_d = 1;
    cfg.seed = 1;
    cfg.budget = 100;
    cfg.strategy = Strategy::PunctureShorten;
    cfg.bases.push_back(testing::random_code_with_hull(10, 4, 2, rng));
    const SearchResult r = search(cfg);
    if (r.found) CHECK(is_lcd(*r.found));
    CHECK(r.candidates_tried <= 10);
}

TEST_CASE("invalid search configurations") {
    SearchConfig cfg;
    cfg.n = 6;
    cfg.k = 0;
    CHECK_THROWS_AS(search(cfg), InvalidArgument);
    cfg.k = 7;
    CHECK_THROWS_AS(search(cfg), InvalidArgument);
    cfg.k = 5;
    cfg.strategy = Strategy::AxyNeighborhood;
    CHECK_THROWS_AS(search(cfg), InvalidArgument);  // n - k < 2
    cfg.k = 3;
    cfg.target_d = 0;
    CHECK_THROWS_AS(search(cfg), InvalidArgument);
    cfg.target_d = 2;
    cfg.bases.push_back(LinearCode(F4Matrix::parse({"110000", "001100", "000011"})));  // self-dual, not LCD
    CHECK_THROWS_AS(search(cfg), InvalidArgument);
    cfg.strategy = Strategy::PunctureShorten;
    CHECK_THROWS_AS(search(cfg), InvalidArgument);  // parent length must be n + 1
}

TEST_CASE("builtin bounds table") {
    const BoundsTable& t = BoundsTable::builtin();
    CHECK(t.size() == 266);
    for (std::size_t n = 12; n <= 30; ++n)
        for (std::size_t k = 4; k <= n - 4; ++k) CHECK(t.contains(n, k));
    for (const auto& [key, e] : t.entries()) CHECK(e.lower <= e.upper);
    CHECK(t.at(12, 8).lower == 4);
    CHECK(t.at(12, 8).upper == 4);
    CHECK(t.at(12, 8).bold);
    CHECK(t.at(13, 9).lower == 4);
    CHECK(t.at(14, 10).lower == 3);
    CHECK(t.at(15, 11).lower == 3);
    CHECK(t.at(27, 5).lower == 17);
    CHECK(t.at(27, 6).star);
    CHECK_THROWS_AS(t.at(31, 5), UnknownEntry);
    CHECK_THROWS_AS(t.at(12, 3), UnknownEntry);
}

TEST_CASE("bounds CSV parsing") {
    const BoundsTable t = BoundsTable::parse_csv("n,k,lower,upper,flags\n12,8,4,4,B\n13,4,5,6,\n");
    CHECK(t.size() == 2);
    CHECK(t.at(13, 4).lower == 5);
    CHECK(t.at(13, 4).upper == 6);
    CHECK_FALSE(t.at(13, 4).bold);
    CHECK_THROWS_AS(BoundsTable::parse_csv("12,8,4,4,B\n"), ParseError);
    CHECK_THROWS_AS(BoundsTable::parse_csv("n,k,lower,upper,flags\n12,8,4\n"), ParseError);
    CHECK_THROWS_AS(BoundsTable::parse_csv("n,k,lower,upper,flags\n12,8,5,4,\n"), ParseError);
    CHECK_THROWS_AS(BoundsTable::parse_csv("n,k,lower,upper,flags\n12,8,4,4,X\n"), ParseError);
    CHECK_THROWS_AS(BoundsTable::parse_csv("n,k,lower,upper,flags\n12,8,4,4,\n12,8,4,4,\n"), ParseError);
    try {
        BoundsTable::parse_csv("n,k,lower,upper,flags\n12,8,4,4,\n12,x,4,4,\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("bound verdicts") {
    const BoundsTable& t = BoundsTable::builtin();
    CHECK(verify_bounds({}, t).empty());

    CodeSummary inexact = lcd_summary(14, 10, 3);
    inexact.d_exact = false;
    CodeSummary not_lcd = lcd_summary(13, 9, 4);
    not_lcd.is_lcd = false;
    const std::vector<LabeledSummary> in{
        {"b", lcd_summary(12, 8, 8)}, {"a", lcd_summary(12, 8, 4)}, {"c", lcd_summary(12, 8, 3)},
        {"d", not_lcd},               {"e", inexact},
    };
    const std::vector<BoundVerdict> out = verify_bounds(in, t);
    REQUIRE(out.size() == 5);
    CHECK(out[0].label == "a");
    CHECK(out[0].status == BoundStatus::ReproducedLower);
    CHECK(out[1].label == "b");
    CHECK(out[1].status == BoundStatus::Contradiction);
    CHECK(out[2].status == BoundStatus::BelowLower);
    CHECK(out[3].status == BoundStatus::NotLcd);
    CHECK(out[4].status == BoundStatus::Inexact);
    CHECK(bound_status_name(BoundStatus::ReproducedLower) == "REPRODUCED-LOWER");
    CHECK_THROWS_AS(verify_bounds({{"x", lcd_summary(40, 8, 3)}}, t), UnknownEntry);
}
