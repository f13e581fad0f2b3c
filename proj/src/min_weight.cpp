#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>
#include <type_traits>
#include <vector>

#include "hlcd/code.hpp"
#include "hlcd/errors.hpp"
#include "hlcd/kernels.hpp"

namespace hlcd {

namespace {

constexpr unsigned kBlockBits = 16;
constexpr std::uint64_t kAutoExhaustiveLimit = std::uint64_t{1} << 24;

// Codeword type for n > 64: one PackedWord per 64-coordinate chunk.
struct WideWord {
    std::vector<PackedWord> chunks;

    WideWord& operator^=(const WideWord& o) noexcept {
        for (std::size_t i = 0; i < chunks.size(); ++i) chunks[i] ^= o.chunks[i];
        return *this;
    }
    friend WideWord operator^(WideWord a, const WideWord& b) noexcept { return a ^= b; }
};

unsigned word_weight(PackedWord w) noexcept { return packed_weight(w); }
unsigned word_weight(const WideWord& w) noexcept {
    unsigned s = 0;
    for (PackedWord c : w.chunks) s += packed_weight(c);
    return s;
}

PackedWord word_mul(PackedWord w, Gf4 a) noexcept { return mul(w, a); }
WideWord word_mul(WideWord w, Gf4 a) noexcept {
    for (PackedWord& c : w.chunks) c = mul(c, a);
    return w;
}

template <class Word>
Word pack_row(std::span<const Gf4> row);

template <>
PackedWord pack_row<PackedWord>(std::span<const Gf4> row) {
    return pack(row);
}

template <>
WideWord pack_row<WideWord>(std::span<const Gf4> row) {
    WideWord w;
    for (std::size_t off = 0; off < row.size(); off += kMaxPackedLength) {
        w.chunks.push_back(pack(row.subspan(off, std::min(kMaxPackedLength, row.size() - off))));
    }
    return w;
}

// flips[2j] = row j, flips[2j+1] = w * row j. A message symbol s = b0 + b1*w
// therefore maps to the bit pair (b0, b1) at positions (2j, 2j+1).
template <class Word>
std::vector<Word> build_flips(const F4Matrix& g) {
    std::vector<Word> flips;
    flips.reserve(2 * g.rows());
    for (std::size_t j = 0; j < g.rows(); ++j) {
        Word r = pack_row<Word>(g.row(j));
        flips.push_back(r);
        flips.push_back(word_mul(r, Gf4::omega()));
    }
    return flips;
}

template <class Word>
unsigned block_min(const Word& start, std::span<const Word> flips, unsigned bits, std::uint64_t count) {
    if constexpr (std::is_same_v<Word, PackedWord>) {
        if (count == (std::uint64_t{1} << bits)) return kernels::gray_block_min(start, flips, bits);
        return kernels::gray_prefix_min(start, flips, count);
    } else {
        Word cw = start;
        unsigned best = word_weight(cw);
        for (std::uint64_t s = 1; s < count; ++s) {
            cw ^= flips[std::countr_zero(s)];
            best = std::min(best, word_weight(cw));
        }
        return best;
    }
}

template <class Word>
Word codeword_at(const Word& start, std::span<const Word> flips, std::uint64_t s) {
    std::uint64_t g = s ^ (s >> 1);
    Word cw = start;
    while (g != 0) {
        cw ^= flips[std::countr_zero(g)];
        g &= g - 1;
    }
    return cw;
}

// Projective representatives: messages whose first nonzero symbol is 1.
// With leading position p, symbols after p range over 4^(k-1-p) values,
// walked as a binary Gray code over 2(k-1-p) bits. Each lead is cut into
// aligned blocks of 2^kBlockBits; blocks are the parallel work units.
template <class Word>
MinWeightResult exhaustive(const LinearCode& c, const MinWeightOptions& options) {
    const std::size_t k = c.dimension();
    if (k > 31) throw TooLarge("exhaustive enumeration needs k <= 31, got k = " + std::to_string(k));

    const F4Matrix& g = c.canonical();
    const std::vector<Word> flips = build_flips<Word>(g);

    struct Lead {
        Word start;
        std::span<const Word> flips;
        unsigned block_bits;
        std::uint64_t blocks;
        std::uint64_t first_unit;
    };
    std::vector<Lead> leads;
    std::uint64_t units = 0;
    for (std::size_t p = 0; p < k; ++p) {
        const unsigned free_bits = static_cast<unsigned>(2 * (k - 1 - p));
        const unsigned block_bits = std::min(free_bits, kBlockBits);
        const std::uint64_t blocks = std::uint64_t{1} << (free_bits - block_bits);
        leads.push_back({flips[2 * p], std::span<const Word>(flips).subspan(2 * (p + 1)), block_bits, blocks, units});
        units += blocks;
    }

    // Budget truncation: the first `budget` classes in canonical order.
    std::uint64_t budget = options.budget.value_or(std::numeric_limits<std::uint64_t>::max());
    if (budget == 0) budget = 1;
    std::uint64_t unit_limit = units;
    std::uint64_t last_count = 0;  // classes in the final (possibly partial) unit
    std::uint64_t planned = 0;
    {
        std::uint64_t remaining = budget;
        std::uint64_t u = 0;
        for (const Lead& lead : leads) {
            if (remaining == 0) break;
            const std::uint64_t per = std::uint64_t{1} << lead.block_bits;
            if (remaining >= per * lead.blocks) {
                remaining -= per * lead.blocks;
                planned += per * lead.blocks;
                u += lead.blocks;
                last_count = per;
                continue;
            }
            const std::uint64_t full = remaining / per;
            u += full;
            planned += full * per;
            last_count = per;
            if (remaining % per != 0) {
                ++u;
                last_count = remaining % per;
                planned += last_count;
            }
            remaining = 0;
            break;
        }
        unit_limit = u;
    }
    const bool exact = planned == projective_class_count(k);

    auto run_unit = [&](std::uint64_t unit) {
        auto it = std::upper_bound(leads.begin(), leads.end(), unit,
                                   [](std::uint64_t u, const Lead& l) { return u < l.first_unit; });
        const Lead& lead = *std::prev(it);
        const std::uint64_t block = unit - lead.first_unit;
        const std::uint64_t per = std::uint64_t{1} << lead.block_bits;
        const std::uint64_t count = unit + 1 == unit_limit ? last_count : per;
        const Word start = codeword_at<Word>(lead.start, lead.flips, block << lead.block_bits);
        return block_min<Word>(start, lead.flips, lead.block_bits, count);
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(unit_limit)));
    unsigned best = std::numeric_limits<unsigned>::max();
    if (threads == 1) {
        for (std::uint64_t u = 0; u < unit_limit; ++u) best = std::min(best, run_unit(u));
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<unsigned> local(threads, std::numeric_limits<unsigned>::max());
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    for (std::uint64_t u = next.fetch_add(1); u < unit_limit; u = next.fetch_add(1)) {
                        local[t] = std::min(local[t], run_unit(u));
                    }
                });
            }
        }
        best = *std::min_element(local.begin(), local.end());
    }
    return {best, exact, planned};
}

template <class Word>
struct PrunedWalk {
    std::vector<std::array<Word, 4>> multiples;  // multiples[i][a] = a * row i
    std::uint64_t budget;
    std::uint64_t classes = 0;
    unsigned best = std::numeric_limits<unsigned>::max();
    unsigned stop_below = 0;  // abort once best < stop_below
    bool out_of_budget = false;

    // Messages of exactly `remaining` more nonzero symbols at positions >= from.
    void walk(std::size_t from, std::size_t remaining, bool leading, const Word& acc) {
        const std::size_t k = multiples.size();
        for (std::size_t i = from; i + remaining <= k; ++i) {
            for (unsigned a = 1; a <= (leading ? 1u : 3u); ++a) {
                if (out_of_budget) return;
                Word cw = acc ^ multiples[i][a];
                if (remaining == 1) {
                    if (classes == budget) {
                        out_of_budget = true;
                        return;
                    }
                    ++classes;
                    best = std::min(best, word_weight(cw));
                    if (best < stop_below) {
                        out_of_budget = true;
                        return;
                    }
                } else {
                    walk(i + 1, remaining - 1, false, cw);
                }
            }
        }
    }
};

template <class Word>
PrunedWalk<Word> make_walk(const LinearCode& c, std::uint64_t budget) {
    const StandardForm sf = standard_form(c.canonical());
    PrunedWalk<Word> walk;
    walk.budget = budget == 0 ? 1 : budget;
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        const Word r = pack_row<Word>(sf.matrix.row(i));
        walk.multiples.push_back({Word{}, r, word_mul(r, Gf4::omega()), word_mul(r, Gf4::omega2())});
    }
    if constexpr (std::is_same_v<Word, WideWord>) {
        Word zero = walk.multiples[0][1];
        for (PackedWord& ch : zero.chunks) ch = {};
        for (auto& m : walk.multiples) m[0] = zero;
    }
    return walk;
}

template <class Word>
bool weight_below(const LinearCode& c, std::size_t bound) {
    PrunedWalk<Word> walk = make_walk<Word>(c, std::numeric_limits<std::uint64_t>::max());
    walk.stop_below = static_cast<unsigned>(bound);
    const Word zero = walk.multiples[0][0];
    for (std::size_t w = 1; w < bound && w <= c.dimension(); ++w) {
        walk.walk(0, w, true, zero);
        if (walk.best < bound) return true;
    }
    return false;
}

// In systematic form wt(mG) >= wt(m), so once best <= w no message of
// weight >= w can produce a lighter codeword.
template <class Word>
MinWeightResult pruned(const LinearCode& c, const MinWeightOptions& options) {
    PrunedWalk<Word> walk =
        make_walk<Word>(c, options.budget.value_or(std::numeric_limits<std::uint64_t>::max()));
    const Word zero = walk.multiples[0][0];
    for (std::size_t w = 1; w <= c.dimension(); ++w) {
        if (walk.best <= w) break;
        walk.walk(0, w, true, zero);
        if (walk.out_of_budget) return {walk.best, false, walk.classes};
    }
    return {walk.best, true, walk.classes};
}

template <class Word>
MinWeightResult dispatch(const LinearCode& c, const MinWeightOptions& options) {
    MinWeightMethod method = options.method;
    if (method == MinWeightMethod::Auto) {
        method = projective_class_count(c.dimension()) <= kAutoExhaustiveLimit ? MinWeightMethod::Exhaustive
                                                                              : MinWeightMethod::Pruned;
    }
    return method == MinWeightMethod::Exhaustive ? exhaustive<Word>(c, options) : pruned<Word>(c, options);
}

}  // namespace

std::uint64_t projective_class_count(std::size_t k) noexcept {
    if (k >= 32) return std::numeric_limits<std::uint64_t>::max();
    return ((std::uint64_t{1} << (2 * k)) - 1) / 3;
}

MinWeightResult min_weight(const LinearCode& c, const MinWeightOptions& options) {
    if (c.dimension() == 0) throw PreconditionViolated("min_weight: the zero code has no nonzero codeword");
    if (c.length() <= kMaxPackedLength) return dispatch<PackedWord>(c, options);
    return dispatch<WideWord>(c, options);
}

std::size_t exact_min_weight(const LinearCode& c, const MinWeightOptions& options) {
    const MinWeightResult r = min_weight(c, options);
    if (!r.exact) throw BudgetExceeded(r.weight, r.classes);
    return r.weight;
}

bool has_weight_below(const LinearCode& c, std::size_t bound) {
    if (c.dimension() == 0 || bound <= 1) return false;
    if (c.length() <= kMaxPackedLength) return weight_below<PackedWord>(c, bound);
    return weight_below<WideWord>(c, bound);
}

std::size_t min_weight_oracle(const LinearCode& c) {
    const std::size_t k = c.dimension();
    if (k == 0) throw PreconditionViolated("min_weight_oracle: the zero code has no nonzero codeword");
    if (k > 10) throw TooLarge("min_weight_oracle supports k <= 10, got k = " + std::to_string(k));
    const F4Matrix& g = c.generator();
    std::size_t best = c.length() + 1;
    std::vector<Gf4> cw(c.length());
    const std::uint64_t total = std::uint64_t{1} << (2 * k);
    for (std::uint64_t m = 1; m < total; ++m) {
        std::fill(cw.begin(), cw.end(), Gf4::zero());
        for (std::size_t i = 0; i < k; ++i) {
            axpy(cw, Gf4::from_bits(static_cast<unsigned>((m >> (2 * i)) & 3u)), g.row(i));
        }
        best = std::min(best, weight(cw));
    }
    return best;
}

}  // namespace hlcd
