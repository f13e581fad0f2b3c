#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlcd/code.hpp"
#include "hlcd/transform.hpp"

namespace hlcd {

// Deterministic generator: raw mt19937_64 output only (no std distributions,
// whose results are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    // Independent stream for (seed, stream, index); same inputs, same stream.
    static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    Gf4 symbol();
    F4Vector vector(std::size_t length);
    F4Matrix matrix(std::size_t rows, std::size_t cols);
    // Uniform in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
    std::uint64_t pool_ = 0;
    unsigned pool_left_ = 0;
};

// Random (I_k | A) with A uniform, redrawn until LCD. Throws ExhaustedRetries.
LinearCode random_lcd(std::size_t n, std::size_t k, Rng& rng, std::size_t max_retries = 100000);

// Throws NoPairExists for length < 2.
IsotropicPair sample_isotropic_pair(std::size_t length, Rng& rng);

enum class Strategy { Random, AxyNeighborhood, PunctureShorten };
std::string_view strategy_name(Strategy s) noexcept;
// Accepts "random", "axy", "puncture-shorten". Throws InvalidArgument.
Strategy parse_strategy(std::string_view name);

struct SearchConfig {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t target_d = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1;  // max candidate codes evaluated
    Strategy strategy = Strategy::Random;
    unsigned threads = 1;
    std::size_t plateau_cap = 100;   // sideways moves allowed before a restart
    std::vector<LinearCode> bases;   // optional starting codes
};

struct SearchResult {
    std::optional<LinearCode> found;
    std::optional<CodeSummary> summary;
    std::uint64_t candidates_tried = 0;
    std::size_t best_d = 0;  // best exact minimum weight among evaluated LCD candidates
    std::chrono::nanoseconds elapsed{0};
};

// Result is a function of the config alone; `threads` affects only speed.
// Throws InvalidArgument for an invalid config.
SearchResult search(const SearchConfig& config);

// Parse lower/upper data on d_4(n,k).
class BoundsTable {
public:
    struct Entry {
        std::size_t lower = 0;
        std::size_t upper = 0;
        bool bold = false;  // value established by the listed constructions
        bool star = false;  // obtained via the A(x,y) construction
    };

    // CSV with header "n,k,lower,upper,flags"; flags one of "", "B", "S", "BS".
    // Throws ParseError.
    static BoundsTable parse_csv(std::string_view text);
    // The table shipped with the library (12 <= n <= 30, 4 <= k <= n - 4).
    static const BoundsTable& builtin();

    // Throws UnknownEntry.
    const Entry& at(std::size_t n, std::size_t k) const;
    bool contains(std::size_t n, std::size_t k) const noexcept { return entries_.count({n, k}) != 0; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::pair<std::size_t, std::size_t>, Entry>& entries() const noexcept { return entries_; }

private:
    std::map<std::pair<std::size_t, std::size_t>, Entry> entries_;
};

std::string_view builtin_bounds_csv() noexcept;

enum class BoundStatus { ReproducedLower, BelowLower, Contradiction, NotLcd, Inexact };
std::string_view bound_status_name(BoundStatus s) noexcept;

struct BoundVerdict {
    std::string label;  // e.g. the source file name
    CodeSummary summary;
    BoundsTable::Entry entry;
    BoundStatus status = BoundStatus::Inexact;
};

struct LabeledSummary {
    std::string label;
    CodeSummary summary;
};

// One verdict per input, sorted by (n, k, label). Throws UnknownEntry for
// (n, k) outside the table.
std::vector<BoundVerdict> verify_bounds(const std::vector<LabeledSummary>& results, const BoundsTable& table);

}  // namespace hlcd
