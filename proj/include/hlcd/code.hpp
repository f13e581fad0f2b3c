#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hlcd/linalg.hpp"

namespace hlcd {

// A linear [n, k] code over GF(4), held as a full-row-rank generator matrix
// plus its RREF. Two codes are equal iff their RREFs are identical.
//
// k = 0 (the zero code) is representable because duals and shortened codes
// of full-dimensional codes produce it.
class LinearCode {
public:
    // Throws RankDeficient if the rows of `generator` are dependent.
    explicit LinearCode(F4Matrix generator);
    // The zero-dimensional code of length n.
    static LinearCode zero_code(std::size_t n);
    // Code spanned by the rows of m (dependent rows allowed). Generator = RREF.
    static LinearCode span_of(const F4Matrix& m);

    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    const F4Matrix& generator() const noexcept { return generator_; }
    const F4Matrix& canonical() const noexcept { return canonical_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    friend bool operator==(const LinearCode& a, const LinearCode& b) noexcept {
        return a.n_ == b.n_ && a.canonical_ == b.canonical_;
    }

private:
    LinearCode(std::size_t n, F4Matrix generator, RrefResult reduced);

    std::size_t n_ = 0;
    F4Matrix generator_;
    F4Matrix canonical_;
    std::vector<std::size_t> pivots_;
};

LinearCode hermitian_dual(const LinearCode& c);

// k - rank(G * conj(G)^T).
std::size_t hull_dim(const LinearCode& c);
// dim(C ∩ C^⊥h) from the definition: k + (n-k) - rank([G; H]).
std::size_t hull_dim_oracle(const LinearCode& c);

bool is_lcd(const LinearCode& c);
// Every generator row has even weight and rows are pairwise Hermitian-orthogonal.
bool is_even(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

enum class MinWeightMethod {
    Exhaustive,  // Gray-code walk over all (4^k - 1)/3 projective classes
    Pruned,      // systematic-form walk by message weight, stops once no lighter codeword can remain
    Auto,        // Exhaustive up to 2^24 classes, Pruned above
};

struct MinWeightOptions {
    std::optional<std::uint64_t> budget;  // max projective classes to enumerate
    unsigned threads = 1;
    MinWeightMethod method = MinWeightMethod::Exhaustive;
};

struct MinWeightResult {
    std::size_t weight = 0;  // exact value, or an upper bound if !exact
    bool exact = true;
    std::uint64_t classes = 0;  // projective classes enumerated
};

// Requires k >= 1 (PreconditionViolated otherwise).
MinWeightResult min_weight(const LinearCode& c, const MinWeightOptions& options = {});
// As min_weight(), but throws BudgetExceeded instead of returning a bound.
std::size_t exact_min_weight(const LinearCode& c, const MinWeightOptions& options = {});
// True iff some nonzero codeword has weight < bound. Only messages of
// weight < bound are walked (systematic form), so small bounds are cheap.
bool has_weight_below(const LinearCode& c, std::size_t bound);

// Materializes all 4^k - 1 nonzero codewords elementwise. TooLarge if k > 10.
std::size_t min_weight_oracle(const LinearCode& c);

// Projective class count (4^k - 1) / 3, saturating at UINT64_MAX.
std::uint64_t projective_class_count(std::size_t k) noexcept;

struct CodeSummary {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;       // absent for the zero code
    bool d_exact = true;
    std::optional<std::size_t> d_dual;  // absent when the dual is the zero code
    bool d_dual_exact = true;
    std::size_t hull_dim = 0;
    bool is_lcd = false;
    bool is_even = false;

    friend bool operator==(const CodeSummary&, const CodeSummary&) = default;
};

CodeSummary summarize(const LinearCode& c, const MinWeightOptions& options = {});

}  // namespace hlcd
