#pragma once

// Random instances for property tests. Every generator takes an explicit
// Rng so a failing case can be replayed from its seed.

#include <cstddef>
#include <optional>
#include <vector>

#include "hlcd/code.hpp"
#include "hlcd/errors.hpp"
#include "hlcd/search.hpp"
#include "hlcd/transform.hpp"

namespace hlcd::testing {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

inline Gf4 nonzero_symbol(Rng& rng) { return kNonzeroGf4[rng.below(3)]; }

// Uniform full-rank k x n generator (row-space need not be systematic).
inline LinearCode random_code(std::size_t n, std::size_t k, Rng& rng) {
    while (true) {
        F4Matrix g = rng.matrix(k, n);
        if (rank(g) == k) return LinearCode(std::move(g));
    }
}

inline LinearCode random_code(Rng& rng, std::size_t max_n) {
    const std::size_t n = uniform(rng, 1, max_n);
    return random_code(n, uniform(rng, 1, n), rng);
}

// Random column permutation combined with nonzero column scalings; such maps
// preserve Hermitian inner products.
inline F4Matrix random_monomial(const F4Matrix& g, Rng& rng) {
    std::vector<std::size_t> order(g.cols());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    F4Matrix out = g.select_columns(order);
    for (std::size_t c = 0; c < out.cols(); ++c) {
        const Gf4 a = nonzero_symbol(rng);
        for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = out(r, c) * a;
    }
    return out;
}

// Uniform element of the row space of `basis` (zero rows allowed).
inline F4Vector random_combination(const F4Matrix& basis, Rng& rng) {
    F4Vector v(basis.cols());
    for (std::size_t r = 0; r < basis.rows(); ++r) axpy(v.span(), rng.symbol(), basis.row(r));
    return v;
}

// An [n,k] code whose hull has dimension exactly `hull`; needs hull <= k and
// k + hull <= n. Built as a self-orthogonal part S plus random vectors of S^⊥h.
inline LinearCode random_code_with_hull(std::size_t n, std::size_t k, std::size_t hull, Rng& rng) {
    if (hull > k || k + hull > n) throw InvalidArgument("random_code_with_hull: infeasible parameters");
    while (true) {
        F4Matrix rows(0, n);
        bool stuck = false;
        for (std::size_t i = 0; i < k && !stuck; ++i) {
            const std::size_t s = std::min(i, hull);
            const LinearCode so = s == 0 ? LinearCode::zero_code(n) : LinearCode(rows.select_rows(0, s));
            const F4Matrix perp = hermitian_dual(so).generator();
            bool placed = false;
            for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
                F4Vector v = random_combination(perp, rng);
                if (i < hull && weight(v) % 2 != 0) continue;
                F4Matrix trial = rows;
                trial.append_row(v.span());
                if (rank(trial) != trial.rows()) continue;
                if (i < hull && !is_even(LinearCode(trial))) continue;
                rows = std::move(trial);
                placed = true;
            }
            stuck = !placed;
        }
        if (stuck) continue;
        LinearCode c(random_monomial(rows, rng));
        if (hull_dim_oracle(c) == hull) return c;
    }
}

inline LinearCode random_lcd_code(Rng& rng, std::size_t min_n, std::size_t max_n) {
    const std::size_t n = uniform(rng, min_n, max_n);
    const std::size_t k = uniform(rng, 1, n);
    return LinearCode(random_monomial(random_lcd(n, k, rng).generator(), rng));
}

inline LinearCode random_non_lcd_code(Rng& rng, std::size_t max_n) {
    const std::size_t n = uniform(rng, 2, max_n);
    const std::size_t k = uniform(rng, 1, n - 1);
    return random_code_with_hull(n, k, uniform(rng, 1, std::min(k, n - k)), rng);
}

// LCD code with d >= 2 and a nonzero dual of distance >= 2.
inline LinearCode random_qualifying_lcd(Rng& rng, std::size_t min_n, std::size_t max_n) {
    while (true) {
        const LinearCode c = random_lcd_code(rng, min_n, max_n);
        if (min_weight(c).weight < 2) continue;
        const LinearCode dual = hermitian_dual(c);
        if (dual.dimension() == 0) continue;
        if (min_weight(dual).weight < 2) continue;
        return c;
    }
}

// A random isotropic pair obtained by rejection, or none for length < 2.
inline std::optional<IsotropicPair> random_pair(std::size_t length, Rng& rng) {
    if (length < 2) return std::nullopt;
    return sample_isotropic_pair(length, rng);
}

}  // namespace hlcd::testing
