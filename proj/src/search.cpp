#include "hlcd/search.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hlcd/errors.hpp"

namespace hlcd {

namespace {

constexpr std::uint64_t kStreamRandom = 1;
constexpr std::uint64_t kStreamAxyStart = 2;
constexpr std::uint64_t kStreamAxyMove = 3;
constexpr std::uint64_t kStreamParent = 4;

constexpr std::uint64_t kRandomBatch = 256;
constexpr std::uint64_t kNeighborBatch = 8;
constexpr std::uint64_t kParentBatch = 16;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Runs fn(i) for i in [0, count). Each index is independent, so the
// outcome does not depend on the thread count.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
}

// Exact minimum weight for a search candidate; small k keeps this cheap.
std::size_t candidate_weight(const LinearCode& c) {
    return exact_min_weight(c, {.budget = std::nullopt, .threads = 1, .method = MinWeightMethod::Pruned});
}

CodeSummary final_summary(const LinearCode& c, unsigned threads) {
    return summarize(c, {.budget = std::nullopt, .threads = threads, .method = MinWeightMethod::Auto});
}

void validate(const SearchConfig& cfg) {
    if (cfg.k < 1 || cfg.k > cfg.n) throw InvalidArgument("search: need 1 <= k <= n");
    if (cfg.target_d < 1) throw InvalidArgument("search: target_d must be >= 1");
    if (cfg.budget < 1) throw InvalidArgument("search: budget must be >= 1");
    if (cfg.strategy == Strategy::AxyNeighborhood) {
        if (cfg.n - cfg.k < 2) throw InvalidArgument("axy search needs n - k >= 2");
        for (const LinearCode& b : cfg.bases) {
            if (b.length() != cfg.n || b.dimension() != cfg.k) throw InvalidArgument("axy base must be an [n,k] code");
            if (!is_lcd(b)) throw InvalidArgument("axy base must be Hermitian LCD");
        }
    }
    if (cfg.strategy == Strategy::PunctureShorten) {
        for (const LinearCode& b : cfg.bases) {
            if (b.length() != cfg.n + 1 || (b.dimension() != cfg.k && b.dimension() != cfg.k + 1)) {
                throw InvalidArgument("puncture-shorten base must be an [n+1,k] or [n+1,k+1] code");
            }
        }
    }
}

SearchResult finish(SearchResult r, const SearchConfig& cfg, std::chrono::steady_clock::time_point t0) {
    if (r.found) r.summary = final_summary(*r.found, cfg.threads);
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
    return r;
}

SearchResult search_random(const SearchConfig& cfg) {
    SearchResult result;
    for (std::uint64_t base = 0; base < cfg.budget; base += kRandomBatch) {
        const std::uint64_t count = std::min(kRandomBatch, cfg.budget - base);
        std::vector<std::size_t> d(count, 0);
        parallel_for(count, cfg.threads, [&](std::size_t j) {
            Rng rng = Rng::derive(cfg.seed, kStreamRandom, base + j);
            d[j] = candidate_weight(random_lcd(cfg.n, cfg.k, rng));
        });
        for (std::uint64_t j = 0; j < count; ++j) {
            result.best_d = std::max(result.best_d, d[j]);
            if (d[j] >= cfg.target_d) {
                Rng rng = Rng::derive(cfg.seed, kStreamRandom, base + j);
                result.found = random_lcd(cfg.n, cfg.k, rng);
                result.candidates_tried = base + j + 1;
                return result;
            }
        }
    }
    result.candidates_tried = cfg.budget;
    return result;
}

LinearCode in_standard_form(const LinearCode& c) { return LinearCode(standard_form(c.generator()).matrix); }

// Hill climb over A(x,y) moves. Every step evaluates a fixed batch of
// neighbours; ties are accepted until the plateau cap, then the walk restarts.
SearchResult search_axy(const SearchConfig& cfg) {
    SearchResult result;
    const std::size_t r = cfg.n - cfg.k;
    std::uint64_t restarts = 0;
    auto start_code = [&] {
        if (!cfg.bases.empty()) return in_standard_form(cfg.bases[restarts % cfg.bases.size()]);
        Rng rng = Rng::derive(cfg.seed, kStreamAxyStart, restarts);
        return random_lcd(cfg.n, cfg.k, rng);
    };
    LinearCode current = start_code();
    std::size_t d_cur = candidate_weight(current);
    const std::size_t hull = hull_dim(current);
    result.best_d = d_cur;
    std::uint64_t tried = 1;
    std::size_t plateau = 0;
    std::uint64_t step = 0;

    while (true) {
        if (d_cur >= cfg.target_d) {
            result.found = current;
            result.candidates_tried = tried;
            return result;
        }
        if (tried >= cfg.budget) break;
        const std::uint64_t count = std::min(kNeighborBatch, cfg.budget - tried);
        std::vector<std::optional<LinearCode>> nbs(count);
        std::vector<std::size_t> d(count, 0);
        parallel_for(count, cfg.threads, [&](std::size_t j) {
            Rng rng = Rng::derive(cfg.seed, kStreamAxyMove, step * kNeighborBatch + j);
            const IsotropicPair pair = sample_isotropic_pair(r, rng);
            LinearCode nb = axy_construct(current, pair);
            if (hull_dim(nb) != hull) throw std::logic_error("A(x,y) move changed the hull dimension");
            // Neighbours lighter than the current code are never accepted.
            if (!has_weight_below(nb, d_cur)) d[j] = candidate_weight(nb);
            nbs[j] = std::move(nb);
        });
        tried += count;
        ++step;

        std::size_t best_j = 0;
        for (std::size_t j = 1; j < count; ++j)
            if (d[j] > d[best_j]) best_j = j;
        result.best_d = std::max(result.best_d, d[best_j]);
        if (d[best_j] > d_cur) {
            current = std::move(*nbs[best_j]);
            d_cur = d[best_j];
            plateau = 0;
        } else if (plateau >= cfg.plateau_cap) {
            if (tried >= cfg.budget) break;
            ++restarts;
            current = start_code();
            d_cur = candidate_weight(current);
            result.best_d = std::max(result.best_d, d_cur);
            plateau = 0;
            ++tried;
        } else {
            // Steps without improvement count toward the cap, sideways or not.
            ++plateau;
            if (d[best_j] == d_cur) current = std::move(*nbs[best_j]);
        }
    }
    result.candidates_tried = tried;
    return result;
}

struct ParentOutcome {
    std::optional<LinearCode> found;
    std::uint64_t evaluated = 0;  // derivatives examined up to and including the hit
    std::size_t best_d = 0;
};

// Single-coordinate derivatives of one length-(n+1) parent. For an LCD
// parent with d, d^⊥h >= 2 the column parities of an orthonormal generator
// say which derivative is LCD, so only that one is built.
ParentOutcome scan_parent(const LinearCode& parent, const SearchConfig& cfg) {
    ParentOutcome out;
    const bool puncture_route = parent.dimension() == cfg.k;
    std::optional<ParityReport> parity;
    if (is_lcd(parent) && candidate_weight(parent) >= 2) {
        const LinearCode dual = hermitian_dual(parent);
        if (dual.dimension() == 0 || candidate_weight(dual) >= 2) parity = lcd_column_parity(parent);
    }
    for (std::size_t i = 1; i <= parent.length(); ++i) {
        if (parity) {
            const ColumnParity& col = parity->columns[i - 1];
            if (puncture_route ? !col.puncture_lcd : !col.shorten_lcd) continue;
        }
        ++out.evaluated;
        const CoordinateSet t{i};
        LinearCode derived = puncture_route ? puncture(parent, t) : shorten(parent, t);
        if (derived.dimension() != cfg.k || !is_lcd(derived)) continue;
        const std::size_t d = candidate_weight(derived);
        out.best_d = std::max(out.best_d, d);
        if (d >= cfg.target_d) {
            out.found = std::move(derived);
            return out;
        }
    }
    return out;
}

SearchResult search_puncture_shorten(const SearchConfig& cfg) {
    SearchResult result;
    auto parent_at = [&](std::uint64_t index) {
        if (!cfg.bases.empty()) return cfg.bases[index % cfg.bases.size()];
        Rng rng = Rng::derive(cfg.seed, kStreamParent, index);
        const std::size_t kp = (index % 2 == 0 || cfg.k == cfg.n) ? cfg.k : cfg.k + 1;
        return random_lcd(cfg.n + 1, kp, rng);
    };
    // Supplied bases are deterministic, so scanning them once is enough.
    const std::uint64_t parent_limit = cfg.bases.empty() ? cfg.budget : cfg.bases.size();
    std::uint64_t tried = 0;
    for (std::uint64_t base = 0; base < parent_limit && tried < cfg.budget; base += kParentBatch) {
        const std::uint64_t count = std::min(kParentBatch, parent_limit - base);
        std::vector<ParentOutcome> outcomes(count);
        parallel_for(count, cfg.threads, [&](std::size_t j) { outcomes[j] = scan_parent(parent_at(base + j), cfg); });
        for (std::uint64_t j = 0; j < count; ++j) {
            const std::uint64_t allowed = cfg.budget - tried;
            ParentOutcome& o = outcomes[j];
            result.best_d = std::max(result.best_d, o.best_d);
            if (o.found && o.evaluated <= allowed) {
                result.found = std::move(o.found);
                result.candidates_tried = tried + o.evaluated;
                return result;
            }
            tried += std::min(o.evaluated, allowed);
            if (tried >= cfg.budget) break;
        }
    }
    result.candidates_tried = tried;
    return result;
}

}  // namespace

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (stream * 0xd1b54a32d192ed03ULL));
    s = splitmix64(s ^ (index * 0x8cb92ba72f3d8dd7ULL));
    return Rng(s);
}

Gf4 Rng::symbol() {
    if (pool_left_ == 0) {
        pool_ = next();
        pool_left_ = 32;
    }
    const Gf4 a = Gf4::from_bits(static_cast<unsigned>(pool_ & 3u));
    pool_ >>= 2;
    --pool_left_;
    return a;
}

F4Vector Rng::vector(std::size_t length) {
    F4Vector v(length);
    for (std::size_t i = 0; i < length; ++i) v[i] = symbol();
    return v;
}

F4Matrix Rng::matrix(std::size_t rows, std::size_t cols) {
    F4Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = symbol();
    return m;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
}

LinearCode random_lcd(std::size_t n, std::size_t k, Rng& rng, std::size_t max_retries) {
    if (k < 1 || k > n) throw InvalidArgument("random_lcd: need 1 <= k <= n");
    for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
        LinearCode c(hstack(F4Matrix::identity(k), rng.matrix(k, n - k)));
        if (is_lcd(c)) return c;
    }
    throw ExhaustedRetries("no LCD [" + std::to_string(n) + "," + std::to_string(k) + "] code after " +
                           std::to_string(max_retries) + " draws");
}

IsotropicPair sample_isotropic_pair(std::size_t length, Rng& rng) {
    if (length < 2) throw NoPairExists("a nonzero vector of length 1 is never self-orthogonal");
    constexpr int kMaxDraws = 100000;
    // Over GF(4), (v,v)_h = wt(v) mod 2, so self-orthogonal means even weight.
    auto even_nonzero = [](const F4Vector& v) { return !v.is_zero() && weight(v) % 2 == 0; };
    for (int i = 0; i < kMaxDraws; ++i) {
        F4Vector x = rng.vector(length);
        if (!even_nonzero(x)) continue;
        for (int j = 0; j < kMaxDraws; ++j) {
            F4Vector y = rng.vector(length);
            if (even_nonzero(y) && hermitian_inner(x, y).is_zero()) return IsotropicPair(std::move(x), std::move(y));
        }
    }
    throw ExhaustedRetries("sample_isotropic_pair: rejection sampling failed");
}

std::string_view strategy_name(Strategy s) noexcept {
    switch (s) {
        case Strategy::Random: return "random";
        case Strategy::AxyNeighborhood: return "axy";
        case Strategy::PunctureShorten: return "puncture-shorten";
    }
    return "unknown";
}

Strategy parse_strategy(std::string_view name) {
    for (Strategy s : {Strategy::Random, Strategy::AxyNeighborhood, Strategy::PunctureShorten})
        if (name == strategy_name(s)) return s;
    throw InvalidArgument("unknown strategy '" + std::string(name) + "'");
}

SearchResult search(const SearchConfig& cfg) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    switch (cfg.strategy) {
        case Strategy::Random: return finish(search_random(cfg), cfg, t0);
        case Strategy::AxyNeighborhood: return finish(search_axy(cfg), cfg, t0);
        case Strategy::PunctureShorten: return finish(search_puncture_shorten(cfg), cfg, t0);
    }
    throw InvalidArgument("unknown strategy");
}

BoundsTable BoundsTable::parse_csv(std::string_view text) {
    BoundsTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != "n,k,lower,upper,flags") throw ParseError("expected header n,k,lower,upper,flags", line_no, 1);
            header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != 5) throw ParseError("expected 5 fields", line_no, 1);
        std::size_t vals[4];
        for (int f = 0; f < 4; ++f) {
            const std::string& s = fields[f];
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError("field " + std::to_string(f + 1) + " is not a count", line_no, 1);
            }
            vals[f] = std::stoul(s);
        }
        const std::string& flags = fields[4];
        if (flags != "" && flags != "B" && flags != "S" && flags != "BS") throw ParseError("bad flags '" + flags + "'", line_no, 1);
        if (vals[2] > vals[3]) throw ParseError("lower bound exceeds upper bound", line_no, 1);
        Entry e{vals[2], vals[3], flags.find('B') != std::string::npos, flags.find('S') != std::string::npos};
        if (!table.entries_.emplace(std::pair{vals[0], vals[1]}, e).second) throw ParseError("duplicate (n,k)", line_no, 1);
    }
    if (!header) throw ParseError("missing header", line_no + 1, 1);
    return table;
}

const BoundsTable& BoundsTable::builtin() {
    static const BoundsTable table = parse_csv(builtin_bounds_csv());
    return table;
}

const BoundsTable::Entry& BoundsTable::at(std::size_t n, std::size_t k) const {
    auto it = entries_.find({n, k});
    if (it == entries_.end()) {
        throw UnknownEntry("no bounds entry for (n,k) = (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return it->second;
}

std::string_view bound_status_name(BoundStatus s) noexcept {
    switch (s) {
        case BoundStatus::ReproducedLower: return "REPRODUCED-LOWER";
        case BoundStatus::BelowLower: return "BELOW-LOWER";
        case BoundStatus::Contradiction: return "CONTRADICTION";
        case BoundStatus::NotLcd: return "NOT-LCD";
        case BoundStatus::Inexact: return "INEXACT";
    }
    return "UNKNOWN";
}

std::vector<BoundVerdict> verify_bounds(const std::vector<LabeledSummary>& results, const BoundsTable& table) {
    std::vector<BoundVerdict> out;
    for (const LabeledSummary& r : results) {
        BoundVerdict v{r.label, r.summary, table.at(r.summary.n, r.summary.k), BoundStatus::Inexact};
        if (!r.summary.is_lcd) {
            v.status = BoundStatus::NotLcd;
        } else if (!r.summary.d || !r.summary.d_exact) {
            v.status = BoundStatus::Inexact;
        } else if (*r.summary.d > v.entry.upper) {
            v.status = BoundStatus::Contradiction;
        } else if (*r.summary.d >= v.entry.lower) {
            v.status = BoundStatus::ReproducedLower;
        } else {
            v.status = BoundStatus::BelowLower;
        }
        out.push_back(std::move(v));
    }
    std::stable_sort(out.begin(), out.end(), [](const BoundVerdict& a, const BoundVerdict& b) {
        return std::tie(a.summary.n, a.summary.k, a.label) < std::tie(b.summary.n, b.summary.k, b.label);
    });
    return out;
}

}  // namespace hlcd
