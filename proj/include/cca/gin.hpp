#ifndef CCA_GIN_HPP
#define CCA_GIN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cca/errors.hpp"
#include "cca/groebner.hpp"
#include "cca/monomial_ideal.hpp"

namespace cca {

// Deterministic generator (splitmix64) so that results are reproducible
// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long uniform(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

private:
    uint64_t state_;
};

struct GinOptions {
    int trials = 5;
    uint64_t seed = 1;
    long coeff_range = 10000; // entries uniform in [-range, range]
    BuchbergerOptions buchberger;
};

struct GinResult {
    MonomialIdeal ideal;                 // the most frequent initial ideal
    int agreement = 0;                   // how many trials produced it
    int trials = 0;
    std::vector<MonomialIdeal> per_trial;
};

inline LinearChange<Rational> random_change(int nvars, Rng& rng, long range) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        LinearChange<Rational> c;
        c.a.assign(static_cast<size_t>(nvars),
                   std::vector<Rational>(static_cast<size_t>(nvars)));
        for (auto& row : c.a)
            for (auto& x : row) x = Rational(rng.uniform(-range, range));
        if (is_invertible(c)) return c;
    }
    throw InternalError("could not sample an invertible matrix");
}

// Randomized generic initial ideal: apply independent random invertible
// changes, take the initial ideal each time, return the majority.  Correct
// with high probability, never certified.
inline GinResult gin_sample(const std::vector<Poly<Rational>>& gens, TermOrder ord,
                            const GinOptions& opts = {}) {
    if (opts.trials < 1) throw DomainError("gin needs at least one trial");
    if (gens.empty()) throw DomainError("no generators");
    int n = gens.front().nvars();

    Rng rng(opts.seed);
    GinResult result{MonomialIdeal::zero(n)};
    result.trials = opts.trials;
    for (int t = 0; t < opts.trials; ++t) {
        LinearChange<Rational> change = random_change(n, rng, opts.coeff_range);
        std::vector<Poly<Rational>> moved = apply_change(gens, change);
        result.per_trial.push_back(initial_ideal(moved, ord, opts.buchberger));
    }

    std::map<std::string, std::pair<int, size_t>> votes; // key -> (count, first index)
    for (size_t i = 0; i < result.per_trial.size(); ++i) {
        std::string key = result.per_trial[i].str();
        auto it = votes.find(key);
        if (it == votes.end())
            votes.emplace(key, std::make_pair(1, i));
        else
            it->second.first += 1;
    }
    int best_count = 0;
    size_t best_index = 0;
    for (const auto& [key, v] : votes) {
        if (v.first > best_count) { // map iteration is key-sorted: ties pick
            best_count = v.first;   // the lexicographically least candidate
            best_index = v.second;
        }
    }
    if (opts.trials > 1 && best_count == 1) {
        std::string msg = "all gin trials disagree:";
        for (const auto& cand : result.per_trial) msg += " " + cand.str();
        throw AmbiguityError(msg);
    }
    result.ideal = result.per_trial[best_index];
    result.agreement = best_count;
    return result;
}

} // namespace cca

#endif
