#include "ppmine/miner.hpp"

#include <cctype>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ppmine/error.hpp"

namespace ppmine {

namespace {

// Decimal "123.45" as numerator / 10^scale, exactly.
bool parse_decimal(std::string_view text, unsigned long long& numerator, unsigned long long& scale) {
    numerator = 0;
    scale = 1;
    bool seen_digit = false;
    bool seen_point = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_point) return false;
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        if (numerator > 100'000'000'000ull) return false;
        numerator = numerator * 10 + static_cast<unsigned long long>(c - '0');
        if (seen_point) scale *= 10;
        seen_digit = true;
    }
    return seen_digit;
}

} // namespace

Count resolve_minsup(std::string_view text, std::size_t num_sequences) {
    const bool percent = !text.empty() && text.back() == '%';
    if (percent) text.remove_suffix(1);
    unsigned long long num = 0;
    unsigned long long scale = 1;
    if (!parse_decimal(text, num, scale)) throw ParameterError("invalid minsup '" + std::string(text) + "'");
    if (!percent) {
        if (scale != 1) throw ParameterError("absolute minsup must be an integer");
        if (num < 1) throw ParameterError("minsup must be >= 1");
        return static_cast<Count>(num);
    }
    // pct = num / scale, in (0, 100].
    if (num == 0 || num > 100 * scale) throw ParameterError("minsup percentage must be in (0, 100]");
    const unsigned long long den = scale * 100;
    const unsigned long long prod = static_cast<unsigned long long>(num_sequences) * num;
    const auto count = static_cast<Count>((prod + den - 1) / den);
    return count < 1 ? 1 : count;
}

std::unique_ptr<SearchState> make_search(const SequenceDatabase& db, const MiningConfig& cfg) {
    auto state = std::make_unique<SearchState>(db, SearchParams{cfg.minsup, cfg.ell});
    if (cfg.min_size) state->post_min_size(*cfg.min_size);
    for (const auto& spec : cfg.among) state->add_filter(std::make_unique<AmongFilter>(spec, state->ell()));
    if (cfg.regex) state->add_filter(std::make_unique<RegularFilter>(cfg.regex));
    return state;
}

MiningResult mine(const SequenceDatabase& db, const MiningConfig& cfg) {
    MiningResult result;
    auto state = make_search(db, cfg);
    result.stats = state->solve_all([&](const Pattern& p, Count s) { result.patterns.push_back({p, s}); });
    return result;
}

MiningResult mine_parallel(const SequenceDatabase& db, const MiningConfig& cfg, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    MiningResult result;

    // Validates the configuration before entering the parallel region.
    auto root = make_search(db, cfg);
    if (root->propagate_root() == Status::Fail) {
        result.stats = root->stats();
        return result;
    }
    std::vector<Value> firsts;
    root->vars().for_each(1, [&](Value v) { firsts.push_back(v); });
    root.reset();

    const auto n = static_cast<std::ptrdiff_t>(firsts.size());
    std::vector<std::vector<MinedPattern>> buckets(firsts.size());
    MiningStats total;

#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team)
#endif
    {
        auto state = make_search(db, cfg);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
        for (std::ptrdiff_t k = 0; k < n; ++k) {
            auto& bucket = buckets[static_cast<std::size_t>(k)];
            state->solve_branch(static_cast<ItemId>(firsts[static_cast<std::size_t>(k)]),
                                [&](const Pattern& p, Count s) { bucket.push_back({p, s}); });
        }
#ifdef _OPENMP
#pragma omp critical(ppmine_stats)
#endif
        total += state->stats();
    }

    for (auto& bucket : buckets) {
        for (auto& mp : bucket) result.patterns.push_back(std::move(mp));
    }
    result.stats = total;
    result.stats.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

} // namespace ppmine
