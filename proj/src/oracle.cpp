#include "ppmine/oracle.hpp"

#include <algorithm>

namespace ppmine {

bool check_pattern(const Pattern& p, const OracleConfig& cfg) {
    if (cfg.min_size && p.size() < *cfg.min_size) return false;
    for (const auto& a : cfg.among) {
        const auto n = static_cast<Count>(std::count(p.begin(), p.end(), a.item));
        if (n < a.lower || n > a.upper) return false;
    }
    if (cfg.regex && !cfg.regex->accepts(p)) return false;
    return true;
}

PatternSupports enumerate_frequent(const SequenceDatabase& db, const OracleConfig& cfg) {
    PatternSupports frequent;
    std::vector<Pattern> frontier;
    for (ItemId a = 0; a < db.num_items(); ++a) {
        Pattern p{a};
        const Count s = support(db, p);
        if (s >= cfg.minsup) {
            frequent.emplace(p, s);
            frontier.push_back(std::move(p));
        }
    }
    for (std::size_t len = 2; len <= cfg.max_pattern_length && !frontier.empty(); ++len) {
        std::vector<Pattern> next;
        for (const auto& p : frontier) {
            for (ItemId a = 0; a < db.num_items(); ++a) {
                Pattern q = p;
                q.push_back(a);
                const Count s = support(db, q);
                if (s >= cfg.minsup) {
                    frequent.emplace(q, s);
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    if (cfg.max_pattern_length == 0) frequent.clear();

    std::erase_if(frequent, [&](const auto& kv) { return !check_pattern(kv.first, cfg); });
    return frequent;
}

SequenceDatabase random_db(const RandomDbParams& params) {
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(1, params.max_length));
    std::uniform_int_distribution<std::size_t> item(1, std::max<std::size_t>(1, params.alphabet));

    ItemDictionary dict;
    std::vector<ItemSequence> sequences;
    for (std::size_t k = 0; k < params.num_sequences; ++k) {
        ItemSequence seq(length(rng));
        for (auto& a : seq) a = dict.intern(std::to_string(item(rng)));
        sequences.push_back(std::move(seq));
    }
    return SequenceDatabase(std::move(sequences), std::move(dict));
}

std::string random_regex(std::mt19937_64& rng, const ItemDictionary& dict, int depth) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    auto leaf = [&]() -> std::string {
        if (dict.size() == 0 || pick(6) == 0) return ".";
        return dict.name(static_cast<ItemId>(pick(static_cast<int>(dict.size()))));
    };
    if (depth <= 0) return leaf();
    switch (pick(6)) {
    case 0:
        return leaf();
    case 1:
    case 2:
        return random_regex(rng, dict, depth - 1) + " " + random_regex(rng, dict, depth - 1);
    case 3:
        return "( " + random_regex(rng, dict, depth - 1) + " | " + random_regex(rng, dict, depth - 1) + " )";
    default: {
        static constexpr const char* ops[] = {"*", "+", "?"};
        return "( " + random_regex(rng, dict, depth - 1) + " )" + ops[pick(3)];
    }
    }
}

} // namespace ppmine
