#include "ppmine/verify.hpp"

#include <random>

namespace ppmine {

std::vector<Scenario> standard_scenarios(const SequenceDatabase& db, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 17);
    const auto& dict = db.dictionary();
    auto any_item = [&]() {
        return dict.name(static_cast<ItemId>(std::uniform_int_distribution<std::size_t>(0, dict.size() - 1)(rng)));
    };

    std::vector<Scenario> out;
    out.push_back({"frequency", {}, {}, {}, {}});
    for (std::size_t k = 2; k <= 4; ++k) out.push_back({"min-size-" + std::to_string(k), k, {}, {}, {}});
    const std::string required = any_item();
    const std::string excluded = any_item();
    const std::string regex = random_regex(rng, dict, 3);
    out.push_back({"require", {}, {required}, {}, {}});
    out.push_back({"exclude", {}, {}, {excluded}, {}});
    out.push_back({"regex", {}, {}, {}, regex});
    Scenario all{"combined", 2, {required}, {}, regex};
    if (excluded != required) all.exclude.push_back(excluded);
    out.push_back(std::move(all));
    return out;
}

namespace {

std::vector<AmongSpec> among_specs(const SequenceDatabase& db, std::size_t ell, const Scenario& s) {
    std::vector<AmongSpec> among;
    for (const auto& name : s.require) {
        among.push_back({db.dictionary().lookup(name), 1, static_cast<Count>(ell)});
    }
    for (const auto& name : s.exclude) among.push_back({db.dictionary().lookup(name), 0, 0});
    return among;
}

} // namespace

MiningConfig engine_config(const SequenceDatabase& db, Count minsup, const Scenario& s) {
    MiningConfig cfg;
    cfg.minsup = minsup;
    cfg.min_size = s.min_size;
    cfg.among = among_specs(db, db.max_length(), s);
    if (!s.regex.empty()) cfg.regex = std::make_shared<const Dfa>(compile_regex(s.regex, db.dictionary()));
    return cfg;
}

OracleConfig oracle_config(const SequenceDatabase& db, Count minsup, const Scenario& s) {
    OracleConfig cfg;
    cfg.max_pattern_length = db.max_length();
    cfg.minsup = minsup;
    cfg.min_size = s.min_size;
    cfg.among = among_specs(db, db.max_length(), s);
    if (!s.regex.empty()) {
        cfg.regex = std::make_shared<const Nfa>(build_nfa(parse_regex(s.regex, db.dictionary())));
    }
    return cfg;
}

VerifyOutcome verify_scenario(const SequenceDatabase& db, Count minsup, const Scenario& s, bool drop_last) {
    VerifyOutcome out;
    auto mined = mine(db, engine_config(db, minsup, s));
    if (drop_last && !mined.patterns.empty()) mined.patterns.pop_back();
    const auto expected = enumerate_frequent(db, oracle_config(db, minsup, s));

    PatternSupports got;
    for (const auto& mp : mined.patterns) {
        if (!got.emplace(mp.items, mp.support).second) out.extra.push_back(mp.items);
    }
    for (const auto& [p, sup] : expected) {
        auto it = got.find(p);
        if (it == got.end()) {
            out.missing.push_back(p);
        } else if (it->second != sup) {
            out.extra.push_back(p);
        }
    }
    for (const auto& [p, sup] : got) {
        if (!expected.contains(p)) out.extra.push_back(p);
    }
    out.engine_patterns = mined.patterns.size();
    out.oracle_patterns = expected.size();
    out.stats = mined.stats;
    out.equal = out.missing.empty() && out.extra.empty();
    return out;
}

} // namespace ppmine
