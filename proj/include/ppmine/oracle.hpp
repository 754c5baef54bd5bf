#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ppmine/engine.hpp"
#include "ppmine/regex.hpp"
#include "ppmine/seqdb.hpp"
#include "ppmine/side_constraints.hpp"

namespace ppmine {

/// Pattern -> support, ordered lexicographically by item ids.
using PatternSupports = std::map<Pattern, Count>;

/// Declarative constraint set evaluated directly on candidate patterns.
struct OracleConfig {
    std::size_t max_pattern_length = 0;
    Count minsup = 1;
    std::optional<std::size_t> min_size;
    std::vector<AmongSpec> among;
    /// Checked by NFA simulation, never through a DFA.
    std::shared_ptr<const Nfa> regex;
};

struct RandomDbParams {
    std::uint64_t seed = 1;
    std::size_t num_sequences = 1;
    std::size_t max_length = 1;
    std::size_t alphabet = 1;
};

/// Generate-and-test: start from single items, append every item to every
/// frequent pattern, keep candidates whose ground-truth support reaches
/// minsup, then apply the declarative predicates. Desk scale only.
PatternSupports enumerate_frequent(const SequenceDatabase& db, const OracleConfig& cfg);

/// size / item / regex predicates of `cfg` on `p` (frequency excluded).
bool check_pattern(const Pattern& p, const OracleConfig& cfg);

/// Uniform items in [1, alphabet] (interned in first-seen order), lengths
/// uniform in [1, max_length]. Deterministic in the seed.
SequenceDatabase random_db(const RandomDbParams& params);

/// Random expression over the items of `dict` using every operator of the
/// regex grammar; nesting is bounded by `depth`.
std::string random_regex(std::mt19937_64& rng, const ItemDictionary& dict, int depth);

} // namespace ppmine
