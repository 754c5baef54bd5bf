#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "ppmine/engine.hpp"
#include "ppmine/regex.hpp"
#include "ppmine/side_constraints.hpp"

namespace ppmine {

/// Everything needed to build a search over one database.
struct MiningConfig {
    Count minsup = 1;
    std::optional<std::size_t> ell;
    std::optional<std::size_t> min_size;
    std::vector<AmongSpec> among;
    std::shared_ptr<const Dfa> regex;
};

struct MinedPattern {
    Pattern items;
    Count support = 0;

    friend bool operator==(const MinedPattern&, const MinedPattern&) = default;
};

struct MiningResult {
    std::vector<MinedPattern> patterns;
    MiningStats stats;
};

/// Absolute count ("12") or percentage of the sequences ("5%", "99.98%"),
/// rounded up. Throws ParameterError for 0 or a percentage outside (0, 100].
Count resolve_minsup(std::string_view text, std::size_t num_sequences);

/// Builds a search with the Prefix-Projection filter plus the side
/// constraints of `cfg`, in the order min-size, among, regular.
std::unique_ptr<SearchState> make_search(const SequenceDatabase& db, const MiningConfig& cfg);

/// Serial reference kernel: one search, preorder output.
MiningResult mine(const SequenceDatabase& db, const MiningConfig& cfg);

/// OpenMP kernel: the root domain of P1 is split across threads, each
/// running its own search. Output is identical to mine(), stats are summed
/// over workers. threads <= 0 uses the OpenMP default.
MiningResult mine_parallel(const SequenceDatabase& db, const MiningConfig& cfg, int threads = 0);

} // namespace ppmine
