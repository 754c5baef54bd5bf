#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppmine/miner.hpp"
#include "ppmine/oracle.hpp"

namespace ppmine {

/// One constraint combination, expressed in names so it can be compiled for
/// either side of the comparison.
struct Scenario {
    std::string name;
    std::optional<std::size_t> min_size;
    std::vector<std::string> require;
    std::vector<std::string> exclude;
    std::string regex; ///< empty: no regular constraint
};

struct VerifyOutcome {
    bool equal = false;
    std::size_t engine_patterns = 0;
    std::size_t oracle_patterns = 0;
    std::vector<Pattern> missing; ///< oracle only
    std::vector<Pattern> extra;   ///< engine only, or support mismatch
    MiningStats stats;
};

/// Frequency only, min-size 2..4, require one item, exclude one item, a
/// random small regex, and all of them combined. Items and the regex are
/// drawn from `seed`.
std::vector<Scenario> standard_scenarios(const SequenceDatabase& db, std::uint64_t seed);

/// Engine configuration for a scenario (ell = longest sequence).
MiningConfig engine_config(const SequenceDatabase& db, Count minsup, const Scenario& s);
/// Oracle configuration for the same scenario, regex via NFA simulation.
OracleConfig oracle_config(const SequenceDatabase& db, Count minsup, const Scenario& s);

/// Runs engine and oracle and compares pattern sets and supports.
/// `drop_last` removes the last engine pattern; it exists to test that the
/// harness notices a broken engine.
VerifyOutcome verify_scenario(const SequenceDatabase& db, Count minsup, const Scenario& s,
                              bool drop_last = false);

} // namespace ppmine
