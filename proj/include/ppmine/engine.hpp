#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ppmine/filter.hpp"
#include "ppmine/pattern_vars.hpp"
#include "ppmine/prefix_projection.hpp"
#include "ppmine/seqdb.hpp"

namespace ppmine {

/// A mined pattern: non-empty, no end marker, at most ell items.
using Pattern = std::vector<ItemId>;

/// Engine-defined counters. A node is one value tried for a variable; a
/// failure is a node whose propagation failed.
struct MiningStats {
    std::uint64_t nodes = 0;
    std::uint64_t filter_calls = 0;
    std::uint64_t value_removals = 0;
    std::uint64_t failures = 0;
    std::uint64_t solutions = 0;
    std::chrono::duration<double, std::milli> elapsed{0};

    MiningStats& operator+=(const MiningStats& other);
};

struct SearchParams {
    Count minsup = 1;
    /// Pattern capacity; nullopt uses the longest sequence of the database.
    std::optional<std::size_t> ell;
};

/// Called once per solution with the decoded pattern and its support.
using PatternSink = std::function<void(const Pattern&, Count)>;

/// Strips the end-marker suffix of a complete assignment.
Pattern decode_solution(std::span<const Value> assignment, Value end_marker);

/// Depth-first search over P1..Pl in lexicographic order, with the
/// Prefix-Projection filter always installed and side filters run after it
/// in registration order until no filter removes a value.
///
/// Not thread-safe; independent states over one database may run in
/// parallel.
class SearchState {
public:
    /// D(P1) = I, D(Pi) = I + {end} for i >= 2, PSDB0 installed.
    /// Throws ParameterError for minsup < 1 or ell < 1.
    SearchState(const SequenceDatabase& db, SearchParams params);

    SearchState(const SearchState&) = delete;
    SearchState& operator=(const SearchState&) = delete;

    /// Registers a side filter and runs its root-level post.
    void add_filter(std::unique_ptr<Filter> filter);
    /// Minimum pattern size, applied to the root domains.
    void post_min_size(std::size_t ell_min);

    const SequenceDatabase& db() const noexcept { return db_; }
    std::size_t ell() const noexcept { return vars_.ell(); }
    Count minsup() const noexcept { return minsup_; }
    const PatternVars& vars() const noexcept { return vars_; }
    PatternVars& vars() noexcept { return vars_; }
    const PrefixProjectionFilter& prefix_projection() const noexcept { return *pp_; }
    PrefixProjectionFilter& prefix_projection() noexcept { return *pp_; }
    const MiningStats& stats() const noexcept { return stats_; }
    bool root_failed() const noexcept { return root_failed_; }

    /// Number of assigned prefix variables.
    std::size_t depth() const noexcept { return vars_.level(); }

    /// Fixpoint of all filters after P1..Pi are assigned.
    Status propagate(std::size_t assigned);
    /// Root propagation; runs once, later calls return the cached status.
    Status propagate_root();

    /// Opens a level, assigns P(depth+1) = v and propagates. On Fail the
    /// caller must still restore(depth() - 1).
    Status assign(Value v);
    /// Pops every level above `to_depth`, undoing domain changes and PSDB
    /// levels.
    void restore(std::size_t to_depth);

    /// Full enumeration; emits each solution exactly once in search preorder
    /// (end marker first, then items ascending).
    MiningStats solve_all(const PatternSink& emit);
    /// Enumerates the subtree with P1 = item. Root propagation runs first
    /// if it has not yet.
    MiningStats solve_branch(ItemId item, const PatternSink& emit);

    /// Digest of domains and the PSDB stack, for backtracking checks.
    std::uint64_t fingerprint() const;

private:
    void dfs(std::size_t assigned, const PatternSink& emit);
    void emit_solution(const PatternSink& emit);

    const SequenceDatabase& db_;
    Count minsup_;
    PatternVars vars_;
    std::unique_ptr<PrefixProjectionFilter> pp_;
    std::vector<std::unique_ptr<Filter>> side_;
    MiningStats stats_;
    bool root_failed_ = false;
    std::optional<Status> root_status_;
    std::vector<Value> scratch_;
};

} // namespace ppmine
