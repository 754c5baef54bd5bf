#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ppmine/filter.hpp"
#include "ppmine/projection.hpp"

namespace ppmine {

/// Stack of pseudo-projected databases, one level per assigned item of the
/// current prefix. Level 0 is the initial projection. Popped levels keep
/// their capacity so the search does not reallocate on every node.
class PsdbStack {
public:
    explicit PsdbStack(const SequenceDatabase& db);

    /// Number of live levels, including level 0.
    std::size_t size() const noexcept { return live_; }
    std::span<const ProjEntry> level(std::size_t depth) const;
    std::span<const ProjEntry> top() const { return level(live_ - 1); }

    /// Projects the top level on `item` and pushes the result.
    std::span<const ProjEntry> push(const SequenceDatabase& db, ItemId item, ProjectionWork* work);
    /// Pops every level above `depth`.
    void truncate(std::size_t depth);
    std::uint64_t checksum() const;

private:
    std::vector<PseudoProjection> levels_;
    std::size_t live_ = 1;
};

/// Per-call work record of the filter, for complexity instrumentation.
struct PrefixProjectionWork {
    std::uint64_t projected_items = 0; ///< items in the suffixes scanned by the projection
    std::uint64_t counted_items = 0;   ///< items in the suffixes of the new level
    std::uint64_t projection_steps = 0;
    std::uint64_t counting_steps = 0;
    std::uint64_t pruning_steps = 0;   ///< domain words visited
    std::size_t future_vars = 0;

    std::uint64_t total() const { return projection_steps + counting_steps + pruning_steps; }
};

/// The Prefix-Projection global constraint: frequency of the pattern and
/// pruning of locally infrequent items from every future variable.
///
/// The filter assumes variables are assigned in order P1, P2, ... and keeps
/// one projected database per assigned item.
class PrefixProjectionFilter final : public Filter {
public:
    PrefixProjectionFilter(const SequenceDatabase& db, Count minsup);

    std::string_view name() const override { return "prefix-projection"; }
    Status propagate(PatternVars& vars, std::size_t assigned) override;
    void restore(std::size_t depth) override;

    const PsdbStack& stack() const noexcept { return stack_; }
    /// Support of the current prefix of `length` items.
    Count support(std::size_t length) const { return static_cast<Count>(stack_.level(length).size()); }
    const FrequentItemSet& last_frequent() const noexcept { return frequent_; }

    /// When set, every call that projects records its work here.
    void set_work_log(std::vector<PrefixProjectionWork>* log) { work_log_ = log; }

private:
    Status prune_future(PatternVars& vars, std::size_t assigned, PrefixProjectionWork& work);

    const SequenceDatabase& db_;
    Count minsup_;
    PsdbStack stack_;
    ItemCounter counter_;
    FrequentItemSet frequent_;
    ValueMask keep_;
    std::vector<ItemId> kept_;
    bool root_done_ = false;
    std::vector<PrefixProjectionWork>* work_log_ = nullptr;
};

} // namespace ppmine
