#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ppmine/seqdb.hpp"

namespace ppmine {

/// One pseudo-projected suffix: the suffix of sequence `sid` that starts at
/// 1-based position `start`. start == length + 1 encodes the empty suffix.
struct ProjEntry {
    SequenceId sid = 0;
    std::uint32_t start = 1;

    friend bool operator==(const ProjEntry&, const ProjEntry&) = default;
};

using PseudoProjection = std::vector<ProjEntry>;

/// Work counters for the projection kernels. Each unit is one item read
/// from a database sequence.
struct ProjectionWork {
    std::uint64_t project_steps = 0;
    std::uint64_t count_steps = 0;
};

/// Locally frequent items of a projection, ascending by id.
struct FrequentItemSet {
    std::vector<ItemId> items;
    std::vector<Count> counts;

    bool contains(ItemId item) const;
    Count count(ItemId item) const;
};

/// {(sid, 1)} for every sequence, in sid order.
PseudoProjection initial_projection(const SequenceDatabase& db);

/// Leftmost embedding of `alpha` in every suffix of `proj`. Entries whose
/// suffix does not contain `alpha` are dropped; order is preserved.
PseudoProjection project(const SequenceDatabase& db, const PseudoProjection& proj,
                         std::span<const ItemId> alpha, ProjectionWork* work = nullptr);

/// In-place variant used by the search; `out` is cleared first.
void project_into(const SequenceDatabase& db, std::span<const ProjEntry> proj, ItemId item,
                  PseudoProjection& out, ProjectionWork* work = nullptr);

/// Sum of suffix lengths, i.e. the number of items a scan of `proj` reads.
std::uint64_t suffix_items(const SequenceDatabase& db, std::span<const ProjEntry> proj);

/// Scratch tables for support counting over dense item ids. Resets are O(1)
/// through generation stamps, so a count costs O(suffix items) plus the
/// size of the result.
class ItemCounter {
public:
    explicit ItemCounter(std::size_t num_items = 0);

    void count(const SequenceDatabase& db, std::span<const ProjEntry> proj, Count minsup,
               FrequentItemSet& out, ProjectionWork* work = nullptr);

private:
    void ensure(std::size_t num_items);

    std::vector<Count> sup_count_;
    std::vector<std::uint32_t> count_stamp_;
    std::vector<std::uint32_t> seen_stamp_;
    std::uint32_t call_ = 0;
    std::uint32_t entry_ = 0;
};

/// Items whose number of suffixes containing them is >= minsup.
/// Requires minsup >= 1.
FrequentItemSet frequent_items(const SequenceDatabase& db, const PseudoProjection& proj, Count minsup);

} // namespace ppmine
