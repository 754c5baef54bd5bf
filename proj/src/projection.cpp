#include "ppmine/projection.hpp"

#include <algorithm>
#include <cassert>

#include "ppmine/error.hpp"

namespace ppmine {

bool FrequentItemSet::contains(ItemId item) const {
    return std::binary_search(items.begin(), items.end(), item);
}

Count FrequentItemSet::count(ItemId item) const {
    auto it = std::lower_bound(items.begin(), items.end(), item);
    if (it == items.end() || *it != item) return 0;
    return counts[static_cast<std::size_t>(it - items.begin())];
}

PseudoProjection initial_projection(const SequenceDatabase& db) {
    PseudoProjection proj;
    proj.reserve(db.size());
    for (const auto& seq : db.sequences()) proj.push_back({seq.sid, 1});
    return proj;
}

PseudoProjection project(const SequenceDatabase& db, const PseudoProjection& proj,
                         std::span<const ItemId> alpha, ProjectionWork* work) {
    assert(!alpha.empty());
    PseudoProjection out;
    for (const auto& [sid, start] : proj) {
        const auto& s = db[sid];
        assert(start >= 1 && start <= s.length() + 1);
        std::size_t pos_alpha = 0;
        std::size_t pos_s = start;
        while (pos_alpha < alpha.size() && pos_s <= s.length()) {
            if (alpha[pos_alpha] == s.at(pos_s)) ++pos_alpha;
            ++pos_s;
        }
        if (work) work->project_steps += pos_s - start;
        if (pos_alpha == alpha.size()) out.push_back({sid, static_cast<std::uint32_t>(pos_s)});
    }
    return out;
}

void project_into(const SequenceDatabase& db, std::span<const ProjEntry> proj, ItemId item,
                  PseudoProjection& out, ProjectionWork* work) {
    out.clear();
    std::uint64_t steps = 0;
    for (const auto& [sid, start] : proj) {
        const auto& items = db[sid].items;
        const auto first = items.begin() + (start - 1);
        const auto hit = std::find(first, items.end(), item);
        if (hit == items.end()) {
            steps += static_cast<std::uint64_t>(items.end() - first);
            continue;
        }
        const auto next = static_cast<std::uint32_t>(hit - items.begin()) + 2;
        steps += next - start;
        out.push_back({sid, next});
    }
    if (work) work->project_steps += steps;
}

std::uint64_t suffix_items(const SequenceDatabase& db, std::span<const ProjEntry> proj) {
    std::uint64_t total = 0;
    for (const auto& [sid, start] : proj) total += db[sid].length() + 1 - start;
    return total;
}

ItemCounter::ItemCounter(std::size_t num_items) { ensure(num_items); }

void ItemCounter::ensure(std::size_t num_items) {
    if (sup_count_.size() < num_items) {
        sup_count_.resize(num_items, 0);
        count_stamp_.resize(num_items, 0);
        seen_stamp_.resize(num_items, 0);
    }
}

void ItemCounter::count(const SequenceDatabase& db, std::span<const ProjEntry> proj, Count minsup,
                        FrequentItemSet& out, ProjectionWork* work) {
    if (minsup < 1) throw ParameterError("minsup must be >= 1");
    ensure(db.num_items());
    out.items.clear();
    out.counts.clear();

    if (++call_ == 0) {
        std::fill(count_stamp_.begin(), count_stamp_.end(), 0);
        call_ = 1;
    }
    std::uint64_t steps = 0;
    for (const auto& [sid, start] : proj) {
        if (++entry_ == 0) {
            std::fill(seen_stamp_.begin(), seen_stamp_.end(), 0);
            entry_ = 1;
        }
        const auto& items = db[sid].items;
        for (auto it = items.begin() + (start - 1); it != items.end(); ++it) {
            const ItemId a = *it;
            if (seen_stamp_[a] == entry_) continue;
            seen_stamp_[a] = entry_;
            if (count_stamp_[a] != call_) {
                count_stamp_[a] = call_;
                sup_count_[a] = 0;
            }
            if (++sup_count_[a] == minsup) out.items.push_back(a);
        }
        steps += items.size() + 1 - start;
    }
    if (work) work->count_steps += steps;

    std::sort(out.items.begin(), out.items.end());
    out.counts.reserve(out.items.size());
    for (ItemId a : out.items) out.counts.push_back(sup_count_[a]);
}

FrequentItemSet frequent_items(const SequenceDatabase& db, const PseudoProjection& proj, Count minsup) {
    ItemCounter counter(db.num_items());
    FrequentItemSet out;
    counter.count(db, proj, minsup, out);
    return out;
}

} // namespace ppmine
