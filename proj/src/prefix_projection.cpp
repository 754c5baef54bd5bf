#include "ppmine/prefix_projection.hpp"

#include <cassert>

#include "ppmine/error.hpp"

namespace ppmine {

PsdbStack::PsdbStack(const SequenceDatabase& db) { levels_.push_back(initial_projection(db)); }

std::span<const ProjEntry> PsdbStack::level(std::size_t depth) const {
    assert(depth < live_);
    return levels_[depth];
}

std::span<const ProjEntry> PsdbStack::push(const SequenceDatabase& db, ItemId item, ProjectionWork* work) {
    if (levels_.size() == live_) levels_.emplace_back();
    project_into(db, levels_[live_ - 1], item, levels_[live_], work);
    return levels_[live_++];
}

void PsdbStack::truncate(std::size_t depth) {
    if (depth + 1 < live_) live_ = depth + 1;
}

std::uint64_t PsdbStack::checksum() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(live_);
    for (std::size_t d = 0; d < live_; ++d) {
        mix(levels_[d].size());
        for (const auto& e : levels_[d]) mix((std::uint64_t{e.sid} << 32) | e.start);
    }
    return h;
}

PrefixProjectionFilter::PrefixProjectionFilter(const SequenceDatabase& db, Count minsup)
    : db_(db), minsup_(minsup), stack_(db), counter_(db.num_items()), keep_(db.num_items()) {
    if (minsup < 1) throw ParameterError("minsup must be >= 1");
}

Status PrefixProjectionFilter::propagate(PatternVars& vars, std::size_t assigned) {
    PrefixProjectionWork work;

    if (assigned == 0) {
        if (root_done_) return Status::Continue;
        root_done_ = true;
        const auto root = stack_.level(0);
        if (root.size() < minsup_) return Status::Fail;
        // The root scans the database itself, which plays the projected role.
        if (work_log_) work.projected_items = work.counted_items = suffix_items(db_, root);
        ProjectionWork pw;
        counter_.count(db_, root, minsup_, frequent_, &pw);
        work.counting_steps = pw.count_steps;
        const Status status = prune_future(vars, 0, work);
        if (work_log_) work_log_->push_back(work);
        return status;
    }

    assert(vars.fixed(assigned));
    const Value v = vars.value(assigned);

    if (vars.is_end(v)) {
        // The pattern ended at P(i-1); every later variable is the end marker.
        for (std::size_t j = assigned + 1; j <= vars.ell(); ++j) {
            vars.assign(j, vars.end_marker());
            if (vars.empty(j)) return Status::Fail;
        }
        return Status::Continue;
    }

    if (stack_.size() == assigned + 1) return Status::Continue;
    assert(stack_.size() == assigned);

    if (work_log_) work.projected_items = suffix_items(db_, stack_.top());
    ProjectionWork pw;
    const auto level = stack_.push(db_, v, &pw);
    work.projection_steps = pw.project_steps;
    if (level.size() < minsup_) {
        if (work_log_) work_log_->push_back(work);
        return Status::Fail;
    }

    if (work_log_) work.counted_items = suffix_items(db_, level);
    counter_.count(db_, level, minsup_, frequent_, &pw);
    work.counting_steps = pw.count_steps;
    const Status status = prune_future(vars, assigned, work);
    if (work_log_) work_log_->push_back(work);
    return status;
}

Status PrefixProjectionFilter::prune_future(PatternVars& vars, std::size_t assigned,
                                            PrefixProjectionWork& work) {
    for (ItemId a : kept_) keep_.reset(a);
    kept_ = frequent_.items;
    for (ItemId a : kept_) keep_.set(a);

    const std::size_t words = (vars.num_items() + 1 + 63) / 64;
    for (std::size_t j = assigned + 1; j <= vars.ell(); ++j) {
        vars.restrict_items(j, keep_, true);
        work.pruning_steps += words;
        ++work.future_vars;
        if (vars.empty(j)) return Status::Fail;
    }
    return Status::Continue;
}

void PrefixProjectionFilter::restore(std::size_t depth) { stack_.truncate(depth); }

} // namespace ppmine
