#include "ppmine/engine.hpp"

#include <cassert>

#include "ppmine/error.hpp"
#include "ppmine/side_constraints.hpp"

namespace ppmine {

MiningStats& MiningStats::operator+=(const MiningStats& other) {
    nodes += other.nodes;
    filter_calls += other.filter_calls;
    value_removals += other.value_removals;
    failures += other.failures;
    solutions += other.solutions;
    elapsed += other.elapsed;
    return *this;
}

Pattern decode_solution(std::span<const Value> assignment, Value end_marker) {
    Pattern p;
    for (Value v : assignment) {
        if (v == end_marker) break;
        p.push_back(static_cast<ItemId>(v));
    }
    assert(!p.empty());
    return p;
}

namespace {

std::size_t checked_ell(const SequenceDatabase& db, const SearchParams& params) {
    if (params.minsup < 1) throw ParameterError("minsup must be >= 1");
    const std::size_t ell = params.ell.value_or(db.max_length());
    if (ell < 1) throw ParameterError("pattern capacity ell must be >= 1");
    return ell;
}

} // namespace

SearchState::SearchState(const SequenceDatabase& db, SearchParams params)
    : db_(db),
      minsup_(params.minsup),
      vars_(checked_ell(db, params), db.num_items()),
      pp_(std::make_unique<PrefixProjectionFilter>(db, params.minsup)) {
    // The pattern is never empty: P1 cannot be the end marker.
    vars_.remove(1, vars_.end_marker());
    if (vars_.empty(1)) root_failed_ = true;
}

void SearchState::add_filter(std::unique_ptr<Filter> filter) {
    assert(depth() == 0);
    if (!root_failed_ && (filter->post(vars_) == Status::Fail || vars_.any_empty())) root_failed_ = true;
    side_.push_back(std::move(filter));
    root_status_.reset();
}

void SearchState::post_min_size(std::size_t ell_min) {
    assert(depth() == 0);
    if (!root_failed_ && min_size_post(vars_, ell_min) == Status::Fail) root_failed_ = true;
    root_status_.reset();
}

Status SearchState::propagate(std::size_t assigned) {
    const std::uint64_t removals_before = vars_.removals();
    Status status = Status::Continue;
    for (;;) {
        const std::uint64_t before = vars_.removals();
        ++stats_.filter_calls;
        if (pp_->propagate(vars_, assigned) == Status::Fail) {
            status = Status::Fail;
            break;
        }
        for (auto& f : side_) {
            ++stats_.filter_calls;
            if (f->propagate(vars_, assigned) == Status::Fail) {
                status = Status::Fail;
                break;
            }
        }
        if (status == Status::Fail) break;
        if (vars_.any_empty()) {
            status = Status::Fail;
            break;
        }
        if (vars_.removals() == before) break;
    }
    stats_.value_removals += vars_.removals() - removals_before;
    return status;
}

Status SearchState::propagate_root() {
    assert(depth() == 0);
    if (root_failed_) return Status::Fail;
    if (!root_status_) {
        root_status_ = propagate(0);
        if (*root_status_ == Status::Fail) root_failed_ = true;
    }
    return *root_status_;
}

Status SearchState::assign(Value v) {
    const std::size_t pos = depth() + 1;
    assert(pos <= ell());
    vars_.push_level();
    ++stats_.nodes;
    vars_.assign(pos, v);
    Status status = vars_.empty(pos) ? Status::Fail : propagate(pos);
    if (status == Status::Fail) ++stats_.failures;
    return status;
}

void SearchState::restore(std::size_t to_depth) {
    while (depth() > to_depth) vars_.pop_level();
    pp_->restore(to_depth);
    for (auto& f : side_) f->restore(to_depth);
}

void SearchState::emit_solution(const PatternSink& emit) {
    scratch_.clear();
    for (std::size_t pos = 1; pos <= ell(); ++pos) {
        assert(vars_.fixed(pos));
        scratch_.push_back(vars_.value(pos));
    }
    const Pattern p = decode_solution(scratch_, vars_.end_marker());
    ++stats_.solutions;
    emit(p, pp_->support(p.size()));
}

void SearchState::dfs(std::size_t assigned, const PatternSink& emit) {
    const std::size_t pos = assigned + 1;
    const Value end = vars_.end_marker();

    std::vector<Value> order;
    order.reserve(vars_.size(pos));
    if (vars_.contains(pos, end)) order.push_back(end);
    vars_.for_each(pos, [&](Value v) {
        if (v != end) order.push_back(v);
    });

    for (Value v : order) {
        if (assign(v) == Status::Continue) {
            if (v == end || pos == ell()) {
                emit_solution(emit);
            } else {
                dfs(pos, emit);
            }
        }
        restore(assigned);
    }
}

MiningStats SearchState::solve_all(const PatternSink& emit) {
    const auto t0 = std::chrono::steady_clock::now();
    if (propagate_root() == Status::Continue) dfs(0, emit);
    stats_.elapsed += std::chrono::steady_clock::now() - t0;
    return stats_;
}

MiningStats SearchState::solve_branch(ItemId item, const PatternSink& emit) {
    const auto t0 = std::chrono::steady_clock::now();
    if (propagate_root() == Status::Continue && item < db_.num_items() && vars_.contains(1, item)) {
        if (assign(item) == Status::Continue) {
            if (ell() == 1) {
                emit_solution(emit);
            } else {
                dfs(1, emit);
            }
        }
        restore(0);
    }
    stats_.elapsed += std::chrono::steady_clock::now() - t0;
    return stats_;
}

std::uint64_t SearchState::fingerprint() const {
    const std::uint64_t a = vars_.checksum();
    const std::uint64_t b = pp_->stack().checksum();
    return a ^ (b * 0x9e3779b97f4a7c15ull) ^ (depth() << 1);
}

} // namespace ppmine
