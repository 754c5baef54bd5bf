#include "ppmine/side_constraints.hpp"

#include "ppmine/error.hpp"

namespace ppmine {

Status min_size_post(PatternVars& vars, std::size_t ell_min) {
    if (ell_min > vars.ell()) return Status::Fail;
    for (std::size_t pos = 1; pos <= ell_min; ++pos) {
        vars.remove(pos, vars.end_marker());
        if (vars.empty(pos)) return Status::Fail;
    }
    return Status::Continue;
}

AmongFilter::AmongFilter(AmongSpec spec, std::size_t ell) : spec_(spec) {
    if (spec.lower > spec.upper || spec.upper > ell) {
        throw ParameterError("among bounds must satisfy 0 <= l <= u <= ell");
    }
}

Status AmongFilter::propagate(PatternVars& vars, std::size_t /*assigned*/) {
    const Value t = spec_.item;
    const Value end = vars.end_marker();
    std::size_t fixed = 0;
    std::size_t possible = 0;
    for (std::size_t pos = 1; pos <= vars.ell(); ++pos) {
        if (!vars.contains(pos, t)) continue;
        if (vars.fixed(pos)) {
            ++fixed;
        } else {
            ++possible;
        }
    }

    if (fixed > spec_.upper) return Status::Fail;
    if (fixed + possible < spec_.lower) return Status::Fail;

    if (possible == 0) return Status::Continue;

    if (fixed == spec_.upper) {
        for (std::size_t pos = 1; pos <= vars.ell(); ++pos) {
            if (!vars.fixed(pos)) vars.remove(pos, t);
        }
        return Status::Continue;
    }

    if (spec_.lower > fixed && spec_.lower - fixed == possible) {
        // Every open position admitting t must take it; where only t and the
        // end marker remain, the marker goes.
        for (std::size_t pos = 1; pos <= vars.ell(); ++pos) {
            if (vars.fixed(pos) || !vars.contains(pos, t)) continue;
            if (vars.size(pos) == 2 && vars.contains(pos, end)) vars.remove(pos, end);
        }
    }
    return Status::Continue;
}

} // namespace ppmine
