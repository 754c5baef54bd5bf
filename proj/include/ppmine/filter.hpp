#pragma once

#include <cstddef>
#include <string_view>

#include "ppmine/pattern_vars.hpp"

namespace ppmine {

enum class Status { Continue, Fail };

/// A constraint filter over the pattern variables.
///
/// `post` runs once at the root before any assignment. `propagate` runs
/// after P1..Pi are assigned (i == 0 at the root) and must be idempotent at
/// a fixed i. `restore` is called when the search backtracks to `depth`
/// assigned variables, after the domains have been restored.
class Filter {
public:
    virtual ~Filter() = default;

    virtual std::string_view name() const = 0;
    virtual Status post(PatternVars& vars) { return propagate(vars, 0); }
    virtual Status propagate(PatternVars& vars, std::size_t assigned) = 0;
    virtual void restore(std::size_t /*depth*/) {}
};

} // namespace ppmine
