#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "ppmine/filter.hpp"
#include "ppmine/regex.hpp"

namespace ppmine {

/// size(P, lmin): P1..Plmin must not be the end marker. Applied once at the
/// root. Fails when lmin exceeds the pattern capacity.
Status min_size_post(PatternVars& vars, std::size_t ell_min);

/// Occurrence bounds for one item; the end marker is never counted.
struct AmongSpec {
    ItemId item = 0;
    Count lower = 0;
    Count upper = 0;

    friend bool operator==(const AmongSpec&, const AmongSpec&) = default;
};

/// Among(P, {t}, l, u) with bounds-style filtering.
class AmongFilter final : public Filter {
public:
    /// Throws ParameterError unless lower <= upper <= ell.
    AmongFilter(AmongSpec spec, std::size_t ell);

    std::string_view name() const override { return "among"; }
    Status propagate(PatternVars& vars, std::size_t assigned) override;

    const AmongSpec& spec() const noexcept { return spec_; }

private:
    AmongSpec spec_;
};

/// Regular(P, A) over an end-marker augmented automaton: layered forward
/// and backward reachability; a value survives at position k only if some
/// accepted padded word of length ell uses it there.
class RegularFilter final : public Filter {
public:
    explicit RegularFilter(std::shared_ptr<const Dfa> dfa);

    std::string_view name() const override { return "regular"; }
    Status propagate(PatternVars& vars, std::size_t assigned) override;

    const Dfa& dfa() const noexcept { return *dfa_; }

private:
    std::shared_ptr<const Dfa> dfa_;
    std::vector<char> doomed_;
    std::vector<char> forward_;
    std::vector<char> backward_;
    std::vector<char> supported_;
};

} // namespace ppmine
