#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppmine/pattern_vars.hpp"
#include "ppmine/seqdb.hpp"

namespace ppmine {

// Regular expressions over items.
//
// Surface syntax: item names, '.', '|', '*', '+', '?', '(' and ')'.
// Operator characters always form a token of their own; any other run of
// non-whitespace characters is one item name, so "A*B(B|C)" and
// "A * B ( B | C )" are the same expression while "AB" names one item.
// Precedence from tightest: postfix operators, concatenation, alternation.

struct RegexNode {
    enum class Kind { literal, any, concat, alternation, star, plus, optional };

    Kind kind = Kind::literal;
    ItemId item = 0;
    std::vector<std::size_t> children;
};

struct RegexAst {
    std::vector<RegexNode> nodes;
    std::size_t root = 0;
    std::size_t num_items = 0;

    /// Fully parenthesized rendering, parseable by parse_regex.
    std::string to_string(const ItemDictionary& dict) const;
};

/// Throws RegexSyntaxError (with the character offset) or UnknownItemError.
RegexAst parse_regex(std::string_view expr, const ItemDictionary& dict);

/// Thompson automaton with epsilon moves.
class Nfa {
public:
    static constexpr std::int32_t kEpsilonOnly = -1;
    static constexpr std::int32_t kAnyItem = -2;

    struct State {
        std::int32_t label = kEpsilonOnly; ///< item id, kAnyItem or kEpsilonOnly
        std::uint32_t next = 0;            ///< target of the labelled edge
        std::vector<std::uint32_t> epsilon;
    };

    std::vector<State> states;
    std::uint32_t start = 0;
    std::uint32_t accept = 0;
    std::size_t num_items = 0;

    /// Direct simulation over a set of states.
    bool accepts(std::span<const ItemId> word) const;
    /// Sorted epsilon closure of `set`.
    std::vector<std::uint32_t> closure(std::vector<std::uint32_t> set) const;
};

Nfa build_nfa(const RegexAst& ast);

/// Total deterministic automaton with an explicit dead state.
///
/// Symbols are item ids; an automaton built with augment_end_marker() has
/// one more symbol, #I, for the end-of-pattern marker.
class Dfa {
public:
    static constexpr std::uint32_t kNoState = UINT32_MAX;

    Dfa() = default;
    Dfa(std::size_t num_symbols, std::uint32_t start, std::vector<std::uint32_t> table,
        std::vector<char> accepting);

    std::size_t num_states() const noexcept { return accepting_.size(); }
    std::size_t num_symbols() const noexcept { return num_symbols_; }
    std::uint32_t start() const noexcept { return start_; }
    bool accepting(std::uint32_t q) const { return accepting_[q] != 0; }
    std::uint32_t next(std::uint32_t q, Value symbol) const { return table_[q * num_symbols_ + symbol]; }
    /// The non-accepting state that loops on every symbol, or kNoState.
    std::uint32_t dead() const noexcept { return dead_; }
    /// States from which no accepting state is reachable.
    std::vector<char> doomed() const;

    bool accepts(std::span<const Value> word) const;

    /// Text table, one "qS symbol -> qT" line per transition.
    std::string dump(const ItemDictionary& dict) const;

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    std::size_t num_symbols_ = 0;
    std::uint32_t start_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<char> accepting_;
    std::uint32_t dead_ = kNoState;
};

/// Subset construction over the item alphabet.
Dfa determinize(const Nfa& nfa);
/// Moore partition refinement; the result is renumbered canonically.
Dfa minimize(const Dfa& dfa);
/// Adds the end-marker symbol: from an accepting state it leads to an
/// accepting sink that loops on the marker and rejects items; from any
/// other state it leads to the dead state.
Dfa augment_end_marker(const Dfa& dfa);
/// Breadth-first renumbering from the start state, symbols in ascending order.
Dfa canonical(const Dfa& dfa);

/// parse -> Thompson NFA -> subset construction -> minimization ->
/// end-marker augmentation. '.' ranges over the dictionary.
Dfa compile_regex(std::string_view expr, const ItemDictionary& dict);

} // namespace ppmine
