#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ppmine/seqdb.hpp"

namespace ppmine {

/// Domain value: an item id in [0, #I) or the end-of-pattern marker, which
/// is encoded as #I.
using Value = std::uint32_t;

/// Dense bitset over the value universe I + {end marker}.
class ValueMask {
public:
    ValueMask() = default;
    explicit ValueMask(std::size_t num_values, bool filled = false);

    void set(Value v) { words_[v >> 6] |= bit(v); }
    void reset(Value v) { words_[v >> 6] &= ~bit(v); }
    bool test(Value v) const { return (words_[v >> 6] & bit(v)) != 0; }
    std::size_t count() const;
    std::size_t num_values() const noexcept { return num_values_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    static std::uint64_t bit(Value v) { return std::uint64_t{1} << (v & 63); }

    std::size_t num_values_ = 0;
    std::vector<std::uint64_t> words_;
};

/// The pattern variables P1..Pl with domains over I + {end marker}.
///
/// Positions are 1-based. Every change is recorded on a word-granular trail;
/// push_level() opens a checkpoint and pop_level() undoes all changes made
/// since the matching push.
class PatternVars {
public:
    PatternVars(std::size_t ell, std::size_t num_items);

    std::size_t ell() const noexcept { return ell_; }
    std::size_t num_items() const noexcept { return num_items_; }
    Value end_marker() const noexcept { return static_cast<Value>(num_items_); }
    bool is_end(Value v) const noexcept { return v == num_items_; }

    bool contains(std::size_t pos, Value v) const {
        return (word(pos, v >> 6) >> (v & 63)) & 1u;
    }
    std::size_t size(std::size_t pos) const { return sizes_[pos - 1]; }
    bool empty(std::size_t pos) const { return sizes_[pos - 1] == 0; }
    bool fixed(std::size_t pos) const { return sizes_[pos - 1] == 1; }
    /// The single remaining value; requires fixed(pos).
    Value value(std::size_t pos) const;
    /// Values in ascending order (items first, end marker last).
    std::vector<Value> values(std::size_t pos) const;

    /// Calls f(value) for every value in the domain, ascending.
    template <class F>
    void for_each(std::size_t pos, F&& f) const {
        const std::uint64_t* w = &bits_[(pos - 1) * words_per_var_];
        for (std::size_t k = 0; k < words_per_var_; ++k) {
            std::uint64_t bits = w[k];
            while (bits) {
                const auto v = static_cast<Value>(k * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
                f(v);
            }
        }
    }

    /// Returns true when `v` was present.
    bool remove(std::size_t pos, Value v);
    /// Reduces the domain to {v}; empties it when v is absent.
    /// Returns the number of values removed.
    std::size_t assign(std::size_t pos, Value v);
    /// Keeps only the item values present in `keep`; the end marker is kept
    /// if `keep_end`. Returns the number of values removed.
    std::size_t restrict_items(std::size_t pos, const ValueMask& keep, bool keep_end);

    void push_level();
    void pop_level();
    std::size_t level() const noexcept { return checkpoints_.size(); }

    /// Cumulative number of values removed (never decreases on undo).
    std::uint64_t removals() const noexcept { return removals_; }
    bool any_empty() const;
    /// FNV-1a digest of all domains.
    std::uint64_t checksum() const;

private:
    struct TrailEntry {
        std::uint32_t index;
        std::uint64_t old_bits;
    };

    std::uint64_t word(std::size_t pos, std::size_t k) const { return bits_[(pos - 1) * words_per_var_ + k]; }
    void write(std::size_t index, std::uint64_t bits);

    std::size_t ell_;
    std::size_t num_items_;
    std::size_t words_per_var_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> sizes_;
    std::vector<TrailEntry> trail_;
    std::vector<std::size_t> checkpoints_;
    std::uint64_t removals_ = 0;
};

} // namespace ppmine
