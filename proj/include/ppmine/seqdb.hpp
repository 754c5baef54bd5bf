#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ppmine {

/// Dense item index in [0, #I). The end-of-pattern marker is not an item.
using ItemId = std::uint32_t;
/// Sequence identifier, dense in [1, m].
using SequenceId = std::uint32_t;
using Count = std::uint32_t;

using ItemSequence = std::vector<ItemId>;

/// Bidirectional map between external item names and dense ids.
///
/// Names are the raw tokens read from the input. SPMF files may also carry
/// `@ITEM=<id>=<label>` lines; those labels are used for display and are
/// accepted wherever a name is looked up.
class ItemDictionary {
public:
    /// Returns the id of `name`, adding it when first seen.
    ItemId intern(std::string_view name);

    std::optional<ItemId> find(std::string_view name) const;
    /// Like find() but throws UnknownItemError.
    ItemId lookup(std::string_view name) const;

    const std::string& name(ItemId id) const { return names_.at(id); }
    /// Label when one was declared, otherwise the raw name.
    const std::string& display(ItemId id) const;
    void set_label(ItemId id, std::string label);

    std::size_t size() const noexcept { return names_.size(); }

    friend bool operator==(const ItemDictionary& a, const ItemDictionary& b) {
        return a.names_ == b.names_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ItemId> by_name_;
    std::unordered_map<std::string, ItemId> by_label_;
};

struct Sequence {
    SequenceId sid = 0;
    ItemSequence items;

    std::size_t length() const noexcept { return items.size(); }
    /// 1-based access.
    ItemId at(std::size_t pos) const { return items[pos - 1]; }

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

struct DbStats {
    std::size_t num_sequences = 0;
    std::size_t num_items = 0;
    double avg_length = 0.0;
    std::size_t max_length = 0;
};

/// Immutable sequence database. Safe to share between threads once built.
class SequenceDatabase {
public:
    SequenceDatabase() = default;
    SequenceDatabase(std::vector<ItemSequence> sequences, ItemDictionary dictionary);

    std::size_t size() const noexcept { return sequences_.size(); }
    bool empty() const noexcept { return sequences_.empty(); }
    std::size_t num_items() const noexcept { return dictionary_.size(); }
    std::size_t max_length() const noexcept { return max_length_; }

    /// 1-based lookup by sid.
    const Sequence& operator[](SequenceId sid) const { return sequences_[sid - 1]; }
    std::span<const Sequence> sequences() const noexcept { return sequences_; }
    const ItemDictionary& dictionary() const noexcept { return dictionary_; }

    friend bool operator==(const SequenceDatabase& a, const SequenceDatabase& b) {
        return a.sequences_ == b.sequences_ && a.dictionary_ == b.dictionary_;
    }

private:
    std::vector<Sequence> sequences_;
    ItemDictionary dictionary_;
    std::size_t max_length_ = 0;
};

/// Reads SPMF sequence format: integer items, -1 closes an itemset, -2
/// closes a sequence. Every itemset must hold exactly one item. Lines that
/// start with '@', '#' or '%' are metadata.
SequenceDatabase load_spmf(std::istream& in);
/// One sequence per line, whitespace-separated item names.
SequenceDatabase load_symbolic(std::istream& in);

enum class InputFormat { spmf, symbolic };
SequenceDatabase load_file(const std::string& path, InputFormat format);

/// Non-numeric item names are written as ids 1..#I with @ITEM labels.
void write_spmf(std::ostream& out, const SequenceDatabase& db);
void write_symbolic(std::ostream& out, const SequenceDatabase& db);

/// Greedy leftmost embedding test, O(#s).
bool is_subsequence(std::span<const ItemId> alpha, std::span<const ItemId> s);

/// Number of sequences of `db` containing `pattern`.
Count support(const SequenceDatabase& db, std::span<const ItemId> pattern);

/// Throws EmptyDatabaseError on an empty database.
DbStats stats(const SequenceDatabase& db);

/// Resolves names through the dictionary of `db`.
ItemSequence make_items(const SequenceDatabase& db, std::string_view names);

} // namespace ppmine
