#include "ppmine/seqdb.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ppmine/error.hpp"

namespace ppmine {

ItemId ItemDictionary::intern(std::string_view name) {
    std::string key(name);
    if (auto it = by_name_.find(key); it != by_name_.end()) return it->second;
    const auto id = static_cast<ItemId>(names_.size());
    names_.push_back(key);
    labels_.emplace_back();
    by_name_.emplace(std::move(key), id);
    return id;
}

std::optional<ItemId> ItemDictionary::find(std::string_view name) const {
    const std::string key(name);
    if (auto it = by_name_.find(key); it != by_name_.end()) return it->second;
    if (auto it = by_label_.find(key); it != by_label_.end()) return it->second;
    return std::nullopt;
}

ItemId ItemDictionary::lookup(std::string_view name) const {
    if (auto id = find(name)) return *id;
    throw UnknownItemError(std::string(name));
}

const std::string& ItemDictionary::display(ItemId id) const {
    const auto& label = labels_.at(id);
    return label.empty() ? names_[id] : label;
}

void ItemDictionary::set_label(ItemId id, std::string label) {
    by_label_.emplace(label, id);
    labels_.at(id) = std::move(label);
}

SequenceDatabase::SequenceDatabase(std::vector<ItemSequence> sequences, ItemDictionary dictionary)
    : dictionary_(std::move(dictionary)) {
    sequences_.reserve(sequences.size());
    SequenceId sid = 1;
    for (auto& items : sequences) {
        if (items.empty()) {
            throw FormatError("sequence " + std::to_string(sid) + " is empty");
        }
        for (ItemId item : items) {
            if (item >= dictionary_.size()) {
                throw FormatError("sequence " + std::to_string(sid) + " uses an item outside the dictionary");
            }
        }
        max_length_ = std::max(max_length_, items.size());
        sequences_.push_back(Sequence{sid++, std::move(items)});
    }
}

namespace {

bool is_metadata(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return false;
    const char c = line[first];
    return c == '@' || c == '#' || c == '%';
}

long parse_integer(std::string_view token, std::size_t sid) {
    long value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("sequence " + std::to_string(sid) + ": token '" + std::string(token) +
                         "' is not an integer");
    }
    return value;
}

// "@ITEM=<id>=<label>" as written by the SPMF text converters.
void parse_item_label(std::string_view line, std::vector<std::pair<std::string, std::string>>& labels) {
    constexpr std::string_view prefix = "@ITEM=";
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) return;
    line.remove_prefix(first);
    if (!line.starts_with(prefix)) return;
    line.remove_prefix(prefix.size());
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) return;
    std::string label(line.substr(eq + 1));
    while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.pop_back();
    labels.emplace_back(std::string(line.substr(0, eq)), std::move(label));
}

} // namespace

SequenceDatabase load_spmf(std::istream& in) {
    ItemDictionary dict;
    std::vector<ItemSequence> sequences;
    std::vector<std::pair<std::string, std::string>> labels;

    ItemSequence current;
    std::size_t itemset_size = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (is_metadata(line)) {
            parse_item_label(line, labels);
            continue;
        }
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            const std::size_t sid = sequences.size() + 1;
            const long value = parse_integer(token, sid);
            if (value == -1) {
                if (itemset_size != 1) {
                    throw FormatError("sequence " + std::to_string(sid) + ": itemset of size " +
                                      std::to_string(itemset_size) + " (only single items are supported)");
                }
                itemset_size = 0;
            } else if (value == -2) {
                if (itemset_size != 0) {
                    throw FormatError("sequence " + std::to_string(sid) + ": itemset not closed by -1");
                }
                if (current.empty()) {
                    throw FormatError("sequence " + std::to_string(sid) + " is empty");
                }
                sequences.push_back(std::move(current));
                current.clear();
            } else if (value < 0) {
                throw ParseError("sequence " + std::to_string(sid) + ": unexpected token " + token);
            } else {
                ++itemset_size;
                if (itemset_size > 1) {
                    throw FormatError("sequence " + std::to_string(sid) +
                                      ": itemset of size 2 or more (only single items are supported)");
                }
                current.push_back(dict.intern(token));
            }
        }
    }
    if (!current.empty() || itemset_size != 0) {
        throw ParseError("sequence " + std::to_string(sequences.size() + 1) + " is not terminated by -2");
    }
    if (sequences.empty()) throw EmptyDatabaseError();

    for (auto& [name, label] : labels) {
        if (auto id = dict.find(name)) dict.set_label(*id, std::move(label));
    }
    return SequenceDatabase(std::move(sequences), std::move(dict));
}

SequenceDatabase load_symbolic(std::istream& in) {
    ItemDictionary dict;
    std::vector<ItemSequence> sequences;
    std::string line;
    while (std::getline(in, line)) {
        if (is_metadata(line)) continue;
        std::istringstream tokens(line);
        std::string token;
        ItemSequence seq;
        while (tokens >> token) seq.push_back(dict.intern(token));
        if (!seq.empty()) sequences.push_back(std::move(seq));
    }
    if (sequences.empty()) throw EmptyDatabaseError();
    return SequenceDatabase(std::move(sequences), std::move(dict));
}

SequenceDatabase load_file(const std::string& path, InputFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return format == InputFormat::spmf ? load_spmf(in) : load_symbolic(in);
}

void write_spmf(std::ostream& out, const SequenceDatabase& db) {
    const auto& dict = db.dictionary();
    auto is_number = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    bool numeric = true;
    for (ItemId a = 0; a < dict.size() && numeric; ++a) numeric = is_number(dict.name(a));
    // Symbolic names become integer ids 1..#I with @ITEM labels.
    if (!numeric) {
        for (ItemId a = 0; a < dict.size(); ++a) out << "@ITEM=" << a + 1 << '=' << dict.display(a) << '\n';
    }
    for (const auto& seq : db.sequences()) {
        for (ItemId item : seq.items) {
            if (numeric) {
                out << dict.name(item) << " -1 ";
            } else {
                out << item + 1 << " -1 ";
            }
        }
        out << "-2\n";
    }
}

void write_symbolic(std::ostream& out, const SequenceDatabase& db) {
    const auto& dict = db.dictionary();
    for (const auto& seq : db.sequences()) {
        for (std::size_t k = 0; k < seq.items.size(); ++k) {
            if (k) out << ' ';
            out << dict.name(seq.items[k]);
        }
        out << '\n';
    }
}

bool is_subsequence(std::span<const ItemId> alpha, std::span<const ItemId> s) {
    std::size_t matched = 0;
    for (std::size_t k = 0; k < s.size() && matched < alpha.size(); ++k) {
        if (s[k] == alpha[matched]) ++matched;
    }
    return matched == alpha.size();
}

Count support(const SequenceDatabase& db, std::span<const ItemId> pattern) {
    Count count = 0;
    for (const auto& seq : db.sequences()) {
        if (is_subsequence(pattern, seq.items)) ++count;
    }
    return count;
}

DbStats stats(const SequenceDatabase& db) {
    if (db.empty()) throw EmptyDatabaseError();
    DbStats s;
    s.num_sequences = db.size();
    s.num_items = db.num_items();
    s.max_length = db.max_length();
    const auto total = std::accumulate(db.sequences().begin(), db.sequences().end(), std::size_t{0},
                                       [](std::size_t acc, const Sequence& q) { return acc + q.length(); });
    s.avg_length = static_cast<double>(total) / static_cast<double>(db.size());
    return s;
}

ItemSequence make_items(const SequenceDatabase& db, std::string_view names) {
    ItemSequence items;
    std::istringstream tokens{std::string(names)};
    std::string token;
    while (tokens >> token) items.push_back(db.dictionary().lookup(token));
    return items;
}

} // namespace ppmine
