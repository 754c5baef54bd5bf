#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ppmine/engine.hpp"
#include "ppmine/miner.hpp"
#include "ppmine/seqdb.hpp"

namespace ppmine::test {

inline SequenceDatabase symbolic(const std::string& text) {
    std::istringstream in(text);
    return load_symbolic(in);
}

/// Four-sequence example database: ABCBC, BABC, AB, BCD.
inline SequenceDatabase sdb1() { return symbolic("A B C B C\nB A B C\nA B\nB C D\n"); }

inline std::string names(const SequenceDatabase& db, const Pattern& p) {
    std::string s;
    for (ItemId a : p) s += db.dictionary().name(a);
    return s;
}

inline std::set<std::string> pattern_names(const SequenceDatabase& db, const std::vector<MinedPattern>& ps) {
    std::set<std::string> out;
    for (const auto& mp : ps) out.insert(names(db, mp.items));
    return out;
}

/// Independent of the engine and of the generate-and-test oracle: every
/// distinct subsequence of every sequence (position subsets), counted once
/// per sequence.
inline std::map<Pattern, Count> all_subsequence_supports(const SequenceDatabase& db, std::size_t max_len) {
    std::map<Pattern, Count> sup;
    for (const auto& seq : db.sequences()) {
        std::set<Pattern> mine;
        const std::size_t n = seq.length();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Pattern p;
            for (std::size_t k = 0; k < n; ++k) {
                if (mask & (1u << k)) p.push_back(seq.items[k]);
            }
            if (p.size() <= max_len) mine.insert(std::move(p));
        }
        for (const auto& p : mine) ++sup[p];
    }
    return sup;
}

} // namespace ppmine::test
