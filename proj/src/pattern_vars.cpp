#include "ppmine/pattern_vars.hpp"

#include <cassert>

#include "ppmine/error.hpp"

namespace ppmine {

ValueMask::ValueMask(std::size_t num_values, bool filled)
    : num_values_(num_values), words_((num_values + 63) / 64, 0) {
    if (filled) {
        for (Value v = 0; v < num_values; ++v) set(v);
    }
}

std::size_t ValueMask::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

PatternVars::PatternVars(std::size_t ell, std::size_t num_items)
    : ell_(ell), num_items_(num_items), words_per_var_((num_items + 1 + 63) / 64) {
    if (ell == 0) throw ParameterError("pattern capacity must be >= 1");
    bits_.assign(ell * words_per_var_, 0);
    sizes_.assign(ell, static_cast<std::uint32_t>(num_items + 1));
    for (std::size_t pos = 1; pos <= ell; ++pos) {
        std::uint64_t* w = &bits_[(pos - 1) * words_per_var_];
        for (std::size_t v = 0; v <= num_items; ++v) w[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
}

Value PatternVars::value(std::size_t pos) const {
    assert(fixed(pos));
    Value found = 0;
    for_each(pos, [&](Value v) { found = v; });
    return found;
}

std::vector<Value> PatternVars::values(std::size_t pos) const {
    std::vector<Value> out;
    out.reserve(size(pos));
    for_each(pos, [&](Value v) { out.push_back(v); });
    return out;
}

void PatternVars::write(std::size_t index, std::uint64_t bits) {
    const std::uint64_t old = bits_[index];
    if (old == bits) return;
    trail_.push_back({static_cast<std::uint32_t>(index), old});
    bits_[index] = bits;
    const auto removed = static_cast<std::uint32_t>(std::popcount(old & ~bits));
    sizes_[index / words_per_var_] -= removed;
    removals_ += removed;
}

bool PatternVars::remove(std::size_t pos, Value v) {
    if (!contains(pos, v)) return false;
    const std::size_t index = (pos - 1) * words_per_var_ + (v >> 6);
    write(index, bits_[index] & ~(std::uint64_t{1} << (v & 63)));
    return true;
}

std::size_t PatternVars::assign(std::size_t pos, Value v) {
    const std::size_t before = size(pos);
    const bool present = contains(pos, v);
    const std::size_t base = (pos - 1) * words_per_var_;
    for (std::size_t k = 0; k < words_per_var_; ++k) {
        const std::uint64_t keep = (present && k == (v >> 6)) ? (std::uint64_t{1} << (v & 63)) : 0;
        write(base + k, bits_[base + k] & keep);
    }
    return before - size(pos);
}

std::size_t PatternVars::restrict_items(std::size_t pos, const ValueMask& keep, bool keep_end) {
    assert(keep.num_values() >= num_items_);
    const std::size_t before = size(pos);
    const std::size_t base = (pos - 1) * words_per_var_;
    const auto mask_words = keep.words();
    const Value end = end_marker();
    for (std::size_t k = 0; k < words_per_var_; ++k) {
        std::uint64_t m = k < mask_words.size() ? mask_words[k] : 0;
        if (k == (end >> 6)) {
            const std::uint64_t end_bit = std::uint64_t{1} << (end & 63);
            m = keep_end ? (m | end_bit) : (m & ~end_bit);
        }
        write(base + k, bits_[base + k] & m);
    }
    return before - size(pos);
}

void PatternVars::push_level() { checkpoints_.push_back(trail_.size()); }

void PatternVars::pop_level() {
    assert(!checkpoints_.empty());
    const std::size_t mark = checkpoints_.back();
    checkpoints_.pop_back();
    while (trail_.size() > mark) {
        const auto [index, old] = trail_.back();
        trail_.pop_back();
        const std::uint64_t now = bits_[index];
        sizes_[index / words_per_var_] += static_cast<std::uint32_t>(std::popcount(old & ~now));
        bits_[index] = old;
    }
}

bool PatternVars::any_empty() const {
    for (auto s : sizes_) {
        if (s == 0) return true;
    }
    return false;
}

std::uint64_t PatternVars::checksum() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (auto w : bits_) mix(w);
    for (auto s : sizes_) mix(s);
    return h;
}

} // namespace ppmine
