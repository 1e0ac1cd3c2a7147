#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ctxw {

// Fixed-length bit row used for adjacency and candidate sets. Words beyond
// size() are always zero, so whole-word operations need no masking.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const Word* data() const noexcept { return words_.data(); }

    bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    void set_all() noexcept {
        for (auto& w : words_) w = ~Word{0};
        trim();
    }
    void reset_all() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    /// Lowest set index, or size() when empty.
    std::size_t first() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return size_;
    }
    /// Lowest set index strictly greater than i, or size().
    std::size_t next(std::size_t i) const noexcept {
        ++i;
        if (i >= size_) return size_;
        std::size_t k = i / kWordBits;
        Word w = words_[k] & (~Word{0} << (i % kWordBits));
        while (true) {
            if (w) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return size_;
            w = words_[k];
        }
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    /// Complement within [0, size()).
    void flip() noexcept {
        for (auto& w : words_) w = ~w;
        trim();
    }

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() noexcept {
        if (auto r = size_ % kWordBits; r != 0 && !words_.empty()) words_.back() &= (Word{1} << r) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace ctxw
