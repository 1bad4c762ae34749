#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lineup {

/// Dynamic bitset over a fixed universe size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool subset_of(const Bitset& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Indices of the set bits in increasing order.
    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace lineup
