#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "msis/errors.hpp"

namespace msis {

/// Ordered bit sequence with an explicit length, packed 64 bits per word.
///
/// Bit i lives in word i/64 at position i%64. Storage bits at positions
/// >= size() are always zero, so equality and whole-word operations work
/// directly on the word vector.
class BitStream {
public:
    BitStream() = default;

    /// Zero-filled stream of the given length.
    explicit BitStream(std::size_t length) : length_(length), words_(word_count(length), 0) {}

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void push_back(bool value) {
        if ((length_ & 63) == 0)
            words_.push_back(0);
        if (value)
            words_[length_ >> 6] |= std::uint64_t{1} << (length_ & 63);
        ++length_;
    }

    /// Appends all bits of `other` after the current last bit.
    void append(const BitStream& other) {
        if (&other == this) {
            BitStream copy(other);
            append(copy);
            return;
        }
        const std::size_t shift = length_ & 63;
        const std::size_t new_length = length_ + other.length_;
        if (shift == 0) {
            words_.insert(words_.end(), other.words_.begin(), other.words_.end());
        } else {
            words_.reserve(word_count(new_length));
            for (const std::uint64_t w : other.words_) {
                words_.back() |= w << shift;
                words_.push_back(w >> (64 - shift));
            }
            words_.resize(word_count(new_length));
        }
        length_ = new_length;
    }

    /// Truncates (dropping tail bits) or zero-extends to `new_length`.
    void resize(std::size_t new_length) {
        if (new_length < length_) {
            words_.resize(word_count(new_length));
            if (new_length & 63)
                words_.back() &= (std::uint64_t{1} << (new_length & 63)) - 1;
        } else {
            words_.resize(word_count(new_length), 0);
        }
        length_ = new_length;
    }

    std::size_t count_ones() const {
        std::size_t n = 0;
        for (const std::uint64_t w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    friend bool operator==(const BitStream&, const BitStream&) = default;

private:
    static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace msis
