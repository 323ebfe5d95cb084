#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "msis/bitstream.hpp"
#include "msis/errors.hpp"
#include "msis/image.hpp"

namespace msis {

/// Square binary image: side x side bits stored row-major.
class BinaryImage {
public:
    BinaryImage(std::size_t side, BitStream bits) : side_(side), bits_(std::move(bits)) {
        if (side_ == 0)
            throw validation_error("BinaryImage: side must be >= 1");
        if (bits_.size() != side_ * side_)
            throw length_mismatch("BinaryImage: bit count does not match side*side");
    }

    std::size_t side() const { return side_; }
    const BitStream& bits() const { return bits_; }

    bool at(std::size_t row, std::size_t col) const { return bits_[row * side_ + col]; }

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    std::size_t side_;
    BitStream bits_;
};

/// Smallest s with s*s >= n.
inline std::size_t ceil_sqrt(std::size_t n) {
    if (n == 0)
        return 0;
    auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (s > 1 && (s - 1) * (s - 1) >= n)
        --s;
    while (s * s < n)
        ++s;
    return s;
}

/// Pixels row-major, each emitting its 8 bits most-significant-first.
/// Output length is exactly 8 * W * H.
inline BitStream pixels_to_bits(const GrayImage& img) {
    BitStream out;
    for (const std::uint8_t p : img.pixels())
        for (int bit = 7; bit >= 0; --bit)
            out.push_back((p >> bit) & 1u);
    return out;
}

/// Exact inverse of pixels_to_bits.
inline GrayImage bits_to_pixels(const BitStream& s, std::size_t width, std::size_t height) {
    if (s.size() != 8 * width * height)
        throw length_mismatch("bits_to_pixels: stream length is not 8*width*height");
    GrayImage img(width, height);
    std::size_t i = 0;
    for (std::uint8_t& p : img.pixels()) {
        unsigned v = 0;
        for (int bit = 7; bit >= 0; --bit, ++i)
            v |= static_cast<unsigned>(s[i]) << bit;
        p = static_cast<std::uint8_t>(v);
    }
    return img;
}

/// One bit plane, row-major. Plane 7 is the MSB (weight 2^7), plane 0 the LSB.
inline BitStream extract_plane(const GrayImage& img, unsigned plane) {
    if (plane > 7)
        throw invalid_plane("extract_plane: plane index must be in [0, 7]");
    BitStream out;
    for (const std::uint8_t p : img.pixels())
        out.push_back((p >> plane) & 1u);
    return out;
}

/// Elementwise XOR of two equal-length streams.
inline BitStream xor_streams(const BitStream& a, const BitStream& b) {
    if (a.size() != b.size())
        throw length_mismatch("xor_streams: stream lengths differ");
    BitStream out = a;
    for (std::size_t w = 0; w < out.words().size(); ++w)
        out.words()[w] ^= b.words()[w];
    return out;
}

/// Keeps the first `target` bits, or appends zero bits up to `target`.
inline BitStream fit_length(BitStream s, std::size_t target) {
    s.resize(target);
    return s;
}

/// Packs a stream into the smallest enclosing square, zero-filling the tail.
inline BinaryImage reshape_square(const BitStream& s) {
    if (s.empty())
        throw empty_stream("reshape_square: stream is empty");
    const std::size_t side = ceil_sqrt(s.size());
    return BinaryImage(side, fit_length(s, side * side));
}

/// Row-major traversal truncated to `bit_length`; inverse of reshape_square.
inline BitStream flatten_square(const BinaryImage& b, std::size_t bit_length) {
    if (bit_length > b.side() * b.side())
        throw length_mismatch("flatten_square: bit_length exceeds side*side");
    return fit_length(b.bits(), bit_length);
}

} // namespace msis
