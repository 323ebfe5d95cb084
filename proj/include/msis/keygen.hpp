#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "msis/image.hpp"

namespace msis {

/// Bit-plane extraction order; always a permutation of {0..7}.
/// order[0] names the plane extracted first.
struct SecurityKey {
    std::array<std::uint8_t, 8> order{};

    /// The key as 8 contiguous digits, e.g. "70452316".
    std::string to_string() const {
        std::string s;
        s.reserve(8);
        for (const std::uint8_t d : order)
            s.push_back(static_cast<char>('0' + d));
        return s;
    }

    friend bool operator==(const SecurityKey&, const SecurityKey&) = default;
};

/// Derives the security key from the comparison image.
///
/// Pixels are scanned row-major starting with the first row; each value mod 8
/// joins the key the first time it is seen. If the image runs out before all
/// eight remainders appear, the missing digits are appended in ascending
/// order, so the result is always a full permutation.
inline SecurityKey derive_key(const GrayImage& comparison) {
    SecurityKey key;
    std::array<bool, 8> seen{};
    std::size_t filled = 0;
    for (const std::uint8_t p : comparison.pixels()) {
        const std::uint8_t r = p % 8;
        if (!seen[r]) {
            seen[r] = true;
            key.order[filled++] = r;
            if (filled == 8)
                return key;
        }
    }
    for (std::uint8_t d = 0; d < 8; ++d)
        if (!seen[d])
            key.order[filled++] = d;
    return key;
}

} // namespace msis
