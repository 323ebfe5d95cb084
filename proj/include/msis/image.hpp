#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "msis/errors.hpp"

namespace msis {

/// 8-bit grayscale image, pixels stored row-major.
///
/// A default-constructed image is the empty placeholder (0x0); every other
/// constructor enforces width >= 1, height >= 1 and an exact pixel count.
class GrayImage {
public:
    GrayImage() = default;

    GrayImage(std::size_t width, std::size_t height)
        : width_(width), height_(height), pixels_(checked_size(width, height), 0) {}

    GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (pixels_.size() != checked_size(width, height))
            throw validation_error("GrayImage: pixel count does not match width*height");
    }

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }

    std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
    std::uint8_t& at(std::size_t row, std::size_t col) { return pixels_[row * width_ + col]; }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }
    std::vector<std::uint8_t>& pixels() { return pixels_; }

    bool same_size(const GrayImage& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    static std::size_t checked_size(std::size_t width, std::size_t height) {
        if (width == 0 || height == 0)
            throw validation_error("GrayImage: width and height must be >= 1");
        if (height > static_cast<std::size_t>(-1) / width)
            throw validation_error("GrayImage: width*height overflows");
        return width * height;
    }

    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

} // namespace msis
