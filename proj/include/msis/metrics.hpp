#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>

#include "msis/errors.hpp"
#include "msis/image.hpp"

namespace msis {

/// Per-image original-vs-recovered comparison.
struct QualityReport {
    double ssim = 0.0;
    double psnr = 0.0;
    double rmse = 0.0;
};

namespace detail {

inline void require_same_size(const GrayImage& a, const GrayImage& b, const char* what) {
    if (!a.same_size(b))
        throw dimension_mismatch(what);
}

inline double mean_squared_error(const GrayImage& a, const GrayImage& b) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.pixel_count(); ++i) {
        const std::int64_t d =
            static_cast<std::int64_t>(a.pixels()[i]) - static_cast<std::int64_t>(b.pixels()[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(sum) / static_cast<double>(a.pixel_count());
}

} // namespace detail

/// Root mean squared error in intensity units.
inline double rmse(const GrayImage& a, const GrayImage& b) {
    detail::require_same_size(a, b, "rmse: images differ in size");
    return std::sqrt(detail::mean_squared_error(a, b));
}

/// Peak signal-to-noise ratio in dB against peak 255; +infinity when equal.
inline double psnr(const GrayImage& a, const GrayImage& b) {
    detail::require_same_size(a, b, "psnr: images differ in size");
    const double mse = detail::mean_squared_error(a, b);
    if (mse == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

/// Global single-window SSIM with C1=(0.01*255)^2, C2=(0.03*255)^2.
/// Means, variances and covariance are population statistics over the
/// whole image.
inline double ssim(const GrayImage& a, const GrayImage& b) {
    detail::require_same_size(a, b, "ssim: images differ in size");
    constexpr double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double c2 = (0.03 * 255.0) * (0.03 * 255.0);
    const double n = static_cast<double>(a.pixel_count());
    double sum_a = 0.0, sum_b = 0.0;
    for (std::size_t i = 0; i < a.pixel_count(); ++i) {
        sum_a += a.pixels()[i];
        sum_b += b.pixels()[i];
    }
    const double mu_a = sum_a / n;
    const double mu_b = sum_b / n;
    double var_a = 0.0, var_b = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < a.pixel_count(); ++i) {
        const double da = a.pixels()[i] - mu_a;
        const double db = b.pixels()[i] - mu_b;
        var_a += da * da;
        var_b += db * db;
        cov += da * db;
    }
    var_a /= n;
    var_b /= n;
    cov /= n;
    return ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)) /
           ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
}

/// Shannon entropy of the 256-bin pixel histogram, in bits per pixel [0, 8].
inline double entropy(const GrayImage& img) {
    std::array<std::size_t, 256> hist{};
    for (const std::uint8_t p : img.pixels())
        ++hist[p];
    const double n = static_cast<double>(img.pixel_count());
    double h = 0.0;
    for (const std::size_t count : hist) {
        if (count == 0)
            continue;
        const double p = static_cast<double>(count) / n;
        h -= p * std::log2(p);
    }
    return h;
}

inline QualityReport compare(const GrayImage& a, const GrayImage& b) {
    return QualityReport{ssim(a, b), psnr(a, b), rmse(a, b)};
}

} // namespace msis
