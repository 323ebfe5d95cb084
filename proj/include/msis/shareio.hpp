#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "msis/codec.hpp"
#include "msis/errors.hpp"
#include "msis/image.hpp"

namespace msis {

inline constexpr std::array<std::uint8_t, 4> kShareMagic = {'M', 'S', '1', '8'};
inline constexpr std::uint16_t kShareVersion = 1;
inline constexpr std::size_t kHeaderSize = 36;

namespace detail {

template <typename T>
inline void put_le(std::vector<std::uint8_t>& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

template <typename T>
inline T get_le(const std::uint8_t* p) {
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        value |= static_cast<T>(p[i]) << (8 * i);
    return value;
}

} // namespace detail

/// Serializes a container: 36-byte little-endian header followed by
/// share_side^2 pixel bytes row-major. Returns the total byte count.
/// Neither the comparison image nor the key ever enters the output.
inline std::size_t write_share(const ShareContainer& container, std::ostream& out) {
    validate_container(container);
    std::vector<std::uint8_t> header;
    header.reserve(kHeaderSize);
    header.insert(header.end(), kShareMagic.begin(), kShareMagic.end());
    detail::put_le<std::uint16_t>(header, kShareVersion);
    detail::put_le<std::uint16_t>(header, 0); // flags
    detail::put_le<std::uint32_t>(header, static_cast<std::uint32_t>(container.secret_width));
    detail::put_le<std::uint32_t>(header, static_cast<std::uint32_t>(container.secret_height));
    header.push_back(static_cast<std::uint8_t>(container.num_real));
    header.insert(header.end(), 7, 0); // reserved
    detail::put_le<std::uint64_t>(header, static_cast<std::uint64_t>(container.bit_length));
    detail::put_le<std::uint32_t>(header, static_cast<std::uint32_t>(container.share.width()));
    out.write(reinterpret_cast<const char*>(header.data()),
              static_cast<std::streamsize>(header.size()));
    out.write(reinterpret_cast<const char*>(container.share.pixels().data()),
              static_cast<std::streamsize>(container.share.pixel_count()));
    if (!out)
        throw sink_failure("write_share: output stream failed");
    return kHeaderSize + container.share.pixel_count();
}

/// Parses and validates one container from the stream.
inline ShareContainer read_share(std::istream& in) {
    std::array<std::uint8_t, kHeaderSize> header{};
    in.read(reinterpret_cast<char*>(header.data()), kHeaderSize);
    if (in.gcount() != static_cast<std::streamsize>(kHeaderSize))
        throw truncated_payload("read_share: header is truncated");
    if (!std::equal(kShareMagic.begin(), kShareMagic.end(), header.begin()))
        throw bad_magic("read_share: bad magic, not a share container");
    const auto version = detail::get_le<std::uint16_t>(&header[4]);
    if (version != kShareVersion)
        throw unsupported_version("read_share: unsupported container version " +
                                  std::to_string(version));
    const auto flags = detail::get_le<std::uint16_t>(&header[6]);
    const auto width = detail::get_le<std::uint32_t>(&header[8]);
    const auto height = detail::get_le<std::uint32_t>(&header[12]);
    const auto num_real = header[16];
    const auto bit_length = detail::get_le<std::uint64_t>(&header[24]);
    const auto share_side = detail::get_le<std::uint32_t>(&header[32]);

    if (flags != 0)
        throw header_invariant_violation("read_share: nonzero flags");
    for (std::size_t i = 17; i < 24; ++i)
        if (header[i] != 0)
            throw header_invariant_violation("read_share: nonzero reserved bytes");
    if (width == 0 || height == 0)
        throw header_invariant_violation("read_share: zero secret dimensions");
    if (num_real < 1 || num_real > 8)
        throw header_invariant_violation("read_share: num_real out of [1, 8]");
    if (static_cast<std::uint64_t>(height) > (UINT64_MAX / 8) / width)
        throw header_invariant_violation("read_share: secret dimensions overflow");
    if (bit_length != 8ull * width * height)
        throw header_invariant_violation("read_share: bit_length is not 8*W*H");
    if (share_side != ceil_sqrt(static_cast<std::size_t>(bit_length)))
        throw header_invariant_violation("read_share: share_side is not ceil(sqrt(bit_length))");

    const std::size_t payload = static_cast<std::size_t>(share_side) * share_side;
    std::vector<std::uint8_t> pixels(payload);
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(payload));
    if (in.gcount() != static_cast<std::streamsize>(payload))
        throw truncated_payload("read_share: share payload is truncated");

    ShareContainer c;
    c.secret_width = width;
    c.secret_height = height;
    c.num_real = num_real;
    c.bit_length = static_cast<std::size_t>(bit_length);
    c.share = GrayImage(share_side, share_side, std::move(pixels));
    return c;
}

inline void write_share_file(const ShareContainer& container, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open for writing: " + path.string());
    write_share(container, out);
}

inline ShareContainer read_share_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open for reading: " + path.string());
    ShareContainer c = read_share(in);
    if (in.peek() != std::ifstream::traits_type::eof())
        throw malformed_file("trailing bytes after share payload: " + path.string());
    return c;
}

namespace detail {

inline std::size_t pnm_read_number(std::istream& in, const std::string& path) {
    int ch = in.get();
    // skip whitespace and '#' comments
    while (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '#') {
        if (ch == '#')
            while (ch != '\n' && ch != std::istream::traits_type::eof())
                ch = in.get();
        ch = in.get();
    }
    if (ch < '0' || ch > '9')
        throw malformed_file("bad PNM header: " + path);
    std::size_t value = 0;
    while (ch >= '0' && ch <= '9') {
        value = value * 10 + static_cast<std::size_t>(ch - '0');
        if (value > 0xFFFFFFFFull)
            throw malformed_file("PNM dimension out of range: " + path);
        ch = in.get();
    }
    in.unget();
    return value;
}

inline std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    // integer-rounded (half away from zero) ITU-R BT.601 luma
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    return static_cast<std::uint8_t>(std::min<long>(255, std::lround(y)));
}

} // namespace detail

/// Reads a binary PGM (P5) or PPM (P6) file with maxval 255. Color input is
/// converted to luminance; `*was_color` is set accordingly when non-null.
inline GrayImage read_image(const std::filesystem::path& path, bool* was_color = nullptr) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open image: " + path.string());
    const int m0 = in.get();
    const int m1 = in.get();
    if (m0 != 'P' || (m1 != '5' && m1 != '6'))
        throw unsupported_format("not a binary PGM/PPM file: " + path.string());
    const bool color = (m1 == '6');
    std::size_t width = detail::pnm_read_number(in, path.string());
    std::size_t height = detail::pnm_read_number(in, path.string());
    std::size_t maxval = detail::pnm_read_number(in, path.string());
    if (width == 0 || height == 0)
        throw malformed_file("zero image dimension: " + path.string());
    if (height > (static_cast<std::size_t>(-1) / 3) / width)
        throw malformed_file("image dimensions overflow: " + path.string());
    if (maxval != 255)
        throw unsupported_format("only maxval 255 is supported: " + path.string());
    const int sep = in.get();
    if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n')
        throw malformed_file("missing whitespace before pixel data: " + path.string());

    const std::size_t channels = color ? 3 : 1;
    std::vector<std::uint8_t> raw(width * height * channels);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()))
        throw malformed_file("pixel data is truncated: " + path.string());
    if (in.peek() != std::ifstream::traits_type::eof())
        throw malformed_file("trailing bytes after pixel data: " + path.string());

    if (was_color)
        *was_color = color;
    if (!color)
        return GrayImage(width, height, std::move(raw));
    std::vector<std::uint8_t> pixels(width * height);
    for (std::size_t i = 0; i < pixels.size(); ++i)
        pixels[i] = detail::luminance(raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]);
    return GrayImage(width, height, std::move(pixels));
}

/// Writes a binary PGM (P5, maxval 255) file; bit-exact round trip with
/// read_image.
inline void write_image(const GrayImage& img, const std::filesystem::path& path) {
    if (img.empty())
        throw validation_error("write_image: image is empty");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open for writing: " + path.string());
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.pixel_count()));
    if (!out)
        throw sink_failure("write_image: output stream failed");
}

} // namespace msis
