#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "msis/bitcore.hpp"
#include "msis/errors.hpp"
#include "msis/keygen.hpp"

namespace msis {

inline constexpr std::size_t kGroupSize = 8;

/// Eight equally sized secret images; entries at index >= num_real are
/// all-zero null padding.
struct SecretGroup {
    std::array<GrayImage, kGroupSize> images;
    int num_real = 0;
};

/// The transmitted artifact: header metadata plus the square gray share.
/// The comparison image and the key are deliberately not part of it.
struct ShareContainer {
    std::size_t secret_width = 0;
    std::size_t secret_height = 0;
    int num_real = 0;
    std::size_t bit_length = 0; // 8 * secret_width * secret_height
    GrayImage share;            // square, side = ceil_sqrt(bit_length)
};

inline bool is_null_image(const GrayImage& img) {
    for (const std::uint8_t p : img.pixels())
        if (p != 0)
            return false;
    return true;
}

/// Pads 1..8 real images with null images up to a full group of eight.
inline SecretGroup make_group(std::span<const GrayImage> reals) {
    if (reals.empty())
        throw empty_input("make_group: need at least one secret image");
    if (reals.size() > kGroupSize)
        throw validation_error("make_group: a group holds at most eight images");
    for (const GrayImage& img : reals)
        if (img.empty() || !img.same_size(reals.front()))
            throw dimension_mismatch("make_group: secret images differ in size");
    SecretGroup group;
    group.num_real = static_cast<int>(reals.size());
    for (std::size_t i = 0; i < reals.size(); ++i)
        group.images[i] = reals[i];
    for (std::size_t i = reals.size(); i < kGroupSize; ++i)
        group.images[i] = GrayImage(reals.front().width(), reals.front().height());
    return group;
}

inline void validate_group(const SecretGroup& group) {
    if (group.num_real < 1 || group.num_real > static_cast<int>(kGroupSize))
        throw validation_error("SecretGroup: num_real must be in [1, 8]");
    const GrayImage& first = group.images.front();
    if (first.empty())
        throw dimension_mismatch("SecretGroup: images must be at least 1x1");
    for (const GrayImage& img : group.images)
        if (!img.same_size(first))
            throw dimension_mismatch("SecretGroup: the eight images differ in size");
    for (std::size_t i = static_cast<std::size_t>(group.num_real); i < kGroupSize; ++i)
        if (!is_null_image(group.images[i]))
            throw validation_error("SecretGroup: padding entries must be null images");
}

inline void validate_container(const ShareContainer& c) {
    if (c.num_real < 1 || c.num_real > static_cast<int>(kGroupSize))
        throw malformed_container("ShareContainer: num_real must be in [1, 8]");
    if (c.secret_width == 0 || c.secret_height == 0)
        throw malformed_container("ShareContainer: secret dimensions must be >= 1");
    if (c.share.width() != c.share.height())
        throw malformed_container("ShareContainer: share image is not square");
    if (c.bit_length != 8 * c.secret_width * c.secret_height)
        throw dimension_inconsistency("ShareContainer: bit_length is not 8*W*H");
    if (c.share.width() != ceil_sqrt(c.bit_length))
        throw dimension_inconsistency("ShareContainer: share side is not ceil(sqrt(bit_length))");
}

/// The XOR keystream: the comparison image's bit planes concatenated in
/// key order, then length-fitted to `target` (truncated, or zero-padded
/// when the comparison image is too small).
inline BitStream build_pad(const GrayImage& comparison, const SecurityKey& key,
                           std::size_t target) {
    BitStream pad;
    for (const std::uint8_t plane : key.order) {
        pad.append(extract_plane(comparison, plane));
        if (pad.size() >= target)
            break;
    }
    return fit_length(std::move(pad), target);
}

/// XORs the secret's bit stream with the pad and packs the result into
/// the per-secret square binary share.
inline BinaryImage encrypt_image(const GrayImage& secret, const BitStream& pad) {
    if (pad.size() != 8 * secret.pixel_count())
        throw length_mismatch("encrypt_image: pad length is not 8*W*H");
    return reshape_square(xor_streams(pad, pixels_to_bits(secret)));
}

/// Inverse of encrypt_image: flattens the square, strips the pad and
/// reassembles the pixels.
inline GrayImage decrypt_image(const BinaryImage& plane, const BitStream& pad,
                               std::size_t width, std::size_t height) {
    if (pad.size() != 8 * width * height)
        throw length_mismatch("decrypt_image: pad length is not 8*width*height");
    return bits_to_pixels(xor_streams(flatten_square(plane, pad.size()), pad), width, height);
}

/// Packs eight binary shares into one gray image; the plane of secret i
/// occupies bit 7-i, so the first secret lands in the MSB.
inline GrayImage pack_group(std::span<const BinaryImage> planes) {
    if (planes.size() != kGroupSize)
        throw validation_error("pack_group: exactly eight planes required");
    const std::size_t side = planes.front().side();
    for (const BinaryImage& p : planes)
        if (p.side() != side)
            throw side_mismatch("pack_group: planes differ in side");
    GrayImage share(side, side);
    for (std::size_t idx = 0; idx < side * side; ++idx) {
        unsigned v = 0;
        for (std::size_t i = 0; i < kGroupSize; ++i)
            v |= static_cast<unsigned>(planes[i].bits()[idx]) << (7 - i);
        share.pixels()[idx] = static_cast<std::uint8_t>(v);
    }
    return share;
}

/// Exact inverse of pack_group.
inline std::vector<BinaryImage> unpack_group(const GrayImage& share) {
    if (share.width() != share.height())
        throw not_square("unpack_group: share image is not square");
    const std::size_t side = share.width();
    std::vector<BinaryImage> planes;
    planes.reserve(kGroupSize);
    for (std::size_t i = 0; i < kGroupSize; ++i) {
        BitStream bits;
        for (const std::uint8_t p : share.pixels())
            bits.push_back((p >> (7 - i)) & 1u);
        planes.emplace_back(side, std::move(bits));
    }
    return planes;
}

/// Encrypts one group of eight secrets against the comparison image.
/// The same pad is reused for all eight secrets.
inline ShareContainer encode_group(const SecretGroup& group, const GrayImage& comparison) {
    validate_group(group);
    const GrayImage& first = group.images.front();
    const std::size_t target = 8 * first.pixel_count();
    const BitStream pad = build_pad(comparison, derive_key(comparison), target);
    std::vector<BinaryImage> planes;
    planes.reserve(kGroupSize);
    for (const GrayImage& secret : group.images)
        planes.push_back(encrypt_image(secret, pad));
    ShareContainer c;
    c.secret_width = first.width();
    c.secret_height = first.height();
    c.num_real = group.num_real;
    c.bit_length = target;
    c.share = pack_group(planes);
    return c;
}

/// Recovers a group from its container. Requires the same comparison image
/// that was used at encode time; a wrong one yields garbage, not an error.
inline SecretGroup decode_group(const ShareContainer& container, const GrayImage& comparison) {
    validate_container(container);
    const BitStream pad =
        build_pad(comparison, derive_key(comparison), container.bit_length);
    const std::vector<BinaryImage> planes = unpack_group(container.share);
    SecretGroup group;
    group.num_real = container.num_real;
    for (std::size_t i = 0; i < kGroupSize; ++i)
        group.images[i] =
            decrypt_image(planes[i], pad, container.secret_width, container.secret_height);
    return group;
}

/// Partitions n secrets into groups of eight (null-padding the last group)
/// and encodes each; yields ceil(n/8) containers in input order.
inline std::vector<ShareContainer> encode_batch(const std::vector<GrayImage>& secrets,
                                                const GrayImage& comparison) {
    if (secrets.empty())
        throw empty_input("encode_batch: no secret images given");
    for (const GrayImage& img : secrets)
        if (img.empty() || !img.same_size(secrets.front()))
            throw dimension_mismatch("encode_batch: secret images differ in size");
    std::vector<ShareContainer> containers;
    containers.reserve((secrets.size() + kGroupSize - 1) / kGroupSize);
    for (std::size_t begin = 0; begin < secrets.size(); begin += kGroupSize) {
        const std::size_t count = std::min(kGroupSize, secrets.size() - begin);
        containers.push_back(encode_group(
            make_group(std::span<const GrayImage>(secrets.data() + begin, count)), comparison));
    }
    return containers;
}

/// Decodes every container and concatenates the real images, dropping the
/// null padding recorded in each header.
inline std::vector<GrayImage> decode_batch(const std::vector<ShareContainer>& containers,
                                           const GrayImage& comparison) {
    std::vector<GrayImage> images;
    for (const ShareContainer& c : containers) {
        SecretGroup group = decode_group(c, comparison);
        for (int i = 0; i < group.num_real; ++i)
            images.push_back(std::move(group.images[static_cast<std::size_t>(i)]));
    }
    return images;
}

} // namespace msis
