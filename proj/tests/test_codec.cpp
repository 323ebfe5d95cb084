#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "msis/codec.hpp"
#include "msis/shareio.hpp"
#include "naive_reference.hpp"
#include "test_helpers.hpp"

using msis::BinaryImage;
using msis::BitStream;
using msis::GrayImage;
using msis::SecretGroup;
using msis::SecurityKey;
using msis::ShareContainer;

namespace {

BitStream bits_of(std::initializer_list<int> values) {
    BitStream s;
    for (const int v : values)
        s.push_back(v != 0);
    return s;
}

SecurityKey key_of(std::initializer_list<int> digits) {
    SecurityKey k;
    std::size_t i = 0;
    for (const int d : digits)
        k.order[i++] = static_cast<std::uint8_t>(d);
    return k;
}

std::vector<std::uint8_t> serialize(const ShareContainer& c) {
    std::ostringstream out(std::ios::binary);
    msis::write_share(c, out);
    const std::string s = out.str();
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

} // namespace

TEST_CASE("build_pad concatenates planes in key order and fits the length") {
    const SecurityKey any_key = key_of({0, 1, 2, 3, 4, 5, 6, 7});
    REQUIRE(msis::build_pad(GrayImage(2, 2), any_key, 16) == BitStream(16));
    REQUIRE(msis::build_pad(GrayImage(1, 1, {255}), any_key, 8) ==
            bits_of({1, 1, 1, 1, 1, 1, 1, 1}));
    // planes of 178 = 10110010 read in the order 7,0,4,5,2,3,1,6
    REQUIRE(msis::build_pad(GrayImage(1, 1, {178}), key_of({7, 0, 4, 5, 2, 3, 1, 6}), 8) ==
            bits_of({1, 0, 1, 1, 0, 0, 1, 0}));
}

TEST_CASE("encrypt_image xors against the pad and squares the result") {
    const GrayImage secret(1, 1, {178});
    const BinaryImage zero_pad = msis::encrypt_image(secret, BitStream(8));
    REQUIRE(zero_pad.side() == 3);
    REQUIRE(zero_pad.bits() == bits_of({1, 0, 1, 1, 0, 0, 1, 0, 0}));

    const BinaryImage ones_pad =
        msis::encrypt_image(secret, bits_of({1, 1, 1, 1, 1, 1, 1, 1}));
    REQUIRE(ones_pad.bits() == bits_of({0, 1, 0, 0, 1, 1, 0, 1, 0})); // 77 = 255 - 178

    REQUIRE_THROWS_AS(msis::encrypt_image(secret, BitStream(7)), msis::length_mismatch);
}

TEST_CASE("decrypt_image inverts encrypt_image") {
    const BitStream ones = bits_of({1, 1, 1, 1, 1, 1, 1, 1});
    const BinaryImage plane(3, bits_of({0, 1, 0, 0, 1, 1, 0, 1, 0}));
    REQUIRE(msis::decrypt_image(plane, ones, 1, 1) == GrayImage(1, 1, {178}));

    REQUIRE(msis::decrypt_image(BinaryImage(3, BitStream(9)), BitStream(8), 1, 1) ==
            GrayImage(1, 1, {0}));

    std::mt19937 rng(401);
    for (int trial = 0; trial < 50; ++trial) {
        const GrayImage secret = testutil::random_image(rng, 8, 8);
        const BitStream pad = testutil::random_bits(rng, 8 * 64);
        REQUIRE(msis::decrypt_image(msis::encrypt_image(secret, pad), pad, 8, 8) == secret);
    }
}

TEST_CASE("pack_group maps secret index 0 to the MSB") {
    std::vector<BinaryImage> planes;
    BitStream ones(4);
    for (std::size_t i = 0; i < 4; ++i)
        ones.set(i, true);
    planes.emplace_back(2, ones);
    for (int i = 1; i < 8; ++i)
        planes.emplace_back(2, BitStream(4));
    REQUIRE(msis::pack_group(planes) == GrayImage(2, 2, {128, 128, 128, 128}));

    std::vector<BinaryImage> all_ones(8, BinaryImage(2, ones));
    REQUIRE(msis::pack_group(all_ones) == GrayImage(2, 2, {255, 255, 255, 255}));

    std::vector<BinaryImage> mixed;
    for (const int bit : {1, 0, 1, 1, 0, 0, 1, 0}) {
        BitStream b(1);
        b.set(0, bit != 0);
        mixed.emplace_back(1, b);
    }
    REQUIRE(msis::pack_group(mixed) == GrayImage(1, 1, {178}));
}

TEST_CASE("pack_group validates its inputs") {
    std::vector<BinaryImage> seven(7, BinaryImage(1, BitStream(1)));
    REQUIRE_THROWS_AS(msis::pack_group(seven), msis::validation_error);

    std::vector<BinaryImage> uneven(7, BinaryImage(2, BitStream(4)));
    uneven.emplace_back(3, BitStream(9));
    REQUIRE_THROWS_AS(msis::pack_group(uneven), msis::side_mismatch);
}

TEST_CASE("unpack_group inverts pack_group") {
    const auto planes = msis::unpack_group(GrayImage(2, 2, {128, 128, 128, 128}));
    REQUIRE(planes.size() == 8);
    REQUIRE(planes[0].bits().count_ones() == 4);
    for (std::size_t i = 1; i < 8; ++i)
        REQUIRE(planes[i].bits().count_ones() == 0);

    for (const auto& p : msis::unpack_group(GrayImage(3, 3)))
        REQUIRE(p.bits().count_ones() == 0);

    REQUIRE_THROWS_AS(msis::unpack_group(GrayImage(2, 3)), msis::not_square);

    std::mt19937 rng(402);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BinaryImage> planes_in;
        for (int i = 0; i < 8; ++i)
            planes_in.emplace_back(5, testutil::random_bits(rng, 25));
        const GrayImage share = msis::pack_group(planes_in);
        const auto planes_out = msis::unpack_group(share);
        for (std::size_t i = 0; i < 8; ++i)
            REQUIRE(planes_out[i] == planes_in[i]);
    }
}

TEST_CASE("encode_group matches the hand-traced tiny fixture") {
    // comparison 2x2 [15,23,8,1]: key 7,0,1,2,3,4,5,6; pad byte 00001101
    const GrayImage comparison(2, 2, {15, 23, 8, 1});
    std::vector<GrayImage> secrets;
    for (const int v : {178, 0, 255, 9, 64, 128, 3, 77})
        secrets.emplace_back(1, 1, std::vector<std::uint8_t>{static_cast<std::uint8_t>(v)});

    const ShareContainer c = msis::encode_group(msis::make_group(secrets), comparison);
    REQUIRE(c.secret_width == 1);
    REQUIRE(c.secret_height == 1);
    REQUIRE(c.num_real == 8);
    REQUIRE(c.bit_length == 8);
    REQUIRE(c.share == GrayImage(3, 3, {164, 41, 160, 160, 206, 222, 162, 204, 0}));

    const SecretGroup back = msis::decode_group(c, comparison);
    for (std::size_t i = 0; i < 8; ++i)
        REQUIRE(back.images[i] == secrets[i]);
}

TEST_CASE("eight identical secrets give an all-0-or-255 share") {
    std::mt19937 rng(403);
    const GrayImage secret = testutil::random_image(rng, 4, 4);
    const GrayImage comparison = testutil::random_image(rng, 8, 8);
    const std::vector<GrayImage> secrets(8, secret);
    const ShareContainer c = msis::encode_group(msis::make_group(secrets), comparison);
    for (const std::uint8_t p : c.share.pixels())
        REQUIRE((p == 0 || p == 255));
}

TEST_CASE("eight null images round-trip to null") {
    std::mt19937 rng(404);
    const GrayImage comparison = testutil::random_image(rng, 8, 8);
    std::vector<GrayImage> nulls(8, GrayImage(4, 4));
    const ShareContainer c = msis::encode_group(msis::make_group(nulls), comparison);
    const SecretGroup back = msis::decode_group(c, comparison);
    for (const auto& img : back.images)
        REQUIRE(msis::is_null_image(img));
}

TEST_CASE("decode with the wrong comparison image returns garbage, not an error") {
    std::mt19937 rng(405);
    const GrayImage right = testutil::random_image(rng, 16, 16);
    const GrayImage wrong = testutil::random_image(rng, 16, 16);
    const std::vector<GrayImage> secrets = testutil::random_images(rng, 8, 8, 8);

    const ShareContainer c = msis::encode_group(msis::make_group(secrets), right);
    const SecretGroup garbage = msis::decode_group(c, wrong);
    bool any_difference = false;
    for (std::size_t i = 0; i < 8; ++i)
        any_difference = any_difference || !(garbage.images[i] == secrets[i]);
    REQUIRE(any_difference);

    const SecretGroup good = msis::decode_group(c, right);
    for (std::size_t i = 0; i < 8; ++i)
        REQUIRE(good.images[i] == secrets[i]);
}

TEST_CASE("decode_group rejects malformed containers") {
    std::mt19937 rng(406);
    const GrayImage comparison = testutil::random_image(rng, 8, 8);
    const std::vector<GrayImage> secrets = testutil::random_images(rng, 8, 4, 4);
    ShareContainer c = msis::encode_group(msis::make_group(secrets), comparison);

    ShareContainer bad_bits = c;
    bad_bits.bit_length += 8;
    REQUIRE_THROWS_AS(msis::decode_group(bad_bits, comparison), msis::dimension_inconsistency);

    ShareContainer bad_real = c;
    bad_real.num_real = 9;
    REQUIRE_THROWS_AS(msis::decode_group(bad_real, comparison), msis::malformed_container);

    ShareContainer bad_share = c;
    bad_share.share = GrayImage(2, 3);
    REQUIRE_THROWS_AS(msis::decode_group(bad_share, comparison), msis::malformed_container);

    ShareContainer bad_side = c;
    bad_side.share = GrayImage(13, 13);
    REQUIRE_THROWS_AS(msis::decode_group(bad_side, comparison), msis::dimension_inconsistency);
}

TEST_CASE("encode_batch partitions into groups of eight") {
    std::mt19937 rng(407);
    const GrayImage comparison = testutil::random_image(rng, 16, 16);

    REQUIRE(msis::encode_batch(testutil::random_images(rng, 8, 4, 4), comparison).size() == 1);
    REQUIRE(msis::encode_batch(testutil::random_images(rng, 16, 4, 4), comparison).size() == 2);

    const auto nine = msis::encode_batch(testutil::random_images(rng, 9, 4, 4), comparison);
    REQUIRE(nine.size() == 2);
    REQUIRE(nine[0].num_real == 8);
    REQUIRE(nine[1].num_real == 1);
    const SecretGroup tail = msis::decode_group(nine[1], comparison);
    for (std::size_t i = 1; i < 8; ++i)
        REQUIRE(msis::is_null_image(tail.images[i]));

    std::vector<GrayImage> mixed = testutil::random_images(rng, 3, 4, 4);
    mixed.push_back(testutil::random_image(rng, 5, 4));
    REQUIRE_THROWS_AS(msis::encode_batch(mixed, comparison), msis::dimension_mismatch);
    REQUIRE_THROWS_AS(msis::encode_batch({}, comparison), msis::empty_input);
}

TEST_CASE("decode_batch drops padding and preserves order") {
    std::mt19937 rng(408);
    const GrayImage comparison = testutil::random_image(rng, 16, 16);

    for (const std::size_t n : {1u, 8u, 9u, 17u}) {
        const std::vector<GrayImage> secrets = testutil::random_images(rng, n, 6, 5);
        const auto containers = msis::encode_batch(secrets, comparison);
        REQUIRE(containers.size() == (n + 7) / 8);
        const auto recovered = msis::decode_batch(containers, comparison);
        REQUIRE(recovered.size() == n);
        for (std::size_t i = 0; i < n; ++i)
            REQUIRE(recovered[i] == secrets[i]);
    }

    const std::vector<GrayImage> three = testutil::random_images(rng, 3, 4, 4);
    const auto containers = msis::encode_batch(three, comparison);
    REQUIRE(msis::decode_batch(containers, comparison).size() == 3);

    REQUIRE(msis::decode_batch({}, comparison).empty());
}

TEST_CASE("encoding is deterministic") {
    std::mt19937 rng(409);
    const GrayImage comparison = testutil::random_image(rng, 8, 8);
    const std::vector<GrayImage> secrets = testutil::random_images(rng, 8, 8, 8);
    const auto a = serialize(msis::encode_group(msis::make_group(secrets), comparison));
    const auto b = serialize(msis::encode_group(msis::make_group(secrets), comparison));
    REQUIRE(a == b);
}

TEST_CASE("share square is the minimal enclosing square") {
    std::mt19937 rng(410);
    const GrayImage comparison = testutil::random_image(rng, 8, 8);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t w = 1 + rng() % 20;
        const std::size_t h = 1 + rng() % 20;
        const auto c = msis::encode_group(
            msis::make_group(testutil::random_images(rng, 8, w, h)), comparison);
        const std::size_t side = c.share.width();
        REQUIRE(side * side >= c.bit_length);
        REQUIRE(side * side - c.bit_length < 2 * side + 1);
    }
}

TEST_CASE("optimized codec matches the bit-at-a-time reference") {
    std::mt19937 rng(411);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t cw = 4 + rng() % 13;
        const std::size_t ch = 4 + rng() % 13;
        const GrayImage comparison = testutil::random_image(rng, cw, ch);
        const std::vector<GrayImage> secrets = testutil::random_images(rng, 8, 8, 8);

        const ShareContainer ours = msis::encode_group(msis::make_group(secrets), comparison);
        const ShareContainer theirs = naive::encode_group(secrets, 8, comparison);
        REQUIRE(serialize(ours) == serialize(theirs));

        const SecretGroup ours_back = msis::decode_group(ours, comparison);
        const auto theirs_back = naive::decode_group(theirs, comparison);
        for (std::size_t i = 0; i < 8; ++i)
            REQUIRE(ours_back.images[i] == theirs_back[i]);
    }
}

TEST_CASE("group validation catches non-null padding") {
    std::mt19937 rng(412);
    SecretGroup group = msis::make_group(testutil::random_images(rng, 3, 4, 4));
    group.images[5].pixels()[0] = 1;
    REQUIRE_THROWS_AS(msis::encode_group(group, testutil::random_image(rng, 4, 4)),
                      msis::validation_error);
}
