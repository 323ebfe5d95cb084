#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msis/msis.hpp"

namespace msis::cli {

namespace detail {

namespace fs = std::filesystem;

inline GrayImage load_gray(const fs::path& path, std::ostream& err) {
    bool was_color = false;
    GrayImage img = read_image(path, &was_color);
    if (was_color)
        err << "warning: " << path.string() << " is a color image; converted to luminance\n";
    return img;
}

inline std::string share_filename(const std::string& stem, std::size_t group) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "_%04zu.msis", group);
    return stem + buf;
}

inline std::string recovered_filename(std::size_t group, int index) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "recovered_%04zu_%d.pgm", group, index);
    return buf;
}

inline void cmd_keygen(const fs::path& comparison_path, std::ostream& out, std::ostream& err) {
    out << derive_key(load_gray(comparison_path, err)).to_string() << "\n";
}

inline void cmd_encode(const fs::path& comparison_path, const std::string& stem,
                       const std::vector<std::string>& image_paths, std::ostream& out,
                       std::ostream& err) {
    const GrayImage comparison = load_gray(comparison_path, err);
    std::vector<GrayImage> secrets;
    secrets.reserve(image_paths.size());
    for (const std::string& p : image_paths)
        secrets.push_back(load_gray(p, err));

    const std::vector<ShareContainer> containers = encode_batch(secrets, comparison);

    const std::size_t provided = 8 * comparison.pixel_count();
    const std::size_t needed = containers.front().bit_length;
    if (provided < needed)
        err << "warning: comparison image provides " << provided << " of " << needed
            << " pad bits; the tail is zero-padded, so those secret bits travel in the clear\n";

    const fs::path parent = fs::path(stem).parent_path();
    if (!parent.empty())
        fs::create_directories(parent);
    for (std::size_t g = 0; g < containers.size(); ++g) {
        const ShareContainer& c = containers[g];
        const std::string name = share_filename(stem, g);
        write_share_file(c, name);
        out << name << ": " << c.num_real << (c.num_real == 1 ? " secret " : " secrets ")
            << c.secret_width << "x" << c.secret_height << " -> share " << c.share.width() << "x"
            << c.share.height() << " (" << kHeaderSize + c.share.pixel_count() << " bytes)\n";
    }
}

inline void cmd_decode(const fs::path& comparison_path, const std::vector<std::string>& share_paths,
                       const fs::path& out_dir, std::ostream& out, std::ostream& err) {
    const GrayImage comparison = load_gray(comparison_path, err);
    fs::create_directories(out_dir);
    for (std::size_t g = 0; g < share_paths.size(); ++g) {
        const ShareContainer container = read_share_file(share_paths[g]);
        SecretGroup group = decode_group(container, comparison);
        for (int i = 0; i < group.num_real; ++i)
            write_image(group.images[static_cast<std::size_t>(i)],
                        out_dir / recovered_filename(g, i));
        out << "group " << g << ": " << group.num_real
            << (group.num_real == 1 ? " image " : " images ") << container.secret_width << "x"
            << container.secret_height << " -> " << out_dir.string() << "\n";
    }
}

inline std::vector<fs::path> list_images(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".pgm" || ext == ".ppm")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

inline int cmd_verify(const fs::path& original_dir, const fs::path& recovered_dir, bool strict,
                      std::ostream& out, std::ostream& err) {
    const std::vector<fs::path> originals = list_images(original_dir);
    const std::vector<fs::path> recovered = list_images(recovered_dir);
    if (originals.empty())
        throw dimension_mismatch("verify: no images found in " + original_dir.string());
    if (originals.size() != recovered.size())
        throw dimension_mismatch("verify: " + std::to_string(originals.size()) + " originals vs " +
                                 std::to_string(recovered.size()) + " recovered images");
    bool all_identical = true;
    for (std::size_t i = 0; i < originals.size(); ++i) {
        const GrayImage a = load_gray(originals[i], err);
        const GrayImage b = load_gray(recovered[i], err);
        if (!a.same_size(b))
            throw dimension_mismatch("verify: size mismatch for " +
                                     originals[i].filename().string());
        const QualityReport q = compare(a, b);
        char row[160];
        if (std::isinf(q.psnr))
            std::snprintf(row, sizeof(row), "%s %.2f Inf %g", originals[i].filename().c_str(),
                          q.ssim, q.rmse);
        else
            std::snprintf(row, sizeof(row), "%s %.2f %.2f %g", originals[i].filename().c_str(),
                          q.ssim, q.psnr, q.rmse);
        out << row << "\n";
        all_identical = all_identical && a == b;
    }
    if (strict && !all_identical) {
        err << "strict check failed: recovered images are not bit-identical\n";
        return 3;
    }
    return 0;
}

inline void cmd_analyze(const fs::path& share_path, std::ostream& out) {
    const ShareContainer container = read_share_file(share_path);
    out << "share " << container.share.width() << "x" << container.share.height() << ", "
        << container.num_real << " real secrets " << container.secret_width << "x"
        << container.secret_height << ", bit length " << container.bit_length << "\n";

    char line[96];
    std::snprintf(line, sizeof(line), "entropy: %.4f bits/pixel", entropy(container.share));
    out << line << "\n";

    std::array<std::size_t, 256> hist{};
    for (const std::uint8_t p : container.share.pixels())
        ++hist[p];
    const auto [min_it, max_it] = std::minmax_element(hist.begin(), hist.end());
    out << "histogram: min bin " << *min_it << ", max bin " << *max_it << "\n";

    const std::vector<BinaryImage> planes = unpack_group(container.share);
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const BitStream bits = flatten_square(planes[i], container.bit_length);
        std::snprintf(line, sizeof(line), "plane %zu balance: %.4f", i,
                      static_cast<double>(bits.count_ones()) /
                          static_cast<double>(bits.size()));
        out << line << "\n";
    }
}

} // namespace detail

/// Runs the msis command line. Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 usage, 2 I/O or format error, 3 validation error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"(n, n/8) multi-secret image sharing"};
    app.require_subcommand(1);

    std::string keygen_comparison;
    auto* keygen_cmd = app.add_subcommand("keygen", "Derive the 8-digit security key");
    keygen_cmd->add_option("--comparison", keygen_comparison, "comparison image (PGM/PPM)")
        ->required();

    std::string encode_comparison;
    std::string encode_stem;
    std::vector<std::string> encode_images;
    auto* encode_cmd = app.add_subcommand("encode", "Encrypt secret images into share files");
    encode_cmd->add_option("--comparison", encode_comparison, "comparison image (PGM/PPM)")
        ->required();
    encode_cmd->add_option("--out", encode_stem, "output stem; shares are <stem>_NNNN.msis")
        ->required();
    encode_cmd->add_option("images", encode_images, "secret images, 8 per share")->required();

    std::string decode_comparison;
    std::vector<std::string> decode_shares;
    std::string decode_out_dir;
    auto* decode_cmd = app.add_subcommand("decode", "Recover secret images from share files");
    decode_cmd->add_option("--comparison", decode_comparison, "comparison image (PGM/PPM)")
        ->required();
    decode_cmd->add_option("--share", decode_shares, "share container file(s)")->required();
    decode_cmd->add_option("--out-dir", decode_out_dir, "directory for recovered PGMs")
        ->required();

    std::string verify_original;
    std::string verify_recovered;
    bool verify_strict = false;
    auto* verify_cmd = app.add_subcommand("verify", "Compare original and recovered images");
    verify_cmd->add_option("--original", verify_original, "directory of originals")->required();
    verify_cmd->add_option("--recovered", verify_recovered, "directory of recovered images")
        ->required();
    verify_cmd->add_flag("--strict", verify_strict, "fail unless every pair is bit-identical");

    std::string analyze_share;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report share randomness statistics");
    analyze_cmd->add_option("--share", analyze_share, "share container file")->required();

    int result = 0;
    keygen_cmd->callback([&] { detail::cmd_keygen(keygen_comparison, out, err); });
    encode_cmd->callback(
        [&] { detail::cmd_encode(encode_comparison, encode_stem, encode_images, out, err); });
    decode_cmd->callback(
        [&] { detail::cmd_decode(decode_comparison, decode_shares, decode_out_dir, out, err); });
    verify_cmd->callback([&] {
        result = detail::cmd_verify(verify_original, verify_recovered, verify_strict, out, err);
    });
    analyze_cmd->callback([&] { detail::cmd_analyze(analyze_share, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const msis::error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return result;
}

/// Test-friendly overload; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("msis");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace msis::cli
