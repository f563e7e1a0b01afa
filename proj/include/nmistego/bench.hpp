#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmistego/bitstring.hpp"
#include "nmistego/codec_types.hpp"
#include "nmistego/image.hpp"

namespace nmistego {

/// One (image, scheme) measurement. elapsed_ms is informational only and is
/// deliberately left out of the CSV, which must be byte-identical across
/// runs with the same seed.
struct BenchRow {
    std::string image;
    Scheme scheme = Scheme::proposed;
    uint32_t width = 0;  // stego dimensions
    uint32_t height = 0;
    uint64_t bits = 0;
    double bpp = 0.0;
    double psnr_vs_input = 0.0;
    double psnr_vs_cover = 0.0;
    double elapsed_ms = 0.0;
};

struct GainRow {
    std::string image;
    double gain = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;       // sorted by image name, proposed first
    std::vector<GainRow> gains;       // per image; skipped when baseline bpp is 0
    std::optional<double> mean_gain;  // mean of per-image gains
    std::vector<std::string> warnings;
};

struct BenchOptions {
    uint64_t seed = 0;
    /// Fixed-file payload policy: embed this file's bits (truncated to each
    /// image's capacity). Default policy is max-capacity seeded random bits.
    std::optional<std::filesystem::path> payload_file;
};

/// Benchmarks every .pgm in corpus_dir: the image is subsampled to quarter
/// size and re-enlarged by interpolation, both schemes embed a full-capacity
/// payload (raw framing), and PSNR/BPP are recorded. Images too small to
/// subsample are treated as already-downscaled originals. Unreadable images
/// are skipped with a warning.
BenchReport bench_corpus(const std::filesystem::path& corpus_dir,
                         const BenchOptions& opts = {});

/// Single-image benchmark used by bench_corpus and the tests.
std::vector<BenchRow> bench_image(const std::string& name, const GrayImage& input,
                                  const BenchOptions& opts = {});

/// CSV with header "image,scheme,width,height,bits,bpp,psnr_vs_input,
/// psnr_vs_cover". Rows only, no timing: byte-deterministic per seed.
std::string bench_csv(const BenchReport& report);

/// CSV with header "image,gain_rate" plus a final mean row when nonempty.
std::string gains_csv(const BenchReport& report);

/// Deterministic payload bits for (seed, image, scheme): a SplitMix64-keyed
/// mt19937_64 stream, documented in the README so results are reproducible.
BitString random_payload(uint64_t seed, std::string_view image_name, Scheme scheme,
                         uint64_t nbits);

} // namespace nmistego
