#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "nmistego/errors.hpp"

namespace nmistego {

/// 8-bit grayscale image, row-major samples. Images are immutable values:
/// every operation returns a new image, so they are safe to share across
/// threads.
class GrayImage {
public:
    GrayImage(uint32_t width, uint32_t height, std::vector<uint8_t> samples);

    static GrayImage filled(uint32_t width, uint32_t height, uint8_t value);

    uint32_t width() const noexcept { return width_; }
    uint32_t height() const noexcept { return height_; }
    uint64_t pixel_count() const noexcept {
        return uint64_t(width_) * uint64_t(height_);
    }

    /// Sample at row i, column j. No bounds check.
    uint8_t at(uint32_t i, uint32_t j) const {
        return samples_[size_t(i) * width_ + j];
    }

    std::span<const uint8_t> samples() const noexcept { return samples_; }

    bool operator==(const GrayImage&) const = default;

private:
    uint32_t width_;
    uint32_t height_;
    std::vector<uint8_t> samples_;
};

/// Parses a binary portable graymap ("P5", maxval <= 255). Sample values are
/// taken verbatim; no rescaling for maxval < 255.
GrayImage load_pgm(std::span<const uint8_t> bytes);

/// Serializes to the canonical form "P5\n<w> <h>\n255\n" + raster.
/// load_pgm(save_pgm(img)) == img, byte-for-byte on the samples.
std::vector<uint8_t> save_pgm(const GrayImage& img);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const GrayImage& img, const std::filesystem::path& path);

/// Even-coordinate subsampling: out(m, n) = img(2m, 2n), sized
/// floor(w/2) x floor(h/2). Requires both dimensions >= 2.
GrayImage downscale_half(const GrayImage& img);

/// Top-left w x h sub-image.
GrayImage crop(const GrayImage& img, uint32_t w, uint32_t h);

} // namespace nmistego
