#pragma once

#include <cstdint>

#include "nmistego/image.hpp"

namespace nmistego {

/// Mean squared sample difference. Dimensions must match.
double mse(const GrayImage& a, const GrayImage& b);

/// 10 * log10(255^2 / mse) in dB; +infinity when the images are identical.
double psnr(const GrayImage& a, const GrayImage& b);

/// Embedded bits divided by stego pixel count.
double bpp(uint64_t bits_embedded, const GrayImage& stego);
double bpp(uint64_t bits_embedded, uint64_t pixel_count);

/// Relative payload improvement: (bpp_proposed - bpp_baseline) / bpp_baseline.
/// The baseline must be positive.
double gain_rate(double bpp_proposed, double bpp_baseline);

} // namespace nmistego
