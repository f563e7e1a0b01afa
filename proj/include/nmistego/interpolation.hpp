#pragma once

#include <bit>
#include <cstdint>

#include "nmistego/image.hpp"

namespace nmistego {

/// Role of a cover-image pixel, a total function of coordinate parity.
/// Even/even pixels carry original samples; the rest are interpolated.
enum class PixelClass { Original, RowInterp, ColInterp, DiagInterp };

constexpr PixelClass classify(uint32_t i, uint32_t j) noexcept {
    const bool row_even = (i % 2) == 0;
    const bool col_even = (j % 2) == 0;
    if (row_even && col_even) return PixelClass::Original;
    if (row_even) return PixelClass::RowInterp;
    if (col_even) return PixelClass::ColInterp;
    return PixelClass::DiagInterp;
}

/// Bits embeddable across a neighbour difference d: floor(log2(d)) for
/// d >= 2, zero otherwise (log2 is undefined or zero there).
constexpr unsigned capacity_bits(unsigned d) noexcept {
    return d >= 2 ? unsigned(std::bit_width(d)) - 1u : 0u;
}

/// Extreme values of the anchor pixels an interpolated pixel derives from.
struct Extrema {
    uint8_t min_val = 0;
    uint8_t max_val = 0;

    unsigned d() const noexcept { return unsigned(max_val) - unsigned(min_val); }
    unsigned n_bits() const noexcept { return capacity_bits(d()); }
};

/// Neighbour-mean upscaling of an M x N image to (2M-1) x (2N-1):
///   C(2m,2n)   = I(m,n)
///   C(i,j)     = (C(i,j-1) + C(i,j+1)) / 2   for i even, j odd
///   C(i,j)     = (C(i-1,j) + C(i+1,j)) / 2   for i odd,  j even
///   C(i,j)     = (C(i-1,j-1) + C(i-1,j) + C(i,j-1)) / 3   for i odd, j odd
/// with truncating integer division. Requires M >= 2 and N >= 2.
GrayImage nmi_upscale(const GrayImage& original);

/// Min/Max over the anchor neighbours of interpolated pixel (i, j):
///   RowInterp  -> {(i,j-1), (i,j+1)}
///   ColInterp  -> {(i-1,j), (i+1,j)}
///   DiagInterp -> {(i-1,j-1), (i-1,j+1), (i+1,j-1)}
/// Anchors are identical in cover and stego images, so the same call serves
/// embedding and extraction. Calling this on an Original pixel is an error.
Extrema neighbor_extrema(const GrayImage& cover_or_stego, uint32_t i, uint32_t j);

/// Inverse of the anchor placement: out(m, n) = stego(2m, 2n). Requires an
/// NMI-shaped input, i.e. odd dimensions >= 3.
GrayImage recover_original(const GrayImage& stego);

} // namespace nmistego
