#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nmistego/codec_types.hpp"
#include "nmistego/image.hpp"

namespace nmistego::proposed {

/// Coordinates of every interpolated pixel of a (2M-1) x (2N-1) cover in
/// row-major order. This is the bit-consumption order of embed and extract.
std::vector<std::pair<uint32_t, uint32_t>> traversal_order(uint32_t width,
                                                           uint32_t height);

/// Per-pixel capacity of the cover derived from `original`: for each
/// interpolated pixel, n = floor(log2(Max - Min)) over its anchor
/// neighbours (0 when the difference is below 2).
CapacityMap compute_capacity(const GrayImage& original);

/// Upscales `original`, then writes the framed payload into interpolated
/// pixels: C'(i,j) = Min(i,j) + dec. Pixels past the end of the stream keep
/// their interpolated value. Requires 32 + |payload| (header framing) or
/// |payload| (raw) <= total capacity.
EmbedResult embed(const GrayImage& original, const BitString& payload,
                  Framing framing = Framing::with_header);

/// Recomputes each pixel's extrema from the untouched anchors and reads
/// dec = C'(i,j) - Min(i,j). Header framing returns exactly the embedded
/// payload; raw framing returns the full n-bit group of every pixel.
BitString extract(const GrayImage& stego, Framing framing = Framing::with_header);

} // namespace nmistego::proposed
