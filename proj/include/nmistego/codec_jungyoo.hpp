#pragma once

#include "nmistego/codec_types.hpp"
#include "nmistego/image.hpp"

namespace nmistego::jungyoo {

/// Block-difference capacity: the cover is tiled into non-overlapping 2x2
/// blocks anchored at even coordinates (only blocks that fit entirely; the
/// odd-sized cover's last row/column stays unpartitioned). Per block, the
/// three non-anchor cells carry n = floor(log2(|C(p,q) - C(i,j)|)) bits
/// each, clamped so that C(p,q) + 2^n - 1 cannot exceed 255.
CapacityMap compute_capacity(const GrayImage& original);

/// Embeds the framed payload per block cell: C'(p,q) = C(p,q) + dec.
EmbedResult embed(const GrayImage& original, const BitString& payload,
                  Framing framing = Framing::with_header);

/// Rebuilds the cover from the untouched anchors and reads
/// dec = C'(p,q) - C(p,q) per block cell, in embed order.
BitString extract(const GrayImage& stego, Framing framing = Framing::with_header);

} // namespace nmistego::jungyoo
