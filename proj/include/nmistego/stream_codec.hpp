#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nmistego/bitstring.hpp"
#include "nmistego/codec_types.hpp"
#include "nmistego/image.hpp"

namespace nmistego::detail {

// One embeddable pixel. While the stream lasts, the pixel value becomes
// base + dec, where dec is the next group of up to n_bits stream bits;
// once the stream is exhausted the pixel keeps its cover value. Both codecs
// reduce to a site list plus this engine, which keeps the embedder and the
// extractor symmetric by construction.
struct Site {
    uint32_t i = 0;
    uint32_t j = 0;
    unsigned n_bits = 0;
    uint8_t base = 0;    // Min of the anchor extrema, or the cover value (block codec)
    uint8_t min_val = 0; // capacity bookkeeping only
    uint8_t max_val = 0;
};

uint64_t total_capacity(std::span<const Site> sites);
CapacityMap to_capacity_map(std::span<const Site> sites);

// Writes the stream into samples (pre-filled with cover values) site by
// site. A site takes r = min(n_bits, bits left) bits; r < n_bits can only
// happen at the final consumed site. Returns bits consumed. The caller must
// have checked stream.size() <= total_capacity(sites).
uint64_t embed_stream(std::span<const Site> sites, const BitString& stream,
                      std::vector<uint8_t>& samples, uint32_t width);

// Reads the full n_bits group at every site. Used by the header-less raw
// framing, where only streams that exactly fill the capacity round-trip.
BitString extract_raw_stream(std::span<const Site> sites, const GrayImage& stego);

// Parses the 32-bit big-endian payload-bit-count header, then returns
// exactly the declared payload bits.
BitString extract_framed_stream(std::span<const Site> sites, const GrayImage& stego);

} // namespace nmistego::detail
