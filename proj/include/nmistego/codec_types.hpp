#pragma once

#include <cstdint>
#include <vector>

#include "nmistego/bitstring.hpp"
#include "nmistego/image.hpp"

namespace nmistego {

enum class Scheme { proposed, jungyoo };

const char* scheme_name(Scheme s) noexcept;

/// Stream framing. with_header prepends a 32-bit big-endian count of payload
/// bits so extraction is self-delimiting; raw embeds the payload bits alone.
enum class Framing { with_header, raw };

inline constexpr unsigned kHeaderBits = 32;

/// Capacity record for one embeddable pixel, in traversal order.
struct CapacityEntry {
    uint32_t i = 0;
    uint32_t j = 0;
    unsigned n_bits = 0;
    uint8_t min_val = 0;
    uint8_t max_val = 0;
};

struct CapacityMap {
    std::vector<CapacityEntry> entries; // exactly the embed/extract order
    uint64_t total_bits = 0;            // sum of n_bits
};

struct EmbedResult {
    GrayImage stego;
    uint64_t payload_bits_embedded = 0;
    unsigned header_bits = 0; // 32 in with_header framing, 0 in raw
    CapacityMap capacity;

    uint64_t total_bits_embedded() const noexcept {
        return payload_bits_embedded + header_bits;
    }
};

} // namespace nmistego
