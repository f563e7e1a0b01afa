#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmistego {

/// Ordered sequence of bits with a read cursor. Multi-bit groups are always
/// MSB-first: a k-bit group b0..b(k-1) has value sum(b_t * 2^(k-1-t)).
class BitString {
public:
    BitString() = default;

    /// Bytes become bits MSB-first within each byte, byte order preserved.
    static BitString from_bytes(std::span<const uint8_t> bytes);
    /// Parses '0'/'1' characters; ASCII whitespace is skipped.
    static BitString from_ascii(std::string_view text);

    /// Inverse of from_bytes; size() must be a multiple of 8.
    std::vector<uint8_t> to_bytes() const;
    std::string to_ascii() const;

    void push_bit(bool bit) { bits_.push_back(bit ? 1 : 0); }
    /// Appends the nbits-wide MSB-first encoding of value (nbits <= 64).
    void push_uint(uint64_t value, unsigned nbits);

    /// Consumes nbits from the cursor; reading past the end is an error.
    uint64_t read_uint(unsigned nbits);
    /// Non-consuming group read at an arbitrary position.
    uint64_t value_at(size_t pos, unsigned nbits) const;

    uint8_t bit(size_t pos) const { return bits_[pos]; }
    size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    size_t cursor() const noexcept { return cursor_; }
    size_t remaining() const noexcept { return bits_.size() - cursor_; }
    void rewind() noexcept { cursor_ = 0; }

    /// Bits in [first, last), cursor reset.
    BitString slice(size_t first, size_t last) const;
    void append(const BitString& other);

    /// Content equality; the cursor does not participate.
    friend bool operator==(const BitString& a, const BitString& b) {
        return a.bits_ == b.bits_;
    }

private:
    std::vector<uint8_t> bits_; // one bit per element, values 0/1
    size_t cursor_ = 0;
};

} // namespace nmistego
