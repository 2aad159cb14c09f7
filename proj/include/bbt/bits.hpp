#ifndef BBT_BITS_HPP
#define BBT_BITS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bbt {

// Bit vectors are kept unpacked (one byte per bit, values 0/1). All
// interfaces are positional: index 0 is the leftmost bit.
using Bits = std::vector<std::uint8_t>;

std::size_t hamming_weight(const Bits& v);
Bits xor_bits(const Bits& a, const Bits& b);

// Parses "0101..." or "0x1f4..." (hex expands to 4 bits per digit).
Bits parse_bits(const std::string& s);
std::string to_bit_string(const Bits& v);
// Requires v.size() % 4 == 0.
std::string to_hex_string(const Bits& v);

}  // namespace bbt

#endif
