#ifndef BBT_CRC_HPP
#define BBT_CRC_HPP

#include "bbt/bits.hpp"

namespace bbt {

struct CrcConfig {
  int length = 0;  // number of parity bits = degree of the polynomial
  Bits poly;       // coefficients, highest degree first, length + 1 entries
};

// The 5G CRC11: D^11 + D^10 + D^9 + D^5 + 1.
CrcConfig crc11();

// Remainder of msg * D^length mod poly, `length` bits, highest degree first.
Bits crc_remainder(const Bits& msg, const CrcConfig& crc);

Bits crc_append(const Bits& msg, const CrcConfig& crc);
bool crc_check(const Bits& msg_with_crc, const CrcConfig& crc);

}  // namespace bbt

#endif
