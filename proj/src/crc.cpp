#include "bbt/crc.hpp"

#include <stdexcept>

namespace bbt {

CrcConfig crc11() {
  return CrcConfig{11, Bits{1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1}};
}

Bits crc_remainder(const Bits& msg, const CrcConfig& crc) {
  if (crc.length < 1 || static_cast<int>(crc.poly.size()) != crc.length + 1 || !crc.poly[0])
    throw std::invalid_argument("crc_remainder: bad polynomial");
  Bits reg(msg);
  reg.insert(reg.end(), crc.length, 0);
  for (std::size_t i = 0; i < msg.size(); ++i) {
    if (!reg[i]) continue;
    for (int j = 0; j <= crc.length; ++j) reg[i + j] ^= crc.poly[j];
  }
  return Bits(reg.end() - crc.length, reg.end());
}

Bits crc_append(const Bits& msg, const CrcConfig& crc) {
  Bits out = msg;
  const Bits rem = crc_remainder(msg, crc);
  out.insert(out.end(), rem.begin(), rem.end());
  return out;
}

bool crc_check(const Bits& msg_with_crc, const CrcConfig& crc) {
  if (static_cast<int>(msg_with_crc.size()) < crc.length)
    throw std::invalid_argument("crc_check: message shorter than CRC");
  const Bits msg(msg_with_crc.begin(), msg_with_crc.end() - crc.length);
  const Bits rem = crc_remainder(msg, crc);
  return std::equal(rem.begin(), rem.end(), msg_with_crc.end() - crc.length);
}

}  // namespace bbt
