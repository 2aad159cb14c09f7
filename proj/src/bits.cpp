#include "bbt/bits.hpp"

#include <cstddef>
#include <stdexcept>

namespace bbt {

std::size_t hamming_weight(const Bits& v) {
  std::size_t w = 0;
  for (auto b : v) w += b;
  return w;
}

Bits xor_bits(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) throw std::invalid_argument("xor_bits: length mismatch");
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

static int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Bits parse_bits(const std::string& s) {
  Bits out;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
    for (std::size_t i = 2; i < s.size(); ++i) {
      int d = hex_digit(s[i]);
      if (d < 0) throw std::invalid_argument("parse_bits: bad hex digit");
      for (int k = 3; k >= 0; --k) out.push_back(static_cast<std::uint8_t>((d >> k) & 1));
    }
    return out;
  }
  for (char c : s) {
    if (c == '0' || c == '1')
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (c != ' ' && c != '_')
      throw std::invalid_argument("parse_bits: bad binary digit");
  }
  return out;
}

std::string to_bit_string(const Bits& v) {
  std::string s;
  s.reserve(v.size());
  for (auto b : v) s.push_back(b ? '1' : '0');
  return s;
}

std::string to_hex_string(const Bits& v) {
  if (v.size() % 4 != 0) throw std::invalid_argument("to_hex_string: length not a multiple of 4");
  static const char* digits = "0123456789abcdef";
  std::string s = "0x";
  for (std::size_t i = 0; i < v.size(); i += 4) {
    int d = (v[i] << 3) | (v[i + 1] << 2) | (v[i + 2] << 1) | v[i + 3];
    s.push_back(digits[d]);
  }
  return s;
}

}  // namespace bbt
