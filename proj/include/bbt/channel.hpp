#ifndef BBT_CHANNEL_HPP
#define BBT_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "bbt/bits.hpp"

namespace bbt {

// LLR magnitude cap; also the value used for "noiseless" test vectors.
inline constexpr double kLlrCap = 50.0;

// Noise std for BPSK with unit symbol energy: N0 = 2 sigma^2, Es = rate * Eb.
double sigma_from_ebn0(double ebn0_db, double rate);

// Self-contained splitmix64-based generator so simulation streams are
// reproducible independent of the standard library. normal() uses Box-Muller.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Stream for trial `trial` of SNR point `snr_index` under a master seed.
  static Rng for_trial(std::uint64_t seed, std::uint64_t snr_index, std::uint64_t trial);

  std::uint64_t next_u64();
  double uniform();  // (0, 1)
  double normal();   // standard normal
  int bit() { return static_cast<int>(next_u64() >> 63); }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// BPSK (0 -> +1, 1 -> -1) over AWGN with std sigma; returns 2y/sigma^2
// clamped to +-kLlrCap.
std::vector<double> channel_llrs(const Bits& codeword, double sigma, Rng& rng);

// Exact +-kLlrCap vector for a codeword (noiseless test input).
std::vector<double> noiseless_llrs(const Bits& codeword);

}  // namespace bbt

#endif
