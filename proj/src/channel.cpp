#include "bbt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bbt {

double sigma_from_ebn0(double ebn0_db, double rate) {
  if (!(rate > 0)) throw std::invalid_argument("sigma_from_ebn0: rate must be > 0");
  return 1.0 / std::sqrt(2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

static std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t snr_index, std::uint64_t trial) {
  // Mix the three coordinates; two splitmix rounds decorrelate neighbours.
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s) ^ (snr_index * 0xd1342543de82ef95ULL);
  std::uint64_t b = splitmix64(a) ^ (trial * 0xaf251af3b0f025b5ULL);
  splitmix64(b);
  return Rng(b);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
  // 53 random bits into (0, 1); never returns exactly 0.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u = uniform();
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double theta = 2.0 * M_PI * v;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::vector<double> channel_llrs(const Bits& codeword, double sigma, Rng& rng) {
  if (!(sigma > 0)) throw std::invalid_argument("channel_llrs: sigma must be > 0");
  std::vector<double> llr(codeword.size());
  const double scale = 2.0 / (sigma * sigma);
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    const double y = (codeword[i] ? -1.0 : 1.0) + sigma * rng.normal();
    llr[i] = std::clamp(scale * y, -kLlrCap, kLlrCap);
  }
  return llr;
}

std::vector<double> noiseless_llrs(const Bits& codeword) {
  std::vector<double> llr(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i)
    llr[i] = codeword[i] ? -kLlrCap : kLlrCap;
  return llr;
}

}  // namespace bbt
