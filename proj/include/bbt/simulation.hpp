#ifndef BBT_SIMULATION_HPP
#define BBT_SIMULATION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bbt/construction.hpp"

namespace bbt {

enum class DecoderKind { Sc, Scl, CaScl, Psc, Pscl, CaPscl };

std::string decoder_name(DecoderKind d);
DecoderKind decoder_from_name(const std::string& s);

struct SimConfig {
  int n = 0;
  int k = 0;  // data bits (excluding CRC)
  Method construction = Method::Pw;
  double design_snr_db = 3.0;  // GA construction only
  DecoderKind decoder = DecoderKind::Sc;
  int list_size = 1;
  int tau = 0;         // partitioned decoders only
  int crc_length = 0;  // 0 or 11
  std::vector<double> ebn0_db;
  std::int64_t max_trials = 10'000'000;
  std::int64_t min_frame_errors = 100;
  std::uint64_t seed = 1;
};

struct SnrPointResult {
  double ebn0_db = 0.0;
  std::int64_t trials = 0;
  std::int64_t frame_errors = 0;
  std::int64_t bit_errors = 0;
  double fer = 0.0;
  double ber = 0.0;
  double llr_ops = 0.0;  // per-trial mean; constant for a fixed decoder/profile
};

struct SimResult {
  SimConfig config;
  std::vector<SnrPointResult> points;
};

// Monte-Carlo BPSK-AWGN frame/bit error estimation. Each SNR point runs until
// min_frame_errors or max_trials; trial t of point s draws its noise from the
// (seed, s, t) substream, so results are bit-reproducible.
SimResult run_simulation(const SimConfig& config);

// Schema-versioned JSON; floats carry 17 significant digits.
std::string result_to_json(const SimResult& result);
void write_csv(const SimResult& result, std::ostream& os);

}  // namespace bbt

#endif
