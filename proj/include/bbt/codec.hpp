#ifndef BBT_CODEC_HPP
#define BBT_CODEC_HPP

#include <cstdint>
#include <vector>

#include "bbt/bits.hpp"
#include "bbt/coding_tree.hpp"
#include "bbt/construction.hpp"
#include "bbt/crc.hpp"

namespace bbt {

struct OpCounter {
  std::uint64_t f_ops = 0;
  std::uint64_t g_ops = 0;
  std::uint64_t copy_ops = 0;  // pass-through copies at odd-length splits
  std::uint64_t total() const { return f_ops + g_ops + copy_ops; }
};

// f(a,b) = ln((1 + e^{a+b}) / (e^a + e^b)), evaluated in the overflow-safe
// two-term form.
double f_func(double a, double b);

// Hardware-style approximation sign(a)sign(b)min(|a|,|b|). Decoders take it
// as an opt-in kernel; everything quantitative here assumes the exact form.
double f_func_min_sum(double a, double b);

// g(a,b,c) = b + (-1)^c a.
double g_func(double a, double b, std::uint8_t c);

// ln(1 + exp(-(1-2*beta)*alpha)), the SC list path-metric increment.
double path_metric_increment(double alpha, std::uint8_t beta);

// Codeword from a full leaf-label vector (frozen positions included).
Bits encode_leaves(const CodingTree& tree, const Bits& leaf_labels);

// Data bits fill the active leaves in ascending leaf index; frozen leaves are
// zero.
Bits encode(const CodingTree& tree, const RateProfile& profile, const Bits& data);

// Closed-form operation count of one SC pass: every internal node of length l
// costs floor(l/2) f, floor(l/2) g and (l odd) one copy.
OpCounter sc_op_count(const CodingTree& tree);

// Successive cancellation over the coding tree: pre-order LLR propagation,
// post-order hard-estimate aggregation. Reusable across codewords; not
// thread-safe per instance.
class ScDecoder {
 public:
  ScDecoder(const CodingTree& tree, const RateProfile& profile, bool min_sum = false);

  const Bits& decode(const std::vector<double>& channel_llrs);
  const OpCounter& ops() const { return ops_; }

 private:
  void descend(int id);

  const CodingTree* tree_;
  std::vector<std::uint8_t> active_;
  bool min_sum_;
  std::vector<std::vector<double>> llr_;            // by depth, current chain
  std::vector<std::vector<std::uint8_t>> hbe_;      // by depth
  std::vector<std::vector<std::uint8_t>> left_hbe_; // by depth
  Bits data_;
  OpCounter ops_;
};

// SC list decoder; keeps at most `list_size` paths ordered stably by
// (metric, creation order).
class SclDecoder {
 public:
  SclDecoder(const CodingTree& tree, const RateProfile& profile, int list_size,
             bool min_sum = false);

  // Minimum-metric path's data.
  const Bits& decode(const std::vector<double>& channel_llrs);
  // Data of the best CRC-passing path, or the minimum-metric path when none
  // passes. The CRC bits are stripped from the returned data.
  struct CaResult {
    Bits data;
    bool crc_ok = false;
  };
  CaResult decode_crc(const std::vector<double>& channel_llrs, const CrcConfig& crc);

  const OpCounter& ops() const { return ops_; }

 private:
  struct Path {
    std::vector<std::vector<double>> llr;
    std::vector<std::vector<std::uint8_t>> hbe;
    std::vector<std::vector<std::uint8_t>> left_hbe;
    Bits data;
    double metric = 0.0;
  };

  void run(const std::vector<double>& channel_llrs);
  void descend(int id);
  void split_at_active_leaf(int depth);
  // Final path slots sorted by (metric, list order).
  std::vector<int> ranked_paths() const;

  const CodingTree* tree_;
  std::vector<std::uint8_t> active_;
  int list_size_;
  int k_;
  bool min_sum_;
  std::vector<Path> pool_;
  std::vector<int> cur_;   // active slots, in list order
  std::vector<int> free_;
  OpCounter ops_;
};

Bits sc_decode(const CodingTree& tree, const RateProfile& profile,
               const std::vector<double>& channel_llrs, OpCounter* counter = nullptr);

Bits scl_decode(const CodingTree& tree, const RateProfile& profile,
                const std::vector<double>& channel_llrs, int list_size,
                OpCounter* counter = nullptr);

// Expects a profile with k_data + crc.length active leaves.
SclDecoder::CaResult ca_scl_decode(const CodingTree& tree, const RateProfile& profile,
                                   const std::vector<double>& channel_llrs, int list_size,
                                   const CrcConfig& crc, OpCounter* counter = nullptr);

}  // namespace bbt

#endif
