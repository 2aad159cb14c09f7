#ifndef BBT_SUBTREE_HPP
#define BBT_SUBTREE_HPP

#include <vector>

#include "bbt/codec.hpp"
#include "bbt/coding_tree.hpp"
#include "bbt/construction.hpp"
#include "bbt/crc.hpp"

namespace bbt {

// All labels a decoding leaf can take; a linear code of dimension `dim`.
// Codewords are listed by ascending information-pattern value, the pattern
// bits being the node's active-leaf bits in leaf order (first active leaf is
// the most significant).
struct LeafCodebook {
  int length = 0;
  int dim = 0;
  std::vector<Bits> codewords;  // 2^dim entries, codewords[0] is all-zero
  std::vector<int> weights;     // Hamming weight of each codeword
};

struct DecodingLeaf {
  int node = kNoNode;
  int length = 0;
  int dim = 0;
  int leaf_begin = 0;               // global leaf span [leaf_begin, leaf_begin+length)
  std::vector<int> active_leaves;   // global leaf indices, ascending
  LeafCodebook codebook;
};

// The tau-pruned decoding sub-tree: every decoding leaf has dimension at most
// tau while its parent exceeds tau (the root alone when dim(root) <= tau).
// Codebooks are enumerated at construction. Immutable afterwards.
class DecodingSubtree {
 public:
  DecodingSubtree(const CodingTree& tree, const RateProfile& profile, int tau);

  const CodingTree& tree() const { return tree_; }
  const RateProfile& profile() const { return profile_; }
  int tau() const { return tau_; }
  const std::vector<DecodingLeaf>& decoding_leaves() const { return leaves_; }
  // Index into decoding_leaves(), or kNoNode for other tree nodes.
  int leaf_id_of_node(int node) const { return node_to_leaf_[node]; }
  // Active-leaf count below each coding-tree node.
  int dimension(int node) const { return dim_[node]; }

 private:
  CodingTree tree_;
  RateProfile profile_;
  int tau_;
  std::vector<int> dim_;
  std::vector<int> node_to_leaf_;
  std::vector<DecodingLeaf> leaves_;
};

DecodingSubtree extract_subtree(const CodingTree& tree, const RateProfile& profile, int tau);

LeafCodebook enumerate_codebook(const DecodingSubtree& subtree, int t);

// f/g/copy evaluations of one PSC traversal (no propagation below decoding
// leaves); a static function of the sub-tree.
OpCounter llr_op_count(const DecodingSubtree& subtree);

// Partitioned SC: per decoding leaf, picks the codeword with the largest
// correlation sum (ties: smallest information pattern).
class PscDecoder {
 public:
  explicit PscDecoder(const DecodingSubtree& subtree, bool min_sum = false);

  const Bits& decode(const std::vector<double>& channel_llrs);
  // Combined hard estimate at the root after decode(); always a codeword.
  const Bits& root_hbe() const { return hbe_[0]; }
  const OpCounter& ops() const { return ops_; }

 private:
  void descend(int id);

  const DecodingSubtree* sub_;
  bool min_sum_;
  std::vector<std::vector<double>> llr_;
  std::vector<std::vector<std::uint8_t>> hbe_;
  std::vector<std::vector<std::uint8_t>> left_hbe_;
  Bits data_;
  OpCounter ops_;
};

// Partitioned SC list decoding: each path extends by every codeword of the
// current decoding leaf's codebook.
class PsclDecoder {
 public:
  PsclDecoder(const DecodingSubtree& subtree, int list_size, bool min_sum = false);

  const Bits& decode(const std::vector<double>& channel_llrs);
  double best_metric() const;  // metric of the returned path
  SclDecoder::CaResult decode_crc(const std::vector<double>& channel_llrs, const CrcConfig& crc);
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
  void split_at_decoding_leaf(const DecodingLeaf& leaf, int depth);
  std::vector<int> ranked_paths() const;

  const DecodingSubtree* sub_;
  int list_size_;
  bool min_sum_;
  std::vector<Path> pool_;
  std::vector<int> cur_;
  std::vector<int> free_;
  OpCounter ops_;
};

Bits psc_decode(const DecodingSubtree& subtree, const std::vector<double>& channel_llrs,
                OpCounter* counter = nullptr);

Bits pscl_decode(const DecodingSubtree& subtree, const std::vector<double>& channel_llrs,
                 int list_size, OpCounter* counter = nullptr);

SclDecoder::CaResult ca_pscl_decode(const DecodingSubtree& subtree,
                                    const std::vector<double>& channel_llrs, int list_size,
                                    const CrcConfig& crc, OpCounter* counter = nullptr);

}  // namespace bbt

#endif
