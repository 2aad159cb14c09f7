#ifndef BBT_CODING_TREE_HPP
#define BBT_CODING_TREE_HPP

#include <vector>

#include "bbt/bits.hpp"

namespace bbt {

constexpr int kNoNode = -1;

struct TreeNode {
  int length = 0;      // node label length (number of leaves below, inclusive)
  int depth = 0;       // root is depth 0
  int parent = kNoNode;
  int left = kNoNode;  // child of length ceil(length/2)
  int right = kNoNode; // child of length floor(length/2)
  int leaf_begin = 0;  // leaf-index span [leaf_begin, leaf_begin + length)
  int leaf_index = kNoNode;  // set iff length == 1
};

// The balanced binary coding tree for block length n. A node of length l >= 2
// has a left child of length ceil(l/2) and a right child of length floor(l/2);
// the n leaves (length 1) are indexed 0..n-1 from left to right. Immutable
// after construction and safe to share across threads.
class CodingTree {
 public:
  explicit CodingTree(int n);

  int n() const { return n_; }
  int height() const { return height_; }  // ceil(log2 n)
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(int id) const { return nodes_[id]; }
  int root() const { return 0; }
  // Node id of leaf i (left-to-right order).
  int leaf_node(int i) const { return leaf_order_[i]; }
  const std::vector<int>& leaf_order() const { return leaf_order_; }

 private:
  int n_ = 0;
  int height_ = 0;
  std::vector<TreeNode> nodes_;    // level-order, root at index 0
  std::vector<int> leaf_order_;
};

CodingTree build_coding_tree(int n);

// (v_l + v_r | v_r) with the length-adaptive xor: when |v_l| = |v_r| + 1 the
// trailing element of v_l passes through unchanged.
Bits combine(const Bits& v_l, const Bits& v_r);

// Exact inverse of combine.
std::pair<Bits, Bits> split(const Bits& v);

// Branch labels (0 = left, 1 = right) on the root-to-leaf path, one entry per
// leaf in left-to-right order.
std::vector<std::vector<std::uint8_t>> leaf_paths(const CodingTree& tree);

}  // namespace bbt

#endif
