#include "bbt/coding_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bbt {

CodingTree::CodingTree(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CodingTree: length must be >= 1");
  while ((1 << height_) < n) ++height_;

  TreeNode root;
  root.length = n;
  nodes_.push_back(root);
  // Children are created eagerly in level order so child lookup is O(1).
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].length < 2) continue;
    TreeNode l, r;
    l.length = (nodes_[i].length + 1) / 2;
    r.length = nodes_[i].length / 2;
    l.depth = r.depth = nodes_[i].depth + 1;
    l.parent = r.parent = static_cast<int>(i);
    l.leaf_begin = nodes_[i].leaf_begin;
    r.leaf_begin = nodes_[i].leaf_begin + l.length;
    nodes_[i].left = static_cast<int>(nodes_.size());
    nodes_[i].right = static_cast<int>(nodes_.size()) + 1;
    nodes_.push_back(l);
    nodes_.push_back(r);
  }

  leaf_order_.assign(n, kNoNode);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].length == 1) {
      nodes_[i].leaf_index = nodes_[i].leaf_begin;
      leaf_order_[nodes_[i].leaf_begin] = static_cast<int>(i);
    }
  }
}

CodingTree build_coding_tree(int n) { return CodingTree(n); }

Bits combine(const Bits& v_l, const Bits& v_r) {
  const std::size_t nl = v_l.size();
  const std::size_t nr = v_r.size();
  if (nr < 1 || (nl != nr && nl != nr + 1))
    throw std::invalid_argument("combine: child lengths must differ by 0 or 1");
  Bits v(nl + nr);
  for (std::size_t i = 0; i < nr; ++i) v[i] = v_l[i] ^ v_r[i];
  if (nl == nr + 1) v[nl - 1] = v_l[nl - 1];
  std::copy(v_r.begin(), v_r.end(), v.begin() + nl);
  return v;
}

std::pair<Bits, Bits> split(const Bits& v) {
  const std::size_t l = v.size();
  if (l < 2) throw std::invalid_argument("split: length must be >= 2");
  const std::size_t nl = (l + 1) / 2;
  const std::size_t nr = l / 2;
  Bits v_r(v.begin() + nl, v.end());
  Bits v_l(nl);
  for (std::size_t i = 0; i < nr; ++i) v_l[i] = v[i] ^ v_r[i];
  if (nl == nr + 1) v_l[nl - 1] = v[nl - 1];
  return {std::move(v_l), std::move(v_r)};
}

std::vector<std::vector<std::uint8_t>> leaf_paths(const CodingTree& tree) {
  std::vector<std::vector<std::uint8_t>> paths(tree.n());
  for (int i = 0; i < tree.n(); ++i) {
    std::vector<std::uint8_t> p;
    int id = tree.leaf_node(i);
    while (tree.node(id).parent != kNoNode) {
      int par = tree.node(id).parent;
      p.push_back(tree.node(par).right == id ? 1 : 0);
      id = par;
    }
    std::reverse(p.begin(), p.end());
    paths[i] = std::move(p);
  }
  return paths;
}

}  // namespace bbt
