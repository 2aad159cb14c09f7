#include "bbt/subtree.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbt {

// Label of `id` given leaf labels of the sub-tree rooted at base offset.
static Bits node_label(const CodingTree& tree, int id, int base, const Bits& labels) {
  const TreeNode& x = tree.node(id);
  if (x.length == 1) return Bits{labels[x.leaf_begin - base]};
  return combine(node_label(tree, x.left, base, labels),
                 node_label(tree, x.right, base, labels));
}

static LeafCodebook build_codebook(const CodingTree& tree, int node,
                                   const std::vector<int>& active_leaves) {
  const TreeNode& nd = tree.node(node);
  LeafCodebook cb;
  cb.length = nd.length;
  cb.dim = static_cast<int>(active_leaves.size());
  if (cb.dim > 25)
    throw std::invalid_argument("codebook enumeration infeasible: dimension > 25");
  cb.codewords.reserve(std::size_t{1} << cb.dim);
  cb.weights.reserve(std::size_t{1} << cb.dim);

  Bits labels(nd.length, 0);
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << cb.dim); ++pattern) {
    std::fill(labels.begin(), labels.end(), 0);
    for (int j = 0; j < cb.dim; ++j)
      labels[active_leaves[j] - nd.leaf_begin] =
          static_cast<std::uint8_t>((pattern >> (cb.dim - 1 - j)) & 1);
    Bits cw = node_label(tree, node, nd.leaf_begin, labels);
    cb.weights.push_back(static_cast<int>(hamming_weight(cw)));
    cb.codewords.push_back(std::move(cw));
  }
  return cb;
}

DecodingSubtree::DecodingSubtree(const CodingTree& tree, const RateProfile& profile, int tau)
    : tree_(tree), profile_(profile), tau_(tau) {
  validate(profile);
  if (profile.n != tree.n())
    throw std::invalid_argument("extract_subtree: profile does not match the tree");
  if (tau < 1) throw std::invalid_argument("extract_subtree: tau must be >= 1");

  const auto& nodes = tree_.nodes();
  const auto mask = profile_.active_mask();
  dim_.assign(nodes.size(), 0);
  for (int id = static_cast<int>(nodes.size()) - 1; id >= 0; --id) {
    if (nodes[id].length == 1)
      dim_[id] = mask[nodes[id].leaf_index];
    else
      dim_[id] = dim_[nodes[id].left] + dim_[nodes[id].right];
  }

  node_to_leaf_.assign(nodes.size(), kNoNode);
  // Left-to-right maximal nodes with dim <= tau; the parentless root counts
  // as maximal when its own dimension is small enough.
  std::vector<int> stack{0};
  std::vector<int> found;
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (dim_[id] <= tau_) {
      found.push_back(id);
      continue;
    }
    stack.push_back(nodes[id].right);
    stack.push_back(nodes[id].left);
  }
  leaves_.reserve(found.size());
  for (int id : found) {
    DecodingLeaf dl;
    dl.node = id;
    dl.length = nodes[id].length;
    dl.dim = dim_[id];
    dl.leaf_begin = nodes[id].leaf_begin;
    for (int leaf = dl.leaf_begin; leaf < dl.leaf_begin + dl.length; ++leaf)
      if (mask[leaf]) dl.active_leaves.push_back(leaf);
    dl.codebook = build_codebook(tree_, id, dl.active_leaves);
    node_to_leaf_[id] = static_cast<int>(leaves_.size());
    leaves_.push_back(std::move(dl));
  }
}

DecodingSubtree extract_subtree(const CodingTree& tree, const RateProfile& profile, int tau) {
  return DecodingSubtree(tree, profile, tau);
}

LeafCodebook enumerate_codebook(const DecodingSubtree& subtree, int t) {
  const auto& leaves = subtree.decoding_leaves();
  if (t < 0 || t >= static_cast<int>(leaves.size()))
    throw std::invalid_argument("enumerate_codebook: bad decoding-leaf index");
  return leaves[t].codebook;
}

OpCounter llr_op_count(const DecodingSubtree& subtree) {
  OpCounter c;
  const auto& nodes = subtree.tree().nodes();
  // Sub-tree internal nodes are exactly the nodes with dimension above tau.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (subtree.leaf_id_of_node(id) != kNoNode) continue;
    c.f_ops += nodes[id].length / 2;
    c.g_ops += nodes[id].length / 2;
    c.copy_ops += nodes[id].length % 2;
    stack.push_back(nodes[id].left);
    stack.push_back(nodes[id].right);
  }
  return c;
}

// ---- PSC -------------------------------------------------------------------

PscDecoder::PscDecoder(const DecodingSubtree& subtree, bool min_sum)
    : sub_(&subtree), min_sum_(min_sum) {
  const int depths = subtree.tree().height() + 1;
  llr_.resize(depths);
  hbe_.resize(depths);
  left_hbe_.resize(depths);
  data_.reserve(subtree.profile().k);
}

const Bits& PscDecoder::decode(const std::vector<double>& channel_llrs) {
  if (static_cast<int>(channel_llrs.size()) != sub_->tree().n())
    throw std::invalid_argument("psc_decode: llr length must equal n");
  llr_[0].assign(channel_llrs.begin(), channel_llrs.end());
  data_.clear();
  ops_ = OpCounter{};
  descend(0);
  return data_;
}

void PscDecoder::descend(int id) {
  const CodingTree& tree = sub_->tree();
  const TreeNode& nd = tree.node(id);
  const int d = nd.depth;

  const int t = sub_->leaf_id_of_node(id);
  if (t != kNoNode) {
    const DecodingLeaf& leaf = sub_->decoding_leaves()[t];
    const LeafCodebook& cb = leaf.codebook;
    const auto& alpha = llr_[d];
    std::size_t best = 0;
    double best_corr = 0.0;
    for (std::size_t i = 0; i < cb.codewords.size(); ++i) {
      double corr = 0.0;
      const Bits& cw = cb.codewords[i];
      for (int j = 0; j < leaf.length; ++j) corr += cw[j] ? -alpha[j] : alpha[j];
      if (i == 0 || corr > best_corr) {
        best = i;
        best_corr = corr;
      }
    }
    hbe_[d] = cb.codewords[best];
    for (int j = 0; j < leaf.dim; ++j)
      data_.push_back(static_cast<std::uint8_t>((best >> (leaf.dim - 1 - j)) & 1));
    return;
  }

  const int nl = (nd.length + 1) / 2;
  const int nr = nd.length / 2;
  const auto& m = llr_[d];
  auto& child = llr_[d + 1];
  child.resize(nl);
  if (min_sum_)
    for (int i = 0; i < nr; ++i) child[i] = f_func_min_sum(m[i], m[nl + i]);
  else
    for (int i = 0; i < nr; ++i) child[i] = f_func(m[i], m[nl + i]);
  ops_.f_ops += nr;
  if (nl != nr) {
    child[nl - 1] = m[nl - 1];
    ++ops_.copy_ops;
  }
  descend(nd.left);

  left_hbe_[d + 1].swap(hbe_[d + 1]);
  const auto& bl = left_hbe_[d + 1];
  child.resize(nr);
  for (int i = 0; i < nr; ++i) child[i] = g_func(m[i], m[nl + i], bl[i]);
  ops_.g_ops += nr;
  descend(nd.right);

  const auto& br = hbe_[d + 1];
  auto& out = hbe_[d];
  out.resize(nd.length);
  for (int i = 0; i < nr; ++i) out[i] = bl[i] ^ br[i];
  if (nl != nr) out[nl - 1] = bl[nl - 1];
  std::copy(br.begin(), br.end(), out.begin() + nl);
}

// ---- PSCL ------------------------------------------------------------------

PsclDecoder::PsclDecoder(const DecodingSubtree& subtree, int list_size, bool min_sum)
    : sub_(&subtree), list_size_(list_size), min_sum_(min_sum) {
  if (list_size < 1) throw std::invalid_argument("pscl_decode: list size must be >= 1");
  // At most list_size survivors plus their in-place parents are live at once.
  pool_.resize(2 * static_cast<std::size_t>(list_size));
  const int depths = subtree.tree().height() + 1;
  for (auto& p : pool_) {
    p.llr.resize(depths);
    p.hbe.resize(depths);
    p.left_hbe.resize(depths);
    p.data.reserve(subtree.profile().k);
  }
}

void PsclDecoder::run(const std::vector<double>& channel_llrs) {
  if (static_cast<int>(channel_llrs.size()) != sub_->tree().n())
    throw std::invalid_argument("pscl_decode: llr length must equal n");
  cur_.assign(1, 0);
  free_.clear();
  for (int i = static_cast<int>(pool_.size()) - 1; i >= 1; --i) free_.push_back(i);
  pool_[0].llr[0].assign(channel_llrs.begin(), channel_llrs.end());
  pool_[0].data.clear();
  pool_[0].metric = 0.0;
  ops_ = OpCounter{};
  descend(0);
}

const Bits& PsclDecoder::decode(const std::vector<double>& channel_llrs) {
  run(channel_llrs);
  return pool_[ranked_paths().front()].data;
}

double PsclDecoder::best_metric() const { return pool_[ranked_paths().front()].metric; }

SclDecoder::CaResult PsclDecoder::decode_crc(const std::vector<double>& channel_llrs,
                                             const CrcConfig& crc) {
  if (sub_->profile().k <= crc.length)
    throw std::invalid_argument("ca_pscl_decode: profile must carry data + CRC bits");
  run(channel_llrs);
  const auto ranked = ranked_paths();
  for (int slot : ranked) {
    if (crc_check(pool_[slot].data, crc)) {
      const Bits& d = pool_[slot].data;
      return {Bits(d.begin(), d.end() - crc.length), true};
    }
  }
  const Bits& d = pool_[ranked.front()].data;
  return {Bits(d.begin(), d.end() - crc.length), false};
}

std::vector<int> PsclDecoder::ranked_paths() const {
  std::vector<int> order(cur_);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pool_[a].metric < pool_[b].metric;
  });
  return order;
}

void PsclDecoder::descend(int id) {
  const CodingTree& tree = sub_->tree();
  const TreeNode& nd = tree.node(id);
  const int d = nd.depth;

  const int t = sub_->leaf_id_of_node(id);
  if (t != kNoNode) {
    split_at_decoding_leaf(sub_->decoding_leaves()[t], d);
    return;
  }

  const int nl = (nd.length + 1) / 2;
  const int nr = nd.length / 2;
  for (int slot : cur_) {
    Path& p = pool_[slot];
    const auto& m = p.llr[d];
    auto& child = p.llr[d + 1];
    child.resize(nl);
    if (min_sum_)
      for (int i = 0; i < nr; ++i) child[i] = f_func_min_sum(m[i], m[nl + i]);
    else
      for (int i = 0; i < nr; ++i) child[i] = f_func(m[i], m[nl + i]);
    ops_.f_ops += nr;
    if (nl != nr) {
      child[nl - 1] = m[nl - 1];
      ++ops_.copy_ops;
    }
  }
  descend(nd.left);

  for (int slot : cur_) {
    Path& p = pool_[slot];
    p.left_hbe[d + 1].swap(p.hbe[d + 1]);
    const auto& m = p.llr[d];
    const auto& bl = p.left_hbe[d + 1];
    auto& child = p.llr[d + 1];
    child.resize(nr);
    for (int i = 0; i < nr; ++i) child[i] = g_func(m[i], m[nl + i], bl[i]);
    ops_.g_ops += nr;
  }
  descend(nd.right);

  for (int slot : cur_) {
    Path& p = pool_[slot];
    const auto& bl = p.left_hbe[d + 1];
    const auto& br = p.hbe[d + 1];
    auto& out = p.hbe[d];
    out.resize(nd.length);
    for (int i = 0; i < nr; ++i) out[i] = bl[i] ^ br[i];
    if (nl != nr) out[nl - 1] = bl[nl - 1];
    std::copy(br.begin(), br.end(), out.begin() + nl);
  }
}

void PsclDecoder::split_at_decoding_leaf(const DecodingLeaf& leaf, int depth) {
  const LeafCodebook& cb = leaf.codebook;

  if (cb.dim == 0) {
    for (int slot : cur_) {
      Path& p = pool_[slot];
      const auto& alpha = p.llr[depth];
      double inc = 0.0;
      for (int j = 0; j < leaf.length; ++j) inc += path_metric_increment(alpha[j], 0);
      p.metric += inc;
      p.hbe[depth].assign(leaf.length, 0);
    }
    return;
  }

  struct Candidate {
    int parent_slot;
    std::uint32_t pattern;
    double metric;
  };
  std::vector<Candidate> cands;
  cands.reserve(cur_.size() * cb.codewords.size());
  for (int slot : cur_) {
    const Path& p = pool_[slot];
    const auto& alpha = p.llr[depth];
    for (std::uint32_t i = 0; i < cb.codewords.size(); ++i) {
      const Bits& cw = cb.codewords[i];
      double inc = 0.0;
      for (int j = 0; j < leaf.length; ++j) inc += path_metric_increment(alpha[j], cw[j]);
      cands.push_back({slot, i, p.metric + inc});
    }
  }
  const int keep = std::min<int>(list_size_, static_cast<int>(cands.size()));
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.metric < b.metric; });
  cands.resize(keep);

  std::vector<int> target(keep);
  std::vector<std::uint8_t> parent_used(pool_.size(), 0);
  for (int i = 0; i < keep; ++i) {
    const int parent = cands[i].parent_slot;
    if (!parent_used[parent]) {
      parent_used[parent] = 1;
      target[i] = parent;
      continue;
    }
    const int dst = free_.back();
    free_.pop_back();
    const Path& src = pool_[parent];
    Path& p = pool_[dst];
    for (int dd = 0; dd <= depth; ++dd) {
      p.llr[dd] = src.llr[dd];
      p.left_hbe[dd] = src.left_hbe[dd];
    }
    p.data = src.data;
    target[i] = dst;
  }
  for (int i = 0; i < keep; ++i) {
    Path& p = pool_[target[i]];
    p.metric = cands[i].metric;
    p.hbe[depth] = cb.codewords[cands[i].pattern];
    for (int j = 0; j < cb.dim; ++j)
      p.data.push_back(static_cast<std::uint8_t>((cands[i].pattern >> (cb.dim - 1 - j)) & 1));
  }
  for (int slot : cur_)
    if (!parent_used[slot]) free_.push_back(slot);
  cur_.assign(target.begin(), target.end());
}

// ---- free-function wrappers -------------------------------------------------

Bits psc_decode(const DecodingSubtree& subtree, const std::vector<double>& channel_llrs,
                OpCounter* counter) {
  PscDecoder dec(subtree);
  Bits out = dec.decode(channel_llrs);
  if (counter) *counter = dec.ops();
  return out;
}

Bits pscl_decode(const DecodingSubtree& subtree, const std::vector<double>& channel_llrs,
                 int list_size, OpCounter* counter) {
  PsclDecoder dec(subtree, list_size);
  Bits out = dec.decode(channel_llrs);
  if (counter) *counter = dec.ops();
  return out;
}

SclDecoder::CaResult ca_pscl_decode(const DecodingSubtree& subtree,
                                    const std::vector<double>& channel_llrs, int list_size,
                                    const CrcConfig& crc, OpCounter* counter) {
  PsclDecoder dec(subtree, list_size);
  auto out = dec.decode_crc(channel_llrs, crc);
  if (counter) *counter = dec.ops();
  return out;
}

}  // namespace bbt
