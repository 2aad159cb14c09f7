#include "bbt/codec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bbt {

double f_func(double a, double b) {
  const double aa = std::fabs(a);
  const double ab = std::fabs(b);
  const double sign = ((a < 0) == (b < 0)) ? 1.0 : -1.0;
  const double mag = std::min(aa, ab) + std::log1p(std::exp(-(aa + ab))) -
                     std::log1p(std::exp(-std::fabs(aa - ab)));
  return sign * mag;
}

double f_func_min_sum(double a, double b) {
  const double sign = ((a < 0) == (b < 0)) ? 1.0 : -1.0;
  return sign * std::min(std::fabs(a), std::fabs(b));
}

double g_func(double a, double b, std::uint8_t c) { return c ? b - a : b + a; }

double path_metric_increment(double alpha, std::uint8_t beta) {
  const double x = beta ? -alpha : alpha;
  if (x < 0) return -x + std::log1p(std::exp(x));
  return std::log1p(std::exp(-x));
}

static void check_profile_tree(const CodingTree& tree, const RateProfile& profile) {
  validate(profile);
  if (profile.n != tree.n())
    throw std::invalid_argument("profile length does not match the coding tree");
}

Bits encode_leaves(const CodingTree& tree, const Bits& leaf_labels) {
  if (static_cast<int>(leaf_labels.size()) != tree.n())
    throw std::invalid_argument("encode_leaves: need one label per leaf");
  const auto& nodes = tree.nodes();
  // One arena slot range per node, in level order.
  std::vector<int> offset(nodes.size());
  int total = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    offset[i] = total;
    total += nodes[i].length;
  }
  Bits arena(total);
  for (int i = 0; i < tree.n(); ++i) arena[offset[tree.leaf_node(i)]] = leaf_labels[i];
  // Reverse level order: children are ready before their parent.
  for (int id = static_cast<int>(nodes.size()) - 1; id >= 0; --id) {
    const TreeNode& nd = nodes[id];
    if (nd.length < 2) continue;
    const int nl = (nd.length + 1) / 2;
    const int nr = nd.length / 2;
    const std::uint8_t* l = &arena[offset[nd.left]];
    const std::uint8_t* r = &arena[offset[nd.right]];
    std::uint8_t* v = &arena[offset[id]];
    for (int i = 0; i < nr; ++i) v[i] = l[i] ^ r[i];
    if (nl != nr) v[nl - 1] = l[nl - 1];
    std::copy(r, r + nr, v + nl);
  }
  return Bits(arena.begin(), arena.begin() + tree.n());
}

Bits encode(const CodingTree& tree, const RateProfile& profile, const Bits& data) {
  check_profile_tree(tree, profile);
  if (static_cast<int>(data.size()) != profile.k)
    throw std::invalid_argument("encode: data length must equal k");
  Bits w(tree.n(), 0);
  for (int i = 0; i < profile.k; ++i) w[profile.active[i]] = data[i];
  return encode_leaves(tree, w);
}

OpCounter sc_op_count(const CodingTree& tree) {
  OpCounter c;
  for (const auto& nd : tree.nodes()) {
    if (nd.length < 2) continue;
    c.f_ops += nd.length / 2;
    c.g_ops += nd.length / 2;
    c.copy_ops += nd.length % 2;
  }
  return c;
}

// ---- SC --------------------------------------------------------------------

ScDecoder::ScDecoder(const CodingTree& tree, const RateProfile& profile, bool min_sum)
    : tree_(&tree), active_(profile.active_mask()), min_sum_(min_sum) {
  check_profile_tree(tree, profile);
  const int depths = tree.height() + 1;
  llr_.resize(depths);
  hbe_.resize(depths);
  left_hbe_.resize(depths);
  data_.reserve(profile.k);
}

const Bits& ScDecoder::decode(const std::vector<double>& channel_llrs) {
  if (static_cast<int>(channel_llrs.size()) != tree_->n())
    throw std::invalid_argument("sc_decode: llr length must equal n");
  llr_[0].assign(channel_llrs.begin(), channel_llrs.end());
  data_.clear();
  ops_ = OpCounter{};
  descend(0);
  return data_;
}

void ScDecoder::descend(int id) {
  const TreeNode& nd = tree_->node(id);
  const int d = nd.depth;
  if (nd.length == 1) {
    std::uint8_t bit = 0;
    if (active_[nd.leaf_index]) {
      bit = llr_[d][0] < 0 ? 1 : 0;
      data_.push_back(bit);
    }
    hbe_[d].assign(1, bit);
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

// ---- SCL -------------------------------------------------------------------

SclDecoder::SclDecoder(const CodingTree& tree, const RateProfile& profile, int list_size,
                       bool min_sum)
    : tree_(&tree),
      active_(profile.active_mask()),
      list_size_(list_size),
      k_(profile.k),
      min_sum_(min_sum) {
  check_profile_tree(tree, profile);
  if (list_size < 1) throw std::invalid_argument("scl_decode: list size must be >= 1");
  pool_.resize(2 * static_cast<std::size_t>(list_size));
  const int depths = tree.height() + 1;
  for (auto& p : pool_) {
    p.llr.resize(depths);
    p.hbe.resize(depths);
    p.left_hbe.resize(depths);
    p.data.reserve(profile.k);
  }
}

void SclDecoder::run(const std::vector<double>& channel_llrs) {
  if (static_cast<int>(channel_llrs.size()) != tree_->n())
    throw std::invalid_argument("scl_decode: llr length must equal n");
  cur_.assign(1, 0);
  free_.clear();
  for (int i = static_cast<int>(pool_.size()) - 1; i >= 1; --i) free_.push_back(i);
  pool_[0].llr[0].assign(channel_llrs.begin(), channel_llrs.end());
  pool_[0].data.clear();
  pool_[0].metric = 0.0;
  ops_ = OpCounter{};
  descend(0);
}

const Bits& SclDecoder::decode(const std::vector<double>& channel_llrs) {
  run(channel_llrs);
  return pool_[ranked_paths().front()].data;
}

SclDecoder::CaResult SclDecoder::decode_crc(const std::vector<double>& channel_llrs,
                                            const CrcConfig& crc) {
  if (k_ <= crc.length)
    throw std::invalid_argument("ca_scl_decode: profile must carry data + CRC bits");
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

std::vector<int> SclDecoder::ranked_paths() const {
  std::vector<int> order(cur_);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pool_[a].metric < pool_[b].metric;
  });
  return order;
}

void SclDecoder::descend(int id) {
  const TreeNode& nd = tree_->node(id);
  const int d = nd.depth;
  if (nd.length == 1) {
    if (active_[nd.leaf_index]) {
      split_at_active_leaf(d);
    } else {
      for (int slot : cur_) {
        Path& p = pool_[slot];
        p.metric += path_metric_increment(p.llr[d][0], 0);
        p.hbe[d].assign(1, 0);
      }
    }
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

void SclDecoder::split_at_active_leaf(int depth) {
  struct Candidate {
    int parent_slot;
    std::uint8_t bit;
    double metric;
  };
  std::vector<Candidate> cands;
  cands.reserve(2 * cur_.size());
  for (int slot : cur_) {
    const Path& p = pool_[slot];
    const double alpha = p.llr[depth][0];
    cands.push_back({slot, 0, p.metric + path_metric_increment(alpha, 0)});
    cands.push_back({slot, 1, p.metric + path_metric_increment(alpha, 1)});
  }
  const int keep = std::min<int>(list_size_, static_cast<int>(cands.size()));
  // Stable: equal metrics resolve by list order, then bit value.
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.metric < b.metric; });
  cands.resize(keep);

  // First survivor of each parent keeps the parent's storage; later survivors
  // of the same parent copy it before any survivor mutates the parent.
  // Parents with no survivor are freed.
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
    // Only depths 0..depth are live at a leaf; deeper slots get rewritten
    // before any read.
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
    p.hbe[depth].assign(1, cands[i].bit);
    p.data.push_back(cands[i].bit);
  }
  for (int slot : cur_)
    if (!parent_used[slot]) free_.push_back(slot);
  cur_.assign(target.begin(), target.end());
}

// ---- free-function wrappers -------------------------------------------------

Bits sc_decode(const CodingTree& tree, const RateProfile& profile,
               const std::vector<double>& channel_llrs, OpCounter* counter) {
  ScDecoder dec(tree, profile);
  Bits out = dec.decode(channel_llrs);
  if (counter) *counter = dec.ops();
  return out;
}

Bits scl_decode(const CodingTree& tree, const RateProfile& profile,
                const std::vector<double>& channel_llrs, int list_size, OpCounter* counter) {
  SclDecoder dec(tree, profile, list_size);
  Bits out = dec.decode(channel_llrs);
  if (counter) *counter = dec.ops();
  return out;
}

SclDecoder::CaResult ca_scl_decode(const CodingTree& tree, const RateProfile& profile,
                                   const std::vector<double>& channel_llrs, int list_size,
                                   const CrcConfig& crc, OpCounter* counter) {
  SclDecoder dec(tree, profile, list_size);
  auto out = dec.decode_crc(channel_llrs, crc);
  if (counter) *counter = dec.ops();
  return out;
}

}  // namespace bbt
