#include "bbt/construction.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <stdexcept>

#include "bbt/channel.hpp"
#include "json.hpp"

namespace bbt {

std::string method_name(Method m) {
  switch (m) {
    case Method::Ga: return "ga";
    case Method::Mhw: return "mhw";
    case Method::Pw: return "pw";
  }
  return "?";
}

Method method_from_name(const std::string& s) {
  if (s == "ga") return Method::Ga;
  if (s == "mhw") return Method::Mhw;
  if (s == "pw") return Method::Pw;
  throw std::invalid_argument("unknown construction method: " + s);
}

std::vector<std::uint8_t> RateProfile::active_mask() const {
  std::vector<std::uint8_t> mask(n, 0);
  for (int i : active) mask[i] = 1;
  return mask;
}

void validate(const RateProfile& p) {
  if (p.n < 1 || p.k < 0 || p.k > p.n)
    throw std::invalid_argument("profile: need 0 <= k <= n, n >= 1");
  if (static_cast<int>(p.active.size()) != p.k)
    throw std::invalid_argument("profile: |active| != k");
  int prev = -1;
  for (int i : p.active) {
    if (i <= prev || i >= p.n) throw std::invalid_argument("profile: bad active index");
    prev = i;
  }
}

std::string profile_to_json(const RateProfile& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["method"] = method_name(p.method);
  if (p.method == Method::Ga) j["design_snr_db"] = p.design_snr_db;
  j["active"] = p.active;
  return j.dump(2);
}

RateProfile profile_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  RateProfile p;
  p.n = j.at("n").get<int>();
  p.k = j.at("k").get<int>();
  p.method = method_from_name(j.at("method").get<std::string>());
  p.design_snr_db = j.value("design_snr_db", 0.0);
  p.active = j.at("active").get<std::vector<int>>();
  std::sort(p.active.begin(), p.active.end());
  validate(p);
  return p;
}

RateProfile load_profile(std::istream& is) {
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return profile_from_json(text);
}

// Ascending-reliability sort with deterministic ties: the higher leaf index
// wins when scores are equal. Returns the k most reliable indices, sorted.
static std::vector<int> top_k_by_score(const std::vector<double>& score, int k) {
  const int n = static_cast<int>(score.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] < score[b];
    return a < b;
  });
  std::vector<int> active(order.end() - k, order.end());
  std::sort(active.begin(), active.end());
  return active;
}

// ---- Gaussian approximation ----------------------------------------------

// Piecewise fit of phi (Chung's approximation), evaluated in the log domain
// so that deeply polarized means do not underflow.
double phi_ln(double x) {
  if (x <= 0) return 0.0;
  if (x <= 10.0) return std::min(0.0, -0.4527 * std::pow(x, 0.86) + 0.0218);
  return 0.5 * std::log(M_PI / x) - 0.25 * x + std::log1p(-10.0 / (7.0 * x));
}

double phi_inv_ln(double t) {
  if (t >= 0) return 0.0;
  double lo = 0.0;
  double hi = std::max(10.0, -4.0 * t + 50.0);
  while (phi_ln(hi) > t) hi *= 2;  // phi_ln decreases, so grow until bracketed
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    if (phi_ln(mid) > t)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double f_mean(double a, double b) {
  const double la = phi_ln(a);
  const double lb = phi_ln(b);
  // combined phi = pa + pb - pa*pb, in logs
  const double m = std::max(la, lb);
  const double lsum = m + std::log(std::exp(la - m) + std::exp(lb - m));
  const double lphi = lsum + std::log1p(-std::exp(la + lb - lsum));
  return phi_inv_ln(lphi);
}

std::vector<double> ga_leaf_means(const CodingTree& tree, double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("ga_leaf_means: sigma must be > 0");
  const auto& nodes = tree.nodes();
  std::vector<std::vector<double>> mean(nodes.size());
  mean[0].assign(tree.n(), 2.0 / (sigma * sigma));
  std::vector<double> out(tree.n(), 0.0);
  // Level order guarantees parents are processed before children.
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const TreeNode& nd = nodes[id];
    if (nd.length == 1) {
      out[nd.leaf_index] = mean[id][0];
      continue;
    }
    const int nl = (nd.length + 1) / 2;
    const int nr = nd.length / 2;
    auto& ml = mean[nd.left];
    auto& mr = mean[nd.right];
    ml.resize(nl);
    mr.resize(nr);
    const auto& m = mean[id];
    for (int i = 0; i < nr; ++i) {
      ml[i] = f_mean(m[i], m[nl + i]);
      mr[i] = m[i] + m[nl + i];
    }
    if (nd.length % 2 == 1) ml[nl - 1] = m[nl - 1];  // pass-through position
    mean[id].clear();
    mean[id].shrink_to_fit();
  }
  return out;
}

RateProfile construct_ga(int n, int k, double design_snr_db, double rate_for_sigma) {
  if (k > n || k < 0 || n < 1) throw std::invalid_argument("construct_ga: need 0 <= k <= n");
  CodingTree tree(n);
  const double sigma = sigma_from_ebn0(design_snr_db, rate_for_sigma);
  RateProfile p;
  p.n = n;
  p.k = k;
  p.method = Method::Ga;
  p.design_snr_db = design_snr_db;
  p.active = top_k_by_score(ga_leaf_means(tree, sigma), k);
  return p;
}

// ---- Minimum Hamming weight ----------------------------------------------

static double binom(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  double v = 1.0;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

Mwef mwef_leaf(const CodingTree& tree, int leaf) {
  if (leaf < 0 || leaf >= tree.n()) throw std::invalid_argument("mwef_leaf: bad leaf index");
  Mwef m;  // the leaf itself starts as 1 * Y^1
  int id = tree.leaf_node(leaf);
  // Multiplicities can overflow double for very long codes; accumulate the
  // left-step factors in logs and exponentiate once at the end.
  double log_b = 0.0;
  while (tree.node(id).parent != kNoNode) {
    const int par = tree.node(id).parent;
    if (tree.node(par).right == id) {
      m.d_min *= 2;
    } else {
      const int ll = tree.node(id).length;
      const int lr = tree.node(tree.node(par).right).length;
      double s = 0.0;
      for (int dr = 0; dr <= std::min(m.d_min, lr); ++dr)
        s += binom(lr, dr) * binom(m.d_min, dr) / binom(ll, dr);
      log_b += std::log(s);
    }
    id = par;
  }
  m.b = std::exp(log_b);
  return m;
}

std::vector<double> wef_convolve(const std::vector<double>& wef_l, int len_l,
                                 const std::vector<double>& wef_r, int len_r) {
  if (static_cast<int>(wef_l.size()) != len_l + 1 ||
      static_cast<int>(wef_r.size()) != len_r + 1)
    throw std::invalid_argument("wef_convolve: spectrum length must be len + 1");
  std::vector<double> out(len_l + len_r + 1, 0.0);
  for (int dl = 0; dl <= len_l; ++dl) {
    if (wef_l[dl] == 0.0) continue;
    for (int dr = 0; dr <= len_r; ++dr) {
      if (wef_r[dr] == 0.0) continue;
      const int k_lo = std::max(0, dl + dr - len_l);
      const int k_hi = std::min(dl, dr);
      for (int k = k_lo; k <= k_hi; ++k) {
        const double p = binom(dl, k) * binom(len_l - dl, dr - k) / binom(len_l, dr);
        out[dl + 2 * dr - 2 * k] += wef_l[dl] * wef_r[dr] * p;
      }
    }
  }
  return out;
}

RateProfile construct_mhw(int n, int k) {
  if (k > n || k < 0 || n < 1) throw std::invalid_argument("construct_mhw: need 0 <= k <= n");
  CodingTree tree(n);
  std::vector<Mwef> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = mwef_leaf(tree, i);
  // Ascending reliability: d_min ascending, then multiplicity descending,
  // then leaf index ascending. The last k entries form the active set.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (vals[a].d_min != vals[b].d_min) return vals[a].d_min < vals[b].d_min;
    if (vals[a].b != vals[b].b) return vals[a].b > vals[b].b;
    return a < b;
  });
  RateProfile p;
  p.n = n;
  p.k = k;
  p.method = Method::Mhw;
  p.active.assign(order.end() - k, order.end());
  std::sort(p.active.begin(), p.active.end());
  return p;
}

// ---- Polarization weight ---------------------------------------------------

PwTable pw_weights(const CodingTree& tree, double kappa) {
  if (!(kappa > 0)) throw std::invalid_argument("pw_weights: kappa must be > 0");
  PwTable t;
  t.kappa = kappa;
  t.j_max = tree.height() - 1;
  t.weights.assign(tree.n(), 0.0);
  const auto paths = leaf_paths(tree);
  for (int i = 0; i < tree.n(); ++i) {
    double w = 0.0;
    for (std::size_t j = 0; j < paths[i].size(); ++j)
      if (paths[i][j]) w += std::pow(kappa, t.j_max - static_cast<int>(j));
    t.weights[i] = w;
  }
  return t;
}

RateProfile construct_pw(int n, int k) {
  if (k > n || k < 0 || n < 1) throw std::invalid_argument("construct_pw: need 0 <= k <= n");
  CodingTree tree(n);
  RateProfile p;
  p.n = n;
  p.k = k;
  p.method = Method::Pw;
  p.active = top_k_by_score(pw_weights(tree, pw_kappa()).weights, k);
  return p;
}

RateProfile construct(Method m, int n, int k, double design_snr_db, double rate_for_sigma) {
  switch (m) {
    case Method::Ga: return construct_ga(n, k, design_snr_db, rate_for_sigma);
    case Method::Mhw: return construct_mhw(n, k);
    case Method::Pw: return construct_pw(n, k);
  }
  throw std::invalid_argument("construct: bad method");
}

}  // namespace bbt
