#include "bbt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bbt/construction.hpp"

namespace bbt {

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

// Integrand of the Craig-form representation over theta in (0, pi/2).
double psi_integrand(double theta, double z, double rho, double pref) {
  const double s = std::sin(theta);
  const double q = 1.0 - rho * std::sin(2.0 * theta);
  if (z == 0.0) return pref / q;
  if (s <= 0.0) return 0.0;
  const double e = -0.5 * z * z * q / ((1.0 - rho * rho) * s * s);
  if (e < -745.0) return 0.0;
  return pref / q * std::exp(e);
}

double adaptive_simpson(double (*f)(double, double, double, double), double a, double b,
                        double fa, double fm, double fb, double whole, double tol, int depth,
                        double z, double rho, double pref) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm, z, rho, pref);
  const double frm = f(rm, z, rho, pref);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, z, rho, pref) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, z, rho, pref);
}

double integrate_psi(double z, double rho, double pref, double upper, double tol) {
  if (upper <= 0.0) return 0.0;
  // Seed the adaptive pass on a few panels; the integrand has a boundary
  // layer at theta -> 0 where it vanishes to all orders.
  const int panels = 8;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = upper * i / panels;
    const double b = upper * (i + 1) / panels;
    const double m = 0.5 * (a + b);
    const double fa = psi_integrand(a, z, rho, pref);
    const double fm = psi_integrand(m, z, rho, pref);
    const double fb = psi_integrand(b, z, rho, pref);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += adaptive_simpson(psi_integrand, a, b, fa, fm, fb, whole, tol / panels, 40, z,
                              rho, pref);
  }
  return total;
}

}  // namespace

double psi_func(double rho, double x, double y) {
  if (!(std::fabs(rho) < 1.0)) throw std::invalid_argument("psi_func: need |rho| < 1");
  if (x < 0 || y < 0) throw std::invalid_argument("psi_func: need x, y >= 0");
  const double pref = std::sqrt(1.0 - rho * rho);
  const double split = std::atan2(y, x);  // pi/2 when x == 0
  const double tol = 1e-10;
  const double i1 = integrate_psi(x, rho, pref, M_PI / 2.0 - split, tol);
  const double i2 = integrate_psi(y, rho, pref, split, tol);
  return (i1 + i2) / (2.0 * M_PI);
}

double pairwise_correlation(int w_i, int w_j, int w_ij) {
  if (w_i < 1 || w_j < 1)
    throw std::invalid_argument("pairwise_correlation: weights must be >= 1");
  return (w_i + w_j - w_ij) / (2.0 * std::sqrt(static_cast<double>(w_i) * w_j));
}

ComponentChannelStats component_stats(const DecodingSubtree& subtree, double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("component_stats: sigma must be > 0");
  const CodingTree& tree = subtree.tree();
  const auto& nodes = tree.nodes();
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<std::vector<double>> mean(nodes.size());
  std::vector<std::vector<double>> z(nodes.size());
  mean[0].assign(tree.n(), 2.0 / (sigma * sigma));
  z[0].assign(tree.n(), std::exp(-1.0 / (2.0 * sigma * sigma)));

  ComponentChannelStats stats;
  stats.leaves.resize(subtree.decoding_leaves().size());

  // Same propagation rules as the decoder, stopped at decoding leaves.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const int t = subtree.leaf_id_of_node(id);
    if (t != kNoNode) {
      auto& leaf = stats.leaves[t];
      leaf.means = mean[id];
      leaf.z = z[id];
      leaf.sigma_worst = 0.0;
      leaf.sigma_best = inf;
      leaf.z_worst = 0.0;
      for (std::size_t j = 0; j < leaf.means.size(); ++j) {
        const double s = leaf.means[j] > 0 ? std::sqrt(2.0 / leaf.means[j]) : inf;
        leaf.sigma_worst = std::max(leaf.sigma_worst, s);
        leaf.sigma_best = std::min(leaf.sigma_best, s);
        leaf.z_worst = std::max(leaf.z_worst, leaf.z[j]);
      }
      continue;
    }
    const TreeNode& nd = nodes[id];
    const int nl = (nd.length + 1) / 2;
    const int nr = nd.length / 2;
    auto& ml = mean[nd.left];
    auto& mr = mean[nd.right];
    auto& zl = z[nd.left];
    auto& zr = z[nd.right];
    ml.resize(nl);
    mr.resize(nr);
    zl.resize(nl);
    zr.resize(nr);
    for (int i = 0; i < nr; ++i) {
      ml[i] = f_mean(mean[id][i], mean[id][nl + i]);
      mr[i] = mean[id][i] + mean[id][nl + i];
      zl[i] = z[id][i] + z[id][nl + i] - z[id][i] * z[id][nl + i];
      zr[i] = z[id][i] * z[id][nl + i];
    }
    if (nd.length % 2 == 1) {
      ml[nl - 1] = mean[id][nl - 1];
      zl[nl - 1] = z[id][nl - 1];
    }
    stack.push_back(nd.left);
    stack.push_back(nd.right);
  }
  return stats;
}

static double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

BoundReport fer_bounds(const DecodingSubtree& subtree, double sigma) {
  const ComponentChannelStats stats = component_stats(subtree, sigma);
  const auto& leaves = subtree.decoding_leaves();

  BoundReport rep;
  rep.leaf_g_terms.resize(leaves.size(), 0.0);
  rep.leaf_b_terms.resize(leaves.size(), 0.0);
  rep.leaf_lb_terms.resize(leaves.size(), 0.0);

  double g_sum = 0.0;
  double b_sum = 0.0;
  double lb_max = 0.0;
  for (std::size_t t = 0; t < leaves.size(); ++t) {
    const LeafCodebook& cb = leaves[t].codebook;
    const auto& st = stats.leaves[t];
    double g = 0.0, b = 0.0, lb1 = 0.0, lb2 = 0.0;
    for (std::size_t i = 1; i < cb.codewords.size(); ++i) {
      const double sw = std::sqrt(static_cast<double>(cb.weights[i]));
      g += q_func(std::isinf(st.sigma_worst) ? 0.0 : sw / st.sigma_worst);
      b += std::pow(st.z_worst, cb.weights[i]);
      lb1 += q_func(std::isinf(st.sigma_best) ? 0.0 : sw / st.sigma_best);
    }
    for (std::size_t i = 1; i < cb.codewords.size(); ++i) {
      for (std::size_t j = i + 1; j < cb.codewords.size(); ++j) {
        const int w_ij = static_cast<int>(hamming_weight(xor_bits(cb.codewords[i], cb.codewords[j])));
        const double rho = pairwise_correlation(cb.weights[i], cb.weights[j], w_ij);
        const double xi = std::isinf(st.sigma_best)
                              ? 0.0
                              : std::sqrt(static_cast<double>(cb.weights[i])) / st.sigma_best;
        const double xj = std::isinf(st.sigma_best)
                              ? 0.0
                              : std::sqrt(static_cast<double>(cb.weights[j])) / st.sigma_best;
        lb2 += psi_func(rho, xi, xj);
      }
    }
    rep.leaf_g_terms[t] = g;
    rep.leaf_b_terms[t] = b;
    rep.leaf_lb_terms[t] = std::max(0.0, lb1 - lb2);
    g_sum += g;
    b_sum += b;
    lb_max = std::max(lb_max, rep.leaf_lb_terms[t]);
  }
  rep.g_ub = clamp01(g_sum);
  rep.b_ub = clamp01(b_sum);
  rep.lb = clamp01(lb_max);
  return rep;
}

}  // namespace bbt
