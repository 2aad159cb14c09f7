#ifndef BBT_BOUNDS_HPP
#define BBT_BOUNDS_HPP

#include <vector>

#include "bbt/subtree.hpp"

namespace bbt {

// Gaussian tail Q(x) = P(N(0,1) > x).
double q_func(double x);

// Joint tail P(X > x, Y > y) of a standard bivariate normal with correlation
// rho, by adaptive quadrature of the two-integral (Craig-form) representation.
// Requires |rho| < 1 and x, y >= 0.
double psi_func(double rho, double x, double y);

// rho_ij = (w_i + w_j - w_H(v_i xor v_j)) / (2 sqrt(w_i w_j)).
double pairwise_correlation(int w_i, int w_j, int w_ij);

// Per decoding leaf: GA means per position, equivalent component-channel
// noise extremes, and Bhattacharyya parameters.
struct ComponentChannelStats {
  struct Leaf {
    std::vector<double> means;
    std::vector<double> z;
    double sigma_worst = 0.0;  // max over positions (infinite when a mean is 0)
    double sigma_best = 0.0;   // min over positions
    double z_worst = 0.0;      // max over positions
  };
  std::vector<Leaf> leaves;
};

ComponentChannelStats component_stats(const DecodingSubtree& subtree, double sigma);

struct BoundReport {
  std::vector<double> leaf_g_terms;   // per-leaf GA union terms
  std::vector<double> leaf_b_terms;   // per-leaf Bhattacharyya terms
  std::vector<double> leaf_lb_terms;  // per-leaf Bonferroni terms, clamped at 0
  double g_ub = 0.0;
  double b_ub = 0.0;
  double lb = 0.0;
};

// G-UB / B-UB / LB on the PSC frame error rate; all outputs clamped to [0,1].
BoundReport fer_bounds(const DecodingSubtree& subtree, double sigma);

}  // namespace bbt

#endif
