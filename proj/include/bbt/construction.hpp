#ifndef BBT_CONSTRUCTION_HPP
#define BBT_CONSTRUCTION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bbt/coding_tree.hpp"

namespace bbt {

enum class Method { Ga, Mhw, Pw };

std::string method_name(Method m);
Method method_from_name(const std::string& s);

// Active-leaf index set of a length-n, dimension-k code.
struct RateProfile {
  int n = 0;
  int k = 0;
  Method method = Method::Pw;
  double design_snr_db = 0.0;  // meaningful for GA only
  std::vector<int> active;     // sorted ascending, k distinct indices in [0, n)

  std::vector<std::uint8_t> active_mask() const;
};

void validate(const RateProfile& p);

// JSON round trip, schema {n, k, method, design_snr_db?, active:[...]}.
std::string profile_to_json(const RateProfile& p);
RateProfile profile_from_json(const std::string& json_text);
RateProfile load_profile(std::istream& is);

// ---- Gaussian approximation ----------------------------------------------

// ln phi(x) for the GA reliability functional; phi(0) = 1, phi decreasing.
double phi_ln(double x);
// Inverse of phi_ln (bisection, absolute tolerance 1e-10 on x).
double phi_inv_ln(double t);
// Mean update of the f transform under the Gaussian model.
double f_mean(double a, double b);

// Mean LLR of each leaf when the root positions all start at 2/sigma^2.
std::vector<double> ga_leaf_means(const CodingTree& tree, double sigma);

RateProfile construct_ga(int n, int k, double design_snr_db, double rate_for_sigma);

// ---- Minimum Hamming weight ----------------------------------------------

// Minimum-weight term of a node's weight enumerator: B(d_min) Y^{d_min}.
// The multiplicity is an average over uniform interleavers and may be
// fractional.
struct Mwef {
  int d_min = 1;
  double b = 1.0;
};

Mwef mwef_leaf(const CodingTree& tree, int leaf);

// Full weight spectrum of a parent node from its children's spectra under
// the uniform-interleaver model. Spectra are coefficient vectors indexed by
// weight 0..len.
std::vector<double> wef_convolve(const std::vector<double>& wef_l, int len_l,
                                 const std::vector<double>& wef_r, int len_r);

RateProfile construct_mhw(int n, int k);

// ---- Polarization weight ---------------------------------------------------

struct PwTable {
  std::vector<double> weights;  // per leaf
  double kappa = 0.0;
  int j_max = 0;  // ceil(log2 n) - 1
};

PwTable pw_weights(const CodingTree& tree, double kappa);

inline double pw_kappa() { return 1.189207115002721;  /* 2^(1/4) */ }

RateProfile construct_pw(int n, int k);

RateProfile construct(Method m, int n, int k, double design_snr_db, double rate_for_sigma);

}  // namespace bbt

#endif
