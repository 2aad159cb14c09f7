// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected to run from a Release build; the Monte-Carlo criteria
// take minutes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bbt/bounds.hpp"
#include "bbt/channel.hpp"
#include "bbt/codec.hpp"
#include "bbt/coding_tree.hpp"
#include "bbt/construction.hpp"
#include "bbt/generator_matrix.hpp"
#include "bbt/simulation.hpp"
#include "bbt/subtree.hpp"
#include "oracles.hpp"

using bbt::Bits;
using bbt::CodingTree;

namespace {

struct Check {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

double binom(int n, int r) {
  double v = 1.0;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

Bits rand_data_bits(std::mt19937_64& rng, int k) {
  Bits d(k);
  for (auto& b : d) b = static_cast<std::uint8_t>(rng() & 1);
  return d;
}

std::vector<double> noisy_llrs(std::mt19937_64& rng, const Bits& cw, double sigma) {
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> llr(cw.size());
  for (std::size_t i = 0; i < cw.size(); ++i)
    llr[i] = 2.0 * ((cw[i] ? -1.0 : 1.0) + noise(rng)) / (sigma * sigma);
  return llr;
}

// --- criterion 1: generator matrix G9 ---------------------------------------
bool check_g9(std::string& detail) {
  const char* rows[] = {"100000000", "110000000", "101000000", "100100000", "110110000",
                        "100001000", "110001100", "101001010", "111101111"};
  const auto g = bbt::generator_matrix(9);
  for (int i = 0; i < 9; ++i) {
    if (g.rows[i] != bbt::parse_bits(rows[i])) {
      detail = "row " + std::to_string(i) + " is " + bbt::to_bit_string(g.rows[i]) +
               ", expected " + rows[i];
      return false;
    }
  }
  detail = "all 81 entries match";
  return true;
}

// --- criterion 2: worked encoding example -----------------------------------
bool check_worked_example(std::string& detail) {
  const CodingTree tree(6);
  bbt::RateProfile all;
  all.n = 6;
  all.k = 6;
  all.active = {0, 1, 2, 3, 4, 5};
  const Bits out = bbt::encode(tree, all, Bits{0, 1, 0, 0, 1, 1});
  detail = "encoder output " + bbt::to_bit_string(out);
  return out == Bits{1, 0, 1, 0, 1, 1};
}

// --- criterion 3: classic polar equivalence ---------------------------------
bool check_classic_polar(std::string& detail) {
  std::mt19937_64 rng(424242);
  long mismatches = 0;
  for (int n = 2; n <= 256; n *= 2) {
    if (bbt::generator_matrix(n).rows != oracle::kronecker_generator(n)) {
      detail = "generator mismatch at n=" + std::to_string(n);
      return false;
    }
    const CodingTree tree(n);
    const auto profile = bbt::construct_pw(n, n / 2);
    const auto mask = profile.active_mask();
    std::vector<std::uint8_t> frozen(n);
    for (int i = 0; i < n; ++i) frozen[i] = !mask[i];
    bbt::ScDecoder dec(tree, profile);
    const double sigma = bbt::sigma_from_ebn0(1.5, 0.5);
    for (int rep = 0; rep < 10000; ++rep) {
      const Bits data = rand_data_bits(rng, n / 2);
      const Bits cw = bbt::encode(tree, profile, data);
      if (cw != oracle::polar_transform([&] {
            Bits w(n, 0);
            for (int i = 0; i < n / 2; ++i) w[profile.active[i]] = data[i];
            return w;
          }())) {
        detail = "encoder/kronecker mismatch at n=" + std::to_string(n);
        return false;
      }
      const auto llr = noisy_llrs(rng, cw, sigma);
      const Bits got = dec.decode(llr);
      const Bits u = oracle::butterfly_sc(llr, frozen);
      Bits expect;
      for (int i = 0; i < n; ++i)
        if (mask[i]) expect.push_back(u[i]);
      mismatches += got != expect;
    }
  }
  detail = "n in {2..256}, 10^4 noisy frames each: " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// --- criterion 4: Table I op counts ------------------------------------------
bool check_op_counts(std::string& detail) {
  std::ostringstream os;
  bool ok = true;

  const CodingTree t384(384);
  for (auto method : {bbt::Method::Pw, bbt::Method::Ga, bbt::Method::Mhw}) {
    const auto profile = bbt::construct(method, 384, 192, 3.0, 0.5);
    bbt::OpCounter ops;
    bbt::sc_decode(t384, profile, std::vector<double>(384, 1.0), &ops);
    if (ops.total() != 3328) {
      os << "SC(" << bbt::method_name(method) << ") counted " << ops.total() << " != 3328; ";
      ok = false;
    }
  }

  const int expected[3][3] = {{1965, 2586, 3023}, {1674, 2322, 2778}, {1602, 2148, 2490}};
  const int ks[3] = {96, 192, 288};
  for (int ti = 0; ti < 3; ++ti) {
    for (int ki = 0; ki < 3; ++ki) {
      const auto profile = bbt::construct_pw(384, ks[ki]);
      const bbt::DecodingSubtree sub(t384, profile, ti + 1);
      const auto got = bbt::llr_op_count(sub).total();
      if (got != static_cast<std::uint64_t>(expected[ti][ki])) {
        os << "PSC tau=" << (ti + 1) << " K=" << ks[ki] << " counted " << got << " != "
           << expected[ti][ki] << " (profile:";
        for (int a : profile.active) os << ' ' << a;
        os << "); ";
        ok = false;
      }
    }
  }

  const auto ops768 = bbt::sc_op_count(CodingTree(768));
  if (ops768.total() >= 7680) {
    os << "SC count for n=768 is " << ops768.total() << ", not < 7680; ";
    ok = false;
  }
  if (ok) {
    os << "SC(384)=3328 for all constructions; PSC matches Table I at all nine (tau, R); "
       << "SC(768)=" << ops768.total() << " < 7680";
  }
  detail = os.str();
  return ok;
}

// --- criterion 5: PSC(tau=1) bit-identical to SC ------------------------------
bool check_psc_sc_equivalence(std::string& detail) {
  std::mt19937_64 rng(777);
  long frames_total = 0, mismatches = 0;
  for (int n : {6, 96, 384}) {
    const CodingTree tree(n);
    for (double rate : {0.25, 0.5, 0.75}) {
      const int k = std::max(1, static_cast<int>(std::lround(n * rate)));
      const auto profile = bbt::construct_pw(n, k);
      const bbt::DecodingSubtree sub(tree, profile, 1);
      bbt::ScDecoder sc(tree, profile);
      bbt::PscDecoder psc(sub);
      const double sigma = bbt::sigma_from_ebn0(2.0, rate);
      const int frames = 34000;
      for (int rep = 0; rep < frames; ++rep) {
        const Bits data = rand_data_bits(rng, k);
        const auto llr = noisy_llrs(rng, bbt::encode(tree, profile, data), sigma);
        mismatches += sc.decode(llr) != psc.decode(llr);
      }
      frames_total += frames;
    }
  }
  detail = std::to_string(frames_total) + " frames over n in {6,96,384}, R in {1/4,1/2,3/4}: " +
           std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// --- criterion 6: exhaustive ML equivalence ----------------------------------
bool check_ml(std::string& detail) {
  std::mt19937_64 rng(31337);
  struct Cfg {
    int n, k, frames;
    bbt::Method method;
  };
  const Cfg cfgs[] = {{24, 10, 10000, bbt::Method::Pw},
                      {20, 8, 4000, bbt::Method::Ga},
                      {17, 6, 4000, bbt::Method::Mhw}};
  long mismatches = 0, frames_total = 0;
  for (const auto& c : cfgs) {
    const CodingTree tree(c.n);
    const auto profile =
        bbt::construct(c.method, c.n, c.k, 3.0, static_cast<double>(c.k) / c.n);
    const bbt::DecodingSubtree sub(tree, profile, c.k);  // tau >= k: whole-code ML
    bbt::PscDecoder psc(sub);
    const oracle::BruteForceMl ml(bbt::generator_matrix(c.n).rows, profile.active);
    const double sigma = bbt::sigma_from_ebn0(1.0, static_cast<double>(c.k) / c.n);
    for (int rep = 0; rep < c.frames; ++rep) {
      const Bits data = rand_data_bits(rng, c.k);
      const auto llr = noisy_llrs(rng, bbt::encode(tree, profile, data), sigma);
      mismatches += psc.decode(llr) != ml.decode(llr);
      ++frames_total;
    }
  }
  detail = std::to_string(frames_total) + " frames against brute-force ML: " +
           std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// --- criterion 7: bound sandwich ---------------------------------------------
bool check_bound_sandwich(std::string& detail) {
  const CodingTree tree(384);
  const auto profile = bbt::construct_pw(384, 192);
  const bbt::DecodingSubtree sub(tree, profile, 1);

  std::ostringstream os;
  bool ok = true;
  for (double ebn0 : {2.0, 3.0}) {
    const double sigma = bbt::sigma_from_ebn0(ebn0, 0.5);
    const auto rep = bbt::fer_bounds(sub, sigma);

    bbt::SimConfig cfg;
    cfg.n = 384;
    cfg.k = 192;
    cfg.construction = bbt::Method::Pw;
    cfg.decoder = bbt::DecoderKind::Psc;
    cfg.tau = 1;
    cfg.ebn0_db = {ebn0};
    cfg.min_frame_errors = 100;
    cfg.max_trials = 2'000'000;
    cfg.seed = 90210;
    const auto sim = bbt::run_simulation(cfg);
    const double fer = sim.points[0].fer;
    const double se = std::sqrt(fer * (1.0 - fer) / sim.points[0].trials);

    const bool sandwich = (rep.lb - 3.0 * se <= fer) && (fer <= rep.g_ub + 3.0 * se);
    const bool b_looser = rep.b_ub >= rep.g_ub;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%.1f dB: lb=%.4g fer=%.4g (%lld err/%lld trials) g_ub=%.4g b_ub=%.4g%s; ",
                  ebn0, rep.lb, fer, static_cast<long long>(sim.points[0].frame_errors),
                  static_cast<long long>(sim.points[0].trials), rep.g_ub, rep.b_ub,
                  (sandwich && b_looser) ? "" : " VIOLATION");
    os << buf;
    ok = ok && sandwich && b_looser;
  }
  detail = os.str();
  return ok;
}

// --- criterion 8: list-decoding sanity ----------------------------------------
bool check_list_sanity(std::string& detail) {
  // Distinct seeds per decoder so the 2-SE comparison is between independent
  // estimates rather than a paired replay.
  auto run = [](bbt::DecoderKind kind, int tau, std::uint64_t seed) {
    bbt::SimConfig cfg;
    cfg.n = 384;
    cfg.k = 192;
    cfg.construction = bbt::Method::Pw;
    cfg.decoder = kind;
    cfg.list_size = 8;
    cfg.tau = tau;
    cfg.ebn0_db = {2.5};
    cfg.min_frame_errors = 100;
    cfg.max_trials = 400'000;
    cfg.seed = seed;
    return bbt::run_simulation(cfg).points[0];
  };

  const auto sc = run(bbt::DecoderKind::Sc, 0, 5150);
  const auto scl = run(bbt::DecoderKind::Scl, 0, 5151);
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "fer(sc)=%.4g fer(scl8)=%.4g", sc.fer, scl.fer);
  os << buf;
  bool ok = scl.fer <= sc.fer;
  const double se_scl = std::sqrt(scl.fer * (1.0 - scl.fer) / scl.trials);
  for (int tau : {1, 2, 3}) {
    const auto pscl = run(bbt::DecoderKind::Pscl, tau, 5151 + tau);
    const double se = std::sqrt(pscl.fer * (1.0 - pscl.fer) / pscl.trials);
    const double gap = std::fabs(pscl.fer - scl.fer);
    const double tol = 2.0 * std::sqrt(se * se + se_scl * se_scl);
    std::snprintf(buf, sizeof buf, " fer(pscl8,tau=%d)=%.4g (|gap|=%.2g tol=%.2g)", tau,
                  pscl.fer, gap, tol);
    os << buf;
    ok = ok && gap <= tol;
  }
  detail = os.str();
  return ok;
}

// --- criterion 9: MWEF validation ----------------------------------------------
bool check_mwef(std::string& detail) {
  for (int ll = 1; ll <= 6; ++ll)
    for (int lr = std::max(1, ll - 1); lr <= ll; ++lr)
      for (int dl = 0; dl <= ll; ++dl)
        for (int dr = 0; dr <= lr; ++dr) {
          const auto counts = oracle::interleaver_weight_counts(ll, dl, dr);
          for (int k = std::max(0, dl + dr - ll); k <= std::min(dl, dr); ++k) {
            const double expected = binom(dl, k) * binom(ll - dl, dr - k);
            if (static_cast<double>(counts[dl + 2 * dr - 2 * k]) != expected) {
              detail = "coefficient mismatch at (ll,lr,dl,dr,k)=(" + std::to_string(ll) + "," +
                       std::to_string(lr) + "," + std::to_string(dl) + "," + std::to_string(dr) +
                       "," + std::to_string(k) + ")";
              return false;
            }
          }
        }

  const CodingTree t8(8);
  const CodingTree t6(6);
  const struct {
    const CodingTree* tree;
    int leaf, d;
    double b;
  } cases[] = {{&t8, 0, 1, 8.0}, {&t8, 7, 8, 1.0}, {&t6, 2, 2, 4.0}};
  for (const auto& c : cases) {
    const auto m = bbt::mwef_leaf(*c.tree, c.leaf);
    if (m.d_min != c.d || std::fabs(m.b - c.b) > 1e-9) {
      detail = "mwef_leaf(n=" + std::to_string(c.tree->n()) + ", leaf " + std::to_string(c.leaf) +
               ") = (" + std::to_string(m.d_min) + ", " + std::to_string(m.b) + ")";
      return false;
    }
  }
  detail = "hypergeometric law exact for l_l <= 6; hand MWEF values match";
  return true;
}

// --- criterion 10: numerical primitives ----------------------------------------
bool check_numerics(std::string& detail) {
  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> u(-40.0, 40.0);
  double worst_f = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double a = u(rng), b = u(rng);
    worst_f = std::max(worst_f, std::fabs(bbt::f_func(a, b) - oracle::direct_f(a, b)));
  }

  double worst_psi = 0.0;
  for (double x : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0})
    for (double y : {0.25, 0.75, 1.25, 2.0, 2.75})
      worst_psi = std::max(worst_psi,
                           std::fabs(bbt::psi_func(0.0, x, y) - bbt::q_func(x) * bbt::q_func(y)));

  double worst_q = 0.0;
  for (double x = -6.0; x <= 8.0; x += 0.01) {
    const long double ref = 0.5L * erfcl(static_cast<long double>(x) / std::sqrt(2.0L));
    const double rel = std::fabs(static_cast<double>((bbt::q_func(x) - ref) /
                                                     (ref == 0.0L ? 1.0L : ref)));
    worst_q = std::max(worst_q, rel);
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "max|f-direct|=%.2g (<=1e-9), max|psi-QQ|=%.2g (<=1e-6), "
                "max relerr Q=%.2g (<=1e-10)", worst_f, worst_psi, worst_q);
  detail = buf;
  return worst_f <= 1e-9 && worst_psi <= 1e-6 && worst_q <= 1e-10;
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {1, "generator matrix equals the printed 9x9 instance", check_g9},
      {2, "worked n=6 encoding example", check_worked_example},
      {3, "classic polar equivalence for n = 2..256", check_classic_polar},
      {4, "Table I LLR-operation counts", check_op_counts},
      {5, "PSC(tau=1) bit-identical to SC", check_psc_sc_equivalence},
      {6, "PSC(tau>=k) equals exhaustive ML", check_ml},
      {7, "FER bound sandwich at n=384, R=1/2, tau=1", check_bound_sandwich},
      {8, "list-decoding FER sanity at 2.5 dB", check_list_sanity},
      {9, "MWEF hypergeometric validation", check_mwef},
      {10, "numerical primitives f, psi, Q", check_numerics},
  };

  int failures = 0;
  for (const auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2d] %s  %s (%.1f s)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all %zu criteria passed\n", checks.size());
  return failures;
}
