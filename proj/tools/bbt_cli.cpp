// Command-line front end: construction, encoding, decoding, Monte-Carlo
// simulation, FER bounds and op-count analysis for BBT polar codes.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bbt/bounds.hpp"
#include "bbt/channel.hpp"
#include "bbt/codec.hpp"
#include "bbt/coding_tree.hpp"
#include "bbt/construction.hpp"
#include "bbt/crc.hpp"
#include "bbt/generator_matrix.hpp"
#include "bbt/simulation.hpp"
#include "bbt/subtree.hpp"

namespace {

struct ProfileArgs {
  std::string profile_path;
  int n = 0;
  int k = 0;
  std::string construction = "pw";
  double design_snr_db = 3.0;
};

void add_profile_options(CLI::App* cmd, ProfileArgs& a) {
  cmd->add_option("--profile", a.profile_path, "profile JSON file (overrides --n/--k)");
  cmd->add_option("--n", a.n, "code length");
  cmd->add_option("--k", a.k, "code dimension");
  cmd->add_option("--construction", a.construction, "ga|mhw|pw")
      ->check(CLI::IsMember({"ga", "mhw", "pw"}));
  cmd->add_option("--design-snr", a.design_snr_db, "GA design Eb/N0 in dB");
}

bbt::RateProfile resolve_profile(const ProfileArgs& a, int extra_active = 0) {
  if (!a.profile_path.empty()) {
    std::ifstream in(a.profile_path);
    if (!in) throw std::runtime_error("cannot open profile file: " + a.profile_path);
    return bbt::load_profile(in);
  }
  if (a.n < 1 || a.k < 1) throw std::runtime_error("need --profile or both --n and --k");
  const double rate = static_cast<double>(a.k) / a.n;
  return bbt::construct(bbt::method_from_name(a.construction), a.n, a.k + extra_active,
                        a.design_snr_db, rate);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

std::string format_bits(const bbt::Bits& v, const std::string& fmt) {
  return fmt == "hex" ? bbt::to_hex_string(v) : bbt::to_bit_string(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BBT polar coding toolkit"};
  app.require_subcommand(1);

  // construct
  auto* c_construct = app.add_subcommand("construct", "build a rate profile");
  ProfileArgs construct_args;
  std::string construct_out;
  add_profile_options(c_construct, construct_args);
  c_construct->add_option("--out", construct_out, "output file (default stdout)");

  // gen-matrix
  auto* c_gen = app.add_subcommand("gen-matrix", "print the generator matrix");
  int gen_n = 0;
  std::string gen_out;
  c_gen->add_option("--n", gen_n, "code length")->required();
  c_gen->add_option("--out", gen_out, "output file (default stdout)");

  // encode
  auto* c_enc = app.add_subcommand("encode", "encode data bits");
  ProfileArgs enc_args;
  std::string enc_data, enc_fmt = "bin", enc_crc = "none";
  add_profile_options(c_enc, enc_args);
  c_enc->add_option("--data", enc_data, "data bits ('0101...' or 0x...)")->required();
  c_enc->add_option("--format", enc_fmt, "bin|hex output")->check(CLI::IsMember({"bin", "hex"}));
  c_enc->add_option("--crc", enc_crc, "none|11")->check(CLI::IsMember({"none", "11"}));

  // decode
  auto* c_dec = app.add_subcommand("decode", "decode a received word");
  ProfileArgs dec_args;
  std::string dec_llrs, dec_hard, dec_fmt = "bin", dec_crc = "none";
  int dec_list = 1, dec_tau = 0;
  bool dec_psc = false, dec_min_sum = false;
  add_profile_options(c_dec, dec_args);
  c_dec->add_option("--llrs", dec_llrs, "comma-separated channel LLRs");
  c_dec->add_option("--hard", dec_hard, "hard-decision codeword bits");
  c_dec->add_option("--list-size", dec_list, "SCL/PSCL list size");
  c_dec->add_option("--crc", dec_crc, "none|11")->check(CLI::IsMember({"none", "11"}));
  c_dec->add_flag("--psc", dec_psc, "partitioned decoding over the pruned sub-tree");
  c_dec->add_option("--tau", dec_tau, "dimension threshold for --psc");
  c_dec->add_flag("--min-sum", dec_min_sum, "min-sum approximation of the f kernel");
  c_dec->add_option("--format", dec_fmt, "bin|hex output")->check(CLI::IsMember({"bin", "hex"}));

  // simulate
  auto* c_sim = app.add_subcommand("simulate", "Monte-Carlo FER/BER estimation");
  bbt::SimConfig sim;
  std::string sim_construction = "pw", sim_decoder = "sc", sim_crc = "none";
  std::string sim_ebn0, sim_out, sim_fmt = "json";
  c_sim->add_option("--n", sim.n, "code length")->required();
  c_sim->add_option("--k", sim.k, "data bits")->required();
  c_sim->add_option("--construction", sim_construction, "ga|mhw|pw")
      ->check(CLI::IsMember({"ga", "mhw", "pw"}));
  c_sim->add_option("--design-snr", sim.design_snr_db, "GA design Eb/N0 in dB");
  c_sim->add_option("--decoder", sim_decoder, "sc|scl|ca-scl|psc|pscl|ca-pscl")
      ->check(CLI::IsMember({"sc", "scl", "ca-scl", "psc", "pscl", "ca-pscl"}));
  c_sim->add_option("--list-size", sim.list_size, "list size");
  c_sim->add_option("--tau", sim.tau, "dimension threshold");
  c_sim->add_option("--crc", sim_crc, "none|11")->check(CLI::IsMember({"none", "11"}));
  c_sim->add_option("--ebn0", sim_ebn0, "comma-separated Eb/N0 list in dB")->required();
  c_sim->add_option("--max-trials", sim.max_trials, "trial cap per SNR point");
  c_sim->add_option("--min-errors", sim.min_frame_errors, "frame errors to stop at");
  c_sim->add_option("--seed", sim.seed, "RNG seed");
  c_sim->add_option("--out", sim_out, "output file (default stdout)");
  c_sim->add_option("--format", sim_fmt, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  // bounds
  auto* c_bounds = app.add_subcommand("bounds", "analytical PSC FER bounds");
  ProfileArgs bounds_args;
  std::string bounds_ebn0, bounds_out;
  int bounds_tau = 1;
  add_profile_options(c_bounds, bounds_args);
  c_bounds->add_option("--tau", bounds_tau, "dimension threshold");
  c_bounds->add_option("--ebn0", bounds_ebn0, "comma-separated Eb/N0 list in dB")->required();
  c_bounds->add_option("--out", bounds_out, "output file (default stdout)");

  // analyze
  auto* c_an = app.add_subcommand("analyze", "static decoder analysis");
  bool an_op_count = false;
  int an_n = 0;
  std::string an_construction = "pw";
  std::vector<int> an_k;
  std::vector<int> an_tau{1, 2, 3};
  double an_design_snr = 3.0;
  c_an->add_flag("--op-count", an_op_count, "LLR-calculation counts per decoder");
  c_an->add_option("--n", an_n, "code length")->required();
  c_an->add_option("--k", an_k, "code dimensions (repeatable)");
  c_an->add_option("--tau", an_tau, "dimension thresholds (repeatable)");
  c_an->add_option("--construction", an_construction, "ga|mhw|pw")
      ->check(CLI::IsMember({"ga", "mhw", "pw"}));
  c_an->add_option("--design-snr", an_design_snr, "GA design Eb/N0 in dB");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_construct) {
      emit(bbt::profile_to_json(resolve_profile(construct_args)) + "\n", construct_out);
    }

    if (*c_gen) {
      std::ostringstream os;
      bbt::write_matrix(bbt::generator_matrix(gen_n), os);
      emit(os.str(), gen_out);
    }

    if (*c_enc) {
      const int crc_len = enc_crc == "11" ? 11 : 0;
      bbt::Bits data = bbt::parse_bits(enc_data);
      if (enc_args.profile_path.empty() && enc_args.k == 0)
        enc_args.k = static_cast<int>(data.size());
      const bbt::RateProfile profile = resolve_profile(enc_args, crc_len);
      if (crc_len) data = bbt::crc_append(data, bbt::crc11());
      const bbt::CodingTree tree(profile.n);
      std::cout << format_bits(bbt::encode(tree, profile, data), enc_fmt) << "\n";
    }

    if (*c_dec) {
      const int crc_len = dec_crc == "11" ? 11 : 0;
      std::vector<double> llrs;
      if (!dec_llrs.empty()) {
        std::stringstream ss(dec_llrs);
        std::string tok;
        while (std::getline(ss, tok, ',')) llrs.push_back(std::stod(tok));
      } else if (!dec_hard.empty()) {
        llrs = bbt::noiseless_llrs(bbt::parse_bits(dec_hard));
      } else {
        throw std::runtime_error("decode: need --llrs or --hard");
      }
      const bbt::RateProfile profile = resolve_profile(dec_args, crc_len);
      if (profile.n != static_cast<int>(llrs.size()))
        throw std::runtime_error("decode: received length does not match n");
      const bbt::CodingTree tree(profile.n);
      bbt::Bits out;
      bool crc_ok = true;
      if (dec_psc) {
        if (dec_tau < 1) throw std::runtime_error("decode: --psc requires --tau >= 1");
        const bbt::DecodingSubtree sub(tree, profile, dec_tau);
        if (crc_len || dec_list > 1) {
          bbt::PsclDecoder dec(sub, dec_list, dec_min_sum);
          if (crc_len) {
            auto r = dec.decode_crc(llrs, bbt::crc11());
            out = r.data;
            crc_ok = r.crc_ok;
          } else {
            out = dec.decode(llrs);
          }
        } else {
          out = bbt::PscDecoder(sub, dec_min_sum).decode(llrs);
        }
      } else if (crc_len || dec_list > 1) {
        bbt::SclDecoder dec(tree, profile, dec_list, dec_min_sum);
        if (crc_len) {
          auto r = dec.decode_crc(llrs, bbt::crc11());
          out = r.data;
          crc_ok = r.crc_ok;
        } else {
          out = dec.decode(llrs);
        }
      } else {
        out = bbt::ScDecoder(tree, profile, dec_min_sum).decode(llrs);
      }
      std::cout << format_bits(out, dec_fmt) << "\n";
      if (crc_len) std::cout << (crc_ok ? "crc: pass" : "crc: fail") << "\n";
    }

    if (*c_sim) {
      sim.construction = bbt::method_from_name(sim_construction);
      sim.decoder = bbt::decoder_from_name(sim_decoder);
      sim.crc_length = sim_crc == "11" ? 11 : 0;
      std::stringstream ss(sim_ebn0);
      std::string tok;
      while (std::getline(ss, tok, ',')) sim.ebn0_db.push_back(std::stod(tok));
      const bbt::SimResult result = bbt::run_simulation(sim);
      if (sim_fmt == "csv") {
        std::ostringstream os;
        bbt::write_csv(result, os);
        emit(os.str(), sim_out);
      } else {
        emit(bbt::result_to_json(result), sim_out);
      }
    }

    if (*c_bounds) {
      const bbt::RateProfile profile = resolve_profile(bounds_args);
      const bbt::CodingTree tree(profile.n);
      const bbt::DecodingSubtree sub(tree, profile, bounds_tau);
      const double rate = static_cast<double>(profile.k) / profile.n;
      std::ostringstream os;
      os << "ebn0_db,g_ub,b_ub,lb\n";
      std::stringstream ss(bounds_ebn0);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        const double ebn0 = std::stod(tok);
        const auto rep = bbt::fer_bounds(sub, bbt::sigma_from_ebn0(ebn0, rate));
        char line[160];
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", ebn0, rep.g_ub, rep.b_ub,
                      rep.lb);
        os << line;
      }
      emit(os.str(), bounds_out);
    }

    if (*c_an) {
      if (!an_op_count) throw std::runtime_error("analyze: only --op-count is available");
      const bbt::CodingTree tree(an_n);
      if (an_k.empty())
        an_k = {an_n / 4, an_n / 2, 3 * an_n / 4};
      std::cout << "decoder";
      for (int k : an_k) std::cout << "\tK=" << k;
      std::cout << "\n";
      std::cout << "sc";
      for (std::size_t i = 0; i < an_k.size(); ++i)
        std::cout << "\t" << bbt::sc_op_count(tree).total();
      std::cout << "\n";
      for (int tau : an_tau) {
        std::cout << "psc,tau=" << tau;
        for (int k : an_k) {
          const auto profile = bbt::construct(bbt::method_from_name(an_construction), an_n, k,
                                              an_design_snr, static_cast<double>(k) / an_n);
          const bbt::DecodingSubtree sub(tree, profile, tau);
          std::cout << "\t" << bbt::llr_op_count(sub).total();
        }
        std::cout << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
