#include "bbt/simulation.hpp"

#include <cstdio>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "bbt/channel.hpp"
#include "bbt/codec.hpp"
#include "bbt/subtree.hpp"

namespace bbt {

std::string decoder_name(DecoderKind d) {
  switch (d) {
    case DecoderKind::Sc: return "sc";
    case DecoderKind::Scl: return "scl";
    case DecoderKind::CaScl: return "ca-scl";
    case DecoderKind::Psc: return "psc";
    case DecoderKind::Pscl: return "pscl";
    case DecoderKind::CaPscl: return "ca-pscl";
  }
  return "?";
}

DecoderKind decoder_from_name(const std::string& s) {
  if (s == "sc") return DecoderKind::Sc;
  if (s == "scl") return DecoderKind::Scl;
  if (s == "ca-scl") return DecoderKind::CaScl;
  if (s == "psc") return DecoderKind::Psc;
  if (s == "pscl") return DecoderKind::Pscl;
  if (s == "ca-pscl") return DecoderKind::CaPscl;
  throw std::invalid_argument("unknown decoder: " + s);
}

static bool is_partitioned(DecoderKind d) {
  return d == DecoderKind::Psc || d == DecoderKind::Pscl || d == DecoderKind::CaPscl;
}

static bool is_crc_aided(DecoderKind d) {
  return d == DecoderKind::CaScl || d == DecoderKind::CaPscl;
}

static bool is_list(DecoderKind d) { return d != DecoderKind::Sc && d != DecoderKind::Psc; }

static void validate_config(const SimConfig& c) {
  if (c.n < 1 || c.k < 1 || c.k > c.n) throw std::invalid_argument("simulate: need 1 <= k <= n");
  if (c.ebn0_db.empty()) throw std::invalid_argument("simulate: no SNR points");
  if (c.max_trials < 1 || c.min_frame_errors < 1)
    throw std::invalid_argument("simulate: trial limits must be >= 1");
  if (is_partitioned(c.decoder) && c.tau < 1)
    throw std::invalid_argument("simulate: partitioned decoding requires tau >= 1");
  if (is_list(c.decoder) && c.list_size < 1)
    throw std::invalid_argument("simulate: list size must be >= 1");
  if (is_crc_aided(c.decoder) && c.crc_length != 11)
    throw std::invalid_argument("simulate: CRC-aided decoding requires --crc 11");
  if (!is_crc_aided(c.decoder) && c.crc_length != 0)
    throw std::invalid_argument("simulate: CRC configured without a CRC-aided decoder");
  if (is_crc_aided(c.decoder) && c.k + c.crc_length > c.n)
    throw std::invalid_argument("simulate: k + CRC length exceeds n");
}

SimResult run_simulation(const SimConfig& cfg) {
  validate_config(cfg);
  const int k_coded = cfg.k + (is_crc_aided(cfg.decoder) ? cfg.crc_length : 0);
  const double info_rate = static_cast<double>(cfg.k) / cfg.n;
  const CodingTree tree(cfg.n);
  const RateProfile profile =
      construct(cfg.construction, cfg.n, k_coded, cfg.design_snr_db, info_rate);
  const CrcConfig crc = crc11();

  std::unique_ptr<ScDecoder> sc;
  std::unique_ptr<SclDecoder> scl;
  std::unique_ptr<DecodingSubtree> sub;
  std::unique_ptr<PscDecoder> psc;
  std::unique_ptr<PsclDecoder> pscl;
  if (is_partitioned(cfg.decoder)) {
    sub = std::make_unique<DecodingSubtree>(tree, profile, cfg.tau);
    if (cfg.decoder == DecoderKind::Psc)
      psc = std::make_unique<PscDecoder>(*sub);
    else
      pscl = std::make_unique<PsclDecoder>(*sub, cfg.list_size);
  } else if (cfg.decoder == DecoderKind::Sc) {
    sc = std::make_unique<ScDecoder>(tree, profile);
  } else {
    scl = std::make_unique<SclDecoder>(tree, profile, cfg.list_size);
  }

  SimResult result;
  result.config = cfg;
  Bits data(cfg.k);

  for (std::size_t si = 0; si < cfg.ebn0_db.size(); ++si) {
    const double sigma = sigma_from_ebn0(cfg.ebn0_db[si], info_rate);
    SnrPointResult pt;
    pt.ebn0_db = cfg.ebn0_db[si];
    std::uint64_t ops_total = 0;

    for (std::int64_t trial = 0; trial < cfg.max_trials; ++trial) {
      Rng rng = Rng::for_trial(cfg.seed, si, static_cast<std::uint64_t>(trial));
      for (int i = 0; i < cfg.k; ++i) data[i] = static_cast<std::uint8_t>(rng.bit());
      const Bits msg = is_crc_aided(cfg.decoder) ? crc_append(data, crc) : data;
      const Bits codeword = encode(tree, profile, msg);
      const std::vector<double> llr = channel_llrs(codeword, sigma, rng);

      const Bits* est = nullptr;
      Bits ca_data;
      switch (cfg.decoder) {
        case DecoderKind::Sc:
          est = &sc->decode(llr);
          ops_total += sc->ops().total();
          break;
        case DecoderKind::Scl:
          est = &scl->decode(llr);
          ops_total += scl->ops().total();
          break;
        case DecoderKind::CaScl:
          ca_data = scl->decode_crc(llr, crc).data;
          est = &ca_data;
          ops_total += scl->ops().total();
          break;
        case DecoderKind::Psc:
          est = &psc->decode(llr);
          ops_total += psc->ops().total();
          break;
        case DecoderKind::Pscl:
          est = &pscl->decode(llr);
          ops_total += pscl->ops().total();
          break;
        case DecoderKind::CaPscl:
          ca_data = pscl->decode_crc(llr, crc).data;
          est = &ca_data;
          ops_total += pscl->ops().total();
          break;
      }

      int errs = 0;
      for (int i = 0; i < cfg.k; ++i) errs += (*est)[i] != data[i];
      pt.trials++;
      pt.bit_errors += errs;
      pt.frame_errors += errs > 0;
      if (pt.frame_errors >= cfg.min_frame_errors) break;
    }

    pt.fer = static_cast<double>(pt.frame_errors) / pt.trials;
    pt.ber = static_cast<double>(pt.bit_errors) / (static_cast<double>(pt.trials) * cfg.k);
    pt.llr_ops = static_cast<double>(ops_total) / pt.trials;
    result.points.push_back(pt);
  }
  return result;
}

static std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string result_to_json(const SimResult& r) {
  const SimConfig& c = r.config;
  std::string s = "{\n  \"schema_version\": 1,\n  \"config\": {\n";
  s += "    \"n\": " + std::to_string(c.n) + ",\n";
  s += "    \"k\": " + std::to_string(c.k) + ",\n";
  s += "    \"construction\": \"" + method_name(c.construction) + "\",\n";
  if (c.construction == Method::Ga)
    s += "    \"design_snr_db\": " + fmt17(c.design_snr_db) + ",\n";
  s += "    \"decoder\": \"" + decoder_name(c.decoder) + "\",\n";
  s += "    \"list_size\": " + std::to_string(c.list_size) + ",\n";
  s += "    \"tau\": " + std::to_string(c.tau) + ",\n";
  s += "    \"crc_length\": " + std::to_string(c.crc_length) + ",\n";
  s += "    \"max_trials\": " + std::to_string(c.max_trials) + ",\n";
  s += "    \"min_frame_errors\": " + std::to_string(c.min_frame_errors) + ",\n";
  s += "    \"seed\": " + std::to_string(c.seed) + "\n  },\n  \"results\": [\n";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    s += "    {\"ebn0_db\": " + fmt17(p.ebn0_db);
    s += ", \"trials\": " + std::to_string(p.trials);
    s += ", \"frame_errors\": " + std::to_string(p.frame_errors);
    s += ", \"bit_errors\": " + std::to_string(p.bit_errors);
    s += ", \"fer\": " + fmt17(p.fer);
    s += ", \"ber\": " + fmt17(p.ber);
    s += ", \"llr_ops\": " + fmt17(p.llr_ops) + "}";
    s += (i + 1 < r.points.size()) ? ",\n" : "\n";
  }
  s += "  ]\n}\n";
  return s;
}

void write_csv(const SimResult& r, std::ostream& os) {
  os << "ebn0_db,trials,frame_errors,bit_errors,fer,ber,llr_ops\n";
  for (const auto& p : r.points) {
    os << fmt17(p.ebn0_db) << ',' << p.trials << ',' << p.frame_errors << ',' << p.bit_errors
       << ',' << fmt17(p.fer) << ',' << fmt17(p.ber) << ',' << fmt17(p.llr_ops) << '\n';
  }
}

}  // namespace bbt
