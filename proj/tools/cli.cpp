#include "cli.hpp"

#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "dwtsteg/codec.hpp"
#include "dwtsteg/error.hpp"
#include "dwtsteg/metrics.hpp"
#include "dwtsteg/pixel_io.hpp"

namespace dwtsteg::cli {
namespace {

std::string fixed(double v, int decimals = 4) {
  if (v == std::numeric_limits<double>::infinity()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string format_size(Size2 s) { return std::to_string(s.width) + "x" + std::to_string(s.height); }

Size2 parse_size(const std::string& text, const char* flag) {
  static const std::regex kPattern(R"((\d{1,9})[xX](\d{1,9}))");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) {
    throw InvalidArgument(std::string(flag) + " expects WxH, got '" + text + "'");
  }
  const Size2 s{std::stoul(m[1]), std::stoul(m[2])};
  if (s.width == 0 || s.height == 0) {
    throw InvalidArgument(std::string(flag) + " dimensions must be positive");
  }
  return s;
}

struct KeyFlags {
  std::string text;
  std::string hex;
  CLI::Option* text_opt = nullptr;
  CLI::Option* hex_opt = nullptr;

  void attach(CLI::App& cmd) {
    text_opt = cmd.add_option("--key", text, "session key as UTF-8 text");
    hex_opt = cmd.add_option("--key-hex", hex, "session key as hex bytes");
    text_opt->excludes(hex_opt);
    hex_opt->excludes(text_opt);
  }

  SessionKey resolve() const {
    if (*text_opt) return SessionKey::from_text(text);
    if (*hex_opt) return SessionKey::from_hex(hex);
    throw InvalidArgument("one of --key or --key-hex is required");
  }
};

struct HideFlags {
  std::string cover, secret1, secret2, out;
  double gain = kDefaultGain;
  KeyFlags key;
};

struct ExtractFlags {
  std::string stego, size1, size2, out1, out2;
  double threshold = kDefaultThreshold;
  bool no_filter = false;
  KeyFlags key;
};

struct MetricFlags {
  std::string a, b;
  bool wavelet = false;
};

int run_hide(const HideFlags& f, std::ostream& out, std::ostream& err) {
  const SessionKey key = f.key.resolve();
  StegoParams params;
  params.gain = f.gain;
  validate(params);

  const GrayImage cover = load_pgm(f.cover);
  const BitImage s1 = load_pbm(f.secret1);
  const BitImage s2 = load_pbm(f.secret2);
  const GrayImage stego = hide(cover, s1, s2, key, params);
  const std::size_t area = (cover.width() / 2) * (cover.height() / 2);
  for (const auto& [name, s] : {std::pair{"secret1", &s1}, std::pair{"secret2", &s2}}) {
    if (check_capacity(s->size(), area) == CapacityStatus::Crowded) {
      err << "warning: " << name << " uses more than 1/16 of its subband; expect bit errors\n";
    }
  }
  write_file_atomic(f.out, write_pgm(stego));

  out << "secret1=" << format_size(dims(s1)) << "\n";
  out << "secret2=" << format_size(dims(s2)) << "\n";
  out << "gain=" << fixed(params.gain) << "\n";
  out << "PSNR=" << fixed(psnr(cover, stego)) << " dB\n";
  return kOk;
}

void print_report(std::ostream& out, int index, Size2 size, const RecoveryReport& r) {
  const std::string i = std::to_string(index);
  out << "size" << i << "=" << format_size(size) << "\n";
  out << "mean_correlation" << i << "=" << fixed(r.mean_correlation, 6) << "\n";
  out << "threshold" << i << "=" << fixed(r.used_threshold, 6) << "\n";
  if (r.weak_signal) out << "warning" << i << "=weak-signal\n";
  if (r.flat_correlations) out << "warning" << i << "=flat-correlations\n";
}

int run_extract(const ExtractFlags& f, std::ostream& out, std::ostream&) {
  const SessionKey key = f.key.resolve();
  const Size2 size1 = parse_size(f.size1, "--size1");
  const Size2 size2 = parse_size(f.size2, "--size2");
  StegoParams params;
  params.threshold_factor = f.threshold;
  params.filter = !f.no_filter;
  validate(params);

  const GrayImage stego = load_pgm(f.stego);
  const Extraction result = extract(stego, key, size1, size2, params);
  const auto bytes1 = write_pbm(result.secret1);
  const auto bytes2 = write_pbm(result.secret2);
  write_file_atomic(f.out1, bytes1);
  write_file_atomic(f.out2, bytes2);

  print_report(out, 1, size1, result.report1);
  print_report(out, 2, size2, result.report2);
  out << "filtered=" << (params.filter ? "yes" : "no") << "\n";
  return kOk;
}

/// PGM samples or PBM bits as a real matrix, chosen by magic number.
CoefMatrix load_any(const std::string& path) {
  const auto bytes = read_file(path);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '1' || bytes[1] == '4')) {
    const BitImage img = parse_pbm(bytes);
    return CoefMatrix(img.width(), img.height(),
                      std::vector<double>(img.bits().begin(), img.bits().end()));
  }
  return CoefMatrix(parse_pgm(bytes));
}

int run_psnr(const MetricFlags& f, std::ostream& out) {
  out << "psnr=" << fixed(psnr(load_pgm(f.a), load_pgm(f.b))) << "\n";
  return kOk;
}

int run_corr(const MetricFlags& f, std::ostream& out) {
  const CoefMatrix a = load_any(f.a);
  const CoefMatrix b = load_any(f.b);
  if (a.width() != b.width() || a.height() != b.height()) {
    throw DimensionMismatch("image sizes differ");
  }
  const double r = f.wavelet ? wavelet_pearson(a, b) : pearson(a.values(), b.values());
  out << "corr=" << fixed(r) << "\n";
  return kOk;
}

int run_ber(const MetricFlags& f, std::ostream& out) {
  const BitImage a = load_pbm(f.a);
  const BitImage b = load_pbm(f.b);
  if (dims(a) != dims(b)) throw DimensionMismatch("image sizes differ");
  out << "ber=" << fixed(ber(a.bits(), b.bits())) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hide two binary images in the HL/HH Haar subbands of a grayscale cover"};
  app.name("dwtsteg");
  app.require_subcommand(1);

  HideFlags hf;
  auto* hide_cmd = app.add_subcommand("hide", "embed two PBM secrets into a PGM cover");
  hide_cmd->add_option("--cover", hf.cover, "cover image (PGM)")->required();
  hide_cmd->add_option("--secret1", hf.secret1, "secret for the HL subband (PBM)")->required();
  hide_cmd->add_option("--secret2", hf.secret2, "secret for the HH subband (PBM)")->required();
  hide_cmd->add_option("--out", hf.out, "stego output (PGM)")->required();
  hide_cmd->add_option("--gain", hf.gain, "amplification factor k")->capture_default_str();
  hf.key.attach(*hide_cmd);

  ExtractFlags ef;
  auto* extract_cmd = app.add_subcommand("extract", "recover both secrets from a stego image");
  extract_cmd->add_option("--stego", ef.stego, "stego image (PGM)")->required();
  extract_cmd->add_option("--size1", ef.size1, "secret1 size WxH")->required();
  extract_cmd->add_option("--size2", ef.size2, "secret2 size WxH")->required();
  extract_cmd->add_option("--out1", ef.out1, "recovered secret1 (PBM)")->required();
  extract_cmd->add_option("--out2", ef.out2, "recovered secret2 (PBM)")->required();
  extract_cmd->add_option("--threshold", ef.threshold, "detector threshold factor")
      ->capture_default_str();
  extract_cmd->add_flag("--no-filter", ef.no_filter, "skip the 3x3 majority filter");
  ef.key.attach(*extract_cmd);

  MetricFlags mf;
  auto* metrics_cmd = app.add_subcommand("metrics", "image quality and similarity metrics");
  metrics_cmd->require_subcommand(1);
  auto add_pair = [&mf](CLI::App* cmd) {
    cmd->add_option("--a", mf.a, "first image")->required();
    cmd->add_option("--b", mf.b, "second image")->required();
  };
  auto* psnr_cmd = metrics_cmd->add_subcommand("psnr", "PSNR in dB between two PGM images");
  auto* corr_cmd = metrics_cmd->add_subcommand("corr", "Pearson correlation of two images");
  auto* ber_cmd = metrics_cmd->add_subcommand("ber", "bit error rate between two PBM images");
  add_pair(psnr_cmd);
  add_pair(corr_cmd);
  add_pair(ber_cmd);
  corr_cmd->add_flag("--wavelet", mf.wavelet, "correlate one-level Haar subbands instead of pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*hide_cmd) return run_hide(hf, out, err);
    if (*extract_cmd) return run_extract(ef, out, err);
    if (*psnr_cmd) return run_psnr(mf, out);
    if (*corr_cmd) return run_corr(mf, out);
    if (*ber_cmd) return run_ber(mf, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const OddDimension& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const UndefinedCorrelation& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace dwtsteg::cli
