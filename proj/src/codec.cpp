#include "dwtsteg/codec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dwtsteg/error.hpp"
#include "dwtsteg/pixel_io.hpp"
#include "dwtsteg/simd/kernels.hpp"

namespace dwtsteg {
namespace {

// Detection flags. The null distribution of Pearson(band, independent ±1
// matrix) has standard deviation ~1/sqrt(N).
constexpr double kWeakSignalSigmas = 5.0;
constexpr double kFlatTolerance = 0.05;

void embed_pair(SubbandSet& bands, const BitImage& secret1, const BitImage& secret2,
                const SessionKey& key, const StegoParams& params) {
  validate(params);
  check_capacity(secret1.size(), bands.hl.size());
  check_capacity(secret2.size(), bands.hh.size());
  PnStream hl_stream(key, Subband::HL);
  PnStream hh_stream(key, Subband::HH);
  bands.hl = embed_message(std::move(bands.hl), secret1.bits(), hl_stream, params.gain);
  bands.hh = embed_message(std::move(bands.hh), secret2.bits(), hh_stream, params.gain);
}

Extraction extract_bands(const SubbandSet& bands, const SessionKey& key, Size2 size1, Size2 size2,
                         const StegoParams& params) {
  validate(params);
  for (const Size2& s : {size1, size2}) {
    if (s.width == 0 || s.height == 0) {
      throw InvalidArgument("secret image dimensions must be positive");
    }
  }
  check_capacity(size1.area(), bands.hl.size());
  check_capacity(size2.area(), bands.hh.size());

  PnStream hl_stream(key, Subband::HL);
  PnStream hh_stream(key, Subband::HH);
  RecoveryReport r1 = detect_bits(bands.hl, size1.area(), hl_stream, params.threshold_factor);
  RecoveryReport r2 = detect_bits(bands.hh, size2.area(), hh_stream, params.threshold_factor);
  BitImage raw1 = unflatten_bits(r1.decoded_bits, size1.width, size1.height);
  BitImage raw2 = unflatten_bits(r2.decoded_bits, size2.width, size2.height);
  BitImage out1 = params.filter ? majority_filter3(raw1) : raw1;
  BitImage out2 = params.filter ? majority_filter3(raw2) : raw2;
  return Extraction{std::move(out1), std::move(out2), std::move(raw1),
                    std::move(raw2), std::move(r1),   std::move(r2)};
}

}  // namespace

void validate(const StegoParams& params) {
  if (!(params.gain >= 0.0) || !std::isfinite(params.gain)) {
    throw InvalidArgument("gain must be a finite non-negative number");
  }
  if (!(params.threshold_factor > 0.0) || !std::isfinite(params.threshold_factor)) {
    throw InvalidArgument("threshold factor must be a finite positive number");
  }
}

CapacityStatus check_capacity(std::size_t bits, std::size_t area) {
  if (bits > area) {
    throw CapacityExceeded("message of " + std::to_string(bits) +
                           " bits exceeds subband capacity of " + std::to_string(area));
  }
  return bits * 16 > area ? CapacityStatus::Crowded : CapacityStatus::Ok;
}

CoefMatrix embed_message(CoefMatrix band, std::span<const std::uint8_t> bits, PnStream& stream,
                         double gain) {
  if (!(gain >= 0.0)) throw InvalidArgument("gain must be non-negative");
  check_capacity(bits.size(), band.size());
  const auto& k = simd::active_kernels();
  const std::size_t n = band.size();
  std::vector<std::int32_t> counts(n, 0);
  std::vector<std::int8_t> pn(n);
  for (const std::uint8_t bit : bits) {
    if (bit > 1) throw InvalidArgument("message bits must be 0 or 1");
    stream.fill_next(pn);
    if (bit == 0) k.accumulate_sign(counts.data(), pn.data(), n);
  }
  k.add_scaled_counts(band.values().data(), counts.data(), gain, n);
  return band;
}

RecoveryReport detect_bits(const CoefMatrix& band, std::size_t message_len, PnStream& stream,
                           double threshold_factor) {
  if (message_len == 0) throw InvalidArgument("message length must be positive");
  if (!(threshold_factor > 0.0)) throw InvalidArgument("threshold factor must be positive");
  check_capacity(message_len, band.size());

  const auto& k = simd::active_kernels();
  const std::size_t n = band.size();
  const double dn = static_cast<double>(n);
  const auto values = band.values();

  const double mean = k.sum(values.data(), n) / dn;
  std::vector<double> centered(n);
  std::transform(values.begin(), values.end(), centered.begin(),
                 [mean](double v) { return v - mean; });
  const double centered_sum = k.sum(centered.data(), n);
  const double sxx = k.centered_moments(centered.data(), 0.0, centered.data(), 0.0, n).sxx;
  const bool flat_band =
      std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();

  RecoveryReport report;
  report.correlations.resize(message_len);
  std::vector<std::int8_t> pn(n);
  for (std::size_t i = 0; i < message_len; ++i) {
    stream.fill_next(pn);
    if (flat_band) {
      report.correlations[i] = 0.0;
      continue;
    }
    // Pearson(band, pn) = Σ(x-x̄)(p-p̄) / sqrt(Σ(x-x̄)² Σ(p-p̄)²), with
    // Σ(p-p̄)² = N - (Σp)²/N for a ±1 matrix.
    const double sp = static_cast<double>(k.sum_sign(pn.data(), n));
    const double spp = dn - sp * sp / dn;
    if (spp <= 0.0) {
      report.correlations[i] = 0.0;
      continue;
    }
    const double sxp = k.dot_sign(centered.data(), pn.data(), n) - (sp / dn) * centered_sum;
    report.correlations[i] = std::clamp(sxp / (std::sqrt(sxx) * std::sqrt(spp)), -1.0, 1.0);
  }

  const auto& c = report.correlations;
  report.mean_correlation = std::accumulate(c.begin(), c.end(), 0.0) / double(message_len);
  report.used_threshold = threshold_factor * report.mean_correlation;
  report.decoded_bits.resize(message_len);
  for (std::size_t i = 0; i < message_len; ++i) {
    report.decoded_bits[i] = c[i] > report.used_threshold ? 0 : 1;
  }
  const double max_corr = *std::max_element(c.begin(), c.end());
  report.weak_signal = max_corr < kWeakSignalSigmas / std::sqrt(dn);
  report.flat_correlations = std::all_of(c.begin(), c.end(), [&](double v) {
    return std::abs(v - report.mean_correlation) <= kFlatTolerance * std::abs(report.mean_correlation);
  });
  return report;
}

BitImage majority_filter3(const BitImage& img) {
  const std::size_t w = img.width(), h = img.height();
  BitImage out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      int votes = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        const std::size_t yy = std::clamp<std::ptrdiff_t>(std::ptrdiff_t(y) + dy, 0, h - 1);
        for (int dx = -1; dx <= 1; ++dx) {
          const std::size_t xx = std::clamp<std::ptrdiff_t>(std::ptrdiff_t(x) + dx, 0, w - 1);
          votes += img.at(xx, yy);
        }
      }
      out.set(x, y, votes >= 5);
    }
  }
  return out;
}

GrayImage hide(const GrayImage& cover, const BitImage& secret1, const BitImage& secret2,
               const SessionKey& key, const StegoParams& params) {
  SubbandSet bands = forward_haar1(cover);
  embed_pair(bands, secret1, secret2, key, params);
  return quantize(inverse_haar1(bands));
}

CoefMatrix hide_unquantized(const CoefMatrix& cover, const BitImage& secret1,
                            const BitImage& secret2, const SessionKey& key,
                            const StegoParams& params) {
  SubbandSet bands = forward_haar1(cover);
  embed_pair(bands, secret1, secret2, key, params);
  return inverse_haar1(bands);
}

Extraction extract(const GrayImage& stego, const SessionKey& key, Size2 size1, Size2 size2,
                   const StegoParams& params) {
  return extract_bands(forward_haar1(stego), key, size1, size2, params);
}

Extraction extract(const CoefMatrix& stego, const SessionKey& key, Size2 size1, Size2 size2,
                   const StegoParams& params) {
  return extract_bands(forward_haar1(stego), key, size1, size2, params);
}

}  // namespace dwtsteg
