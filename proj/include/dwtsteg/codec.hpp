#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dwtsteg/haar_dwt.hpp"
#include "dwtsteg/image.hpp"
#include "dwtsteg/keyed_pn.hpp"

namespace dwtsteg {

inline constexpr double kDefaultGain = 0.7;
inline constexpr double kDefaultThreshold = 1.0;

struct StegoParams {
  /// Amplification factor k of I_s = I + k*S. Must be >= 0.
  double gain = kDefaultGain;
  /// Bit i decodes to 0 when corr_i > threshold_factor * mean(corr). Must be > 0.
  double threshold_factor = kDefaultThreshold;
  /// 3x3 majority filter on recovered images.
  bool filter = true;
};

void validate(const StegoParams& params);

struct RecoveryReport {
  std::vector<double> correlations;
  double mean_correlation = 0.0;
  std::vector<std::uint8_t> decoded_bits;
  double used_threshold = 0.0;
  /// No correlation rises clearly above the null distribution (nothing
  /// embedded, wrong key, or an all-ones message).
  bool weak_signal = false;
  /// Every correlation is within 5% of the mean (e.g. all-zeros message).
  bool flat_correlations = false;
};

enum class CapacityStatus { Ok, Crowded };

/// Hard limit: bits <= area. Soft limit: above area/16 detection SNR per bit
/// degrades; reported as Crowded. Throws CapacityExceeded past the hard limit.
CapacityStatus check_capacity(std::size_t bits, std::size_t area);

/// For each bit i draws PN_i from `stream`; zero bits add gain*PN_i to the
/// band, one bits add nothing.
CoefMatrix embed_message(CoefMatrix band, std::span<const std::uint8_t> bits, PnStream& stream,
                         double gain);

/// Correlation detector: corr_i = Pearson(band, PN_i); bit 0 iff
/// corr_i > threshold_factor * mean.
RecoveryReport detect_bits(const CoefMatrix& band, std::size_t message_len, PnStream& stream,
                           double threshold_factor);

/// 3x3 majority vote with edge replication.
BitImage majority_filter3(const BitImage& img);

/// secret1 goes to HL, secret2 to HH. Result has the cover's dimensions.
GrayImage hide(const GrayImage& cover, const BitImage& secret1, const BitImage& secret2,
               const SessionKey& key, const StegoParams& params = {});
/// hide without the final rounding step.
CoefMatrix hide_unquantized(const CoefMatrix& cover, const BitImage& secret1,
                            const BitImage& secret2, const SessionKey& key,
                            const StegoParams& params = {});

struct Extraction {
  /// Filtered when params.filter is set, otherwise identical to raw*.
  BitImage secret1;
  BitImage secret2;
  BitImage raw1;
  BitImage raw2;
  RecoveryReport report1;
  RecoveryReport report2;
};

Extraction extract(const GrayImage& stego, const SessionKey& key, Size2 size1, Size2 size2,
                   const StegoParams& params = {});
Extraction extract(const CoefMatrix& stego, const SessionKey& key, Size2 size1, Size2 size2,
                   const StegoParams& params = {});

}  // namespace dwtsteg
