#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace dwtsteg::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Centered second moments of two equal-length vectors about given means.
struct Moments {
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
};

/// Inner loops shared by the transform, the codec and the metrics. Every
/// variant must produce bit-identical results for the elementwise and
/// integer kernels; floating reductions may differ by rounding only.
struct Kernels {
  Isa isa;

  /// One row of 2x2 blocks. `row0`/`row1` hold 2*n samples; outputs hold n.
  void (*haar_forward_row)(const double* row0, const double* row1, double* ll, double* hl,
                           double* lh, double* hh, std::size_t n);
  /// Inverse of haar_forward_row.
  void (*haar_inverse_row)(const double* ll, const double* hl, const double* lh, const double* hh,
                           double* row0, double* row1, std::size_t n);

  /// acc[i] += pn[i] for a ±1 matrix.
  void (*accumulate_sign)(std::int32_t* acc, const std::int8_t* pn, std::size_t n);
  /// dst[i] += k * acc[i].
  void (*add_scaled_counts)(double* dst, const std::int32_t* acc, double k, std::size_t n);
  /// Σ x[i]*pn[i].
  double (*dot_sign)(const double* x, const std::int8_t* pn, std::size_t n);
  /// Σ pn[i] (exact).
  std::int64_t (*sum_sign)(const std::int8_t* pn, std::size_t n);

  double (*sum)(const double* x, std::size_t n);
  Moments (*centered_moments)(const double* x, double mx, const double* y, double my,
                              std::size_t n);
  /// Σ (a[i]-b[i])² over 8-bit samples (exact).
  std::uint64_t (*sum_sq_diff_u8)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
};

const Kernels& scalar_kernels();
/// Null when the AVX2 variant was not compiled in.
const Kernels* avx2_kernels();

/// Variants compiled in and supported by this CPU, scalar first.
std::vector<Isa> available_isas();
const Kernels& kernels_for(Isa isa);

/// Table used by the library. Chosen once: the best supported ISA, unless the
/// DWTSTEG_ISA environment variable names another ("scalar", "avx2").
const Kernels& active_kernels();

}  // namespace dwtsteg::simd
