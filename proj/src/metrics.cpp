#include "dwtsteg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "dwtsteg/error.hpp"
#include "dwtsteg/haar_dwt.hpp"
#include "dwtsteg/simd/kernels.hpp"

namespace dwtsteg {
namespace {

void require_same_shape(std::size_t wa, std::size_t ha, std::size_t wb, std::size_t hb) {
  if (wa != wb || ha != hb) {
    throw DimensionMismatch("image sizes differ: " + std::to_string(wa) + "x" +
                            std::to_string(ha) + " vs " + std::to_string(wb) + "x" +
                            std::to_string(hb));
  }
}

bool is_constant(std::span<const double> v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

template <typename T>
std::vector<double> to_real(std::span<const T> v) {
  return {v.begin(), v.end()};
}

std::vector<double> concat_subbands(const SubbandSet& s) {
  std::vector<double> out;
  out.reserve(4 * s.ll.size());
  for (const CoefMatrix* b : {&s.ll, &s.hl, &s.lh, &s.hh}) {
    out.insert(out.end(), b->values().begin(), b->values().end());
  }
  return out;
}

}  // namespace

double mse(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a.width(), a.height(), b.width(), b.height());
  const std::uint64_t ssd =
      simd::active_kernels().sum_sq_diff_u8(a.samples().data(), b.samples().data(), a.size());
  return static_cast<double>(ssd) / static_cast<double>(a.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
  const double e = mse(a, b);
  if (e == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / e);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("pearson: lengths differ (" + std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw DimensionMismatch("pearson: need at least 2 samples");
  if (is_constant(x) || is_constant(y)) {
    throw UndefinedCorrelation("pearson: correlation with a constant vector is undefined");
  }
  const auto& k = simd::active_kernels();
  const double n = static_cast<double>(x.size());
  const double mx = k.sum(x.data(), x.size()) / n;
  const double my = k.sum(y.data(), y.size()) / n;
  const simd::Moments m = k.centered_moments(x.data(), mx, y.data(), my, x.size());
  const double r = m.sxy / (std::sqrt(m.sxx) * std::sqrt(m.syy));
  return std::clamp(r, -1.0, 1.0);
}

double pearson(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a.width(), a.height(), b.width(), b.height());
  return pearson(to_real(a.samples()), to_real(b.samples()));
}

double pearson(const BitImage& a, const BitImage& b) {
  require_same_shape(a.width(), a.height(), b.width(), b.height());
  return pearson(to_real(a.bits()), to_real(b.bits()));
}

double wavelet_pearson(const CoefMatrix& a, const CoefMatrix& b) {
  require_same_shape(a.width(), a.height(), b.width(), b.height());
  return pearson(concat_subbands(forward_haar1(a)), concat_subbands(forward_haar1(b)));
}

double wavelet_pearson(const GrayImage& a, const GrayImage& b) {
  return wavelet_pearson(CoefMatrix(a), CoefMatrix(b));
}

double ber(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("ber: lengths differ (" + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
  }
  if (a.empty()) throw InvalidArgument("ber: empty input");
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += (a[i] != b[i]);
  return static_cast<double>(diff) / static_cast<double>(a.size());
}

}  // namespace dwtsteg
