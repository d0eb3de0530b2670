// Reference implementations. These define the results the vector variants
// are tested against.

#include "dwtsteg/simd/kernels.hpp"

namespace dwtsteg::simd {
namespace {

void haar_forward_row(const double* row0, const double* row1, double* ll, double* hl, double* lh,
                      double* hh, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double a = row0[2 * j], b = row0[2 * j + 1];
    const double c = row1[2 * j], d = row1[2 * j + 1];
    const double ac = a + c, bd = b + d;
    const double a_c = a - c, b_d = b - d;
    ll[j] = (ac + bd) * 0.5;
    hl[j] = (ac - bd) * 0.5;
    lh[j] = (a_c + b_d) * 0.5;
    hh[j] = (a_c - b_d) * 0.5;
  }
}

void haar_inverse_row(const double* ll, const double* hl, const double* lh, const double* hh,
                      double* row0, double* row1, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double ac = ll[j] + hl[j], bd = ll[j] - hl[j];
    const double a_c = lh[j] + hh[j], b_d = lh[j] - hh[j];
    row0[2 * j] = (ac + a_c) * 0.5;
    row0[2 * j + 1] = (bd + b_d) * 0.5;
    row1[2 * j] = (ac - a_c) * 0.5;
    row1[2 * j + 1] = (bd - b_d) * 0.5;
  }
}

void accumulate_sign(std::int32_t* acc, const std::int8_t* pn, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += pn[i];
}

void add_scaled_counts(double* dst, const std::int32_t* acc, double k, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += k * static_cast<double>(acc[i]);
}

double dot_sign(const double* x, const std::int8_t* pn, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * static_cast<double>(pn[i]);
  return s;
}

std::int64_t sum_sign(const std::int8_t* pn, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += pn[i];
  return s;
}

double sum(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

Moments centered_moments(const double* x, double mx, const double* y, double my, std::size_t n) {
  Moments m;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    m.sxx += dx * dx;
    m.syy += dy * dy;
    m.sxy += dx * dy;
  }
  return m;
}

std::uint64_t sum_sq_diff_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = int(a[i]) - int(b[i]);
    s += static_cast<std::uint64_t>(d * d);
  }
  return s;
}

constexpr Kernels kScalar{
    Isa::Scalar,     haar_forward_row, haar_inverse_row, accumulate_sign,  add_scaled_counts,
    dot_sign,        sum_sign,         sum,              centered_moments, sum_sq_diff_u8,
};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace dwtsteg::simd
