// AVX2 variants. Compiled with per-function target attributes so the rest of
// the binary keeps the baseline ISA; only reached after a CPUID check.

#include "dwtsteg/simd/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define DWTSTEG_HAVE_AVX2 1
#include <immintrin.h>

#include <cstring>
#endif

namespace dwtsteg::simd {

#if DWTSTEG_HAVE_AVX2
namespace {

#define DWTSTEG_AVX2 __attribute__((target("avx2")))

DWTSTEG_AVX2 inline __m256d load_sign4(const std::int8_t* p) {
  std::int32_t raw;
  std::memcpy(&raw, p, sizeof raw);
  return _mm256_cvtepi32_pd(_mm_cvtepi8_epi32(_mm_cvtsi32_si128(raw)));
}

DWTSTEG_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

DWTSTEG_AVX2 void haar_forward_row(const double* row0, const double* row1, double* ll, double* hl,
                                   double* lh, double* hh, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d p0 = _mm256_loadu_pd(row0 + 2 * j), p1 = _mm256_loadu_pd(row0 + 2 * j + 4);
    const __m256d q0 = _mm256_loadu_pd(row1 + 2 * j), q1 = _mm256_loadu_pd(row1 + 2 * j + 4);
    // Lanes hold (a+c, b+d) and (a-c, b-d) per block; hadd/hsub pair them
    // up in block order 0,2,1,3.
    const __m256d s0 = _mm256_add_pd(p0, q0), s1 = _mm256_add_pd(p1, q1);
    const __m256d m0 = _mm256_sub_pd(p0, q0), m1 = _mm256_sub_pd(p1, q1);
    constexpr int kOrder = 0b11011000;
    _mm256_storeu_pd(ll + j, _mm256_mul_pd(_mm256_permute4x64_pd(_mm256_hadd_pd(s0, s1), kOrder), half));
    _mm256_storeu_pd(hl + j, _mm256_mul_pd(_mm256_permute4x64_pd(_mm256_hsub_pd(s0, s1), kOrder), half));
    _mm256_storeu_pd(lh + j, _mm256_mul_pd(_mm256_permute4x64_pd(_mm256_hadd_pd(m0, m1), kOrder), half));
    _mm256_storeu_pd(hh + j, _mm256_mul_pd(_mm256_permute4x64_pd(_mm256_hsub_pd(m0, m1), kOrder), half));
  }
  if (j < n) {
    scalar_kernels().haar_forward_row(row0 + 2 * j, row1 + 2 * j, ll + j, hl + j, lh + j, hh + j,
                                      n - j);
  }
}

DWTSTEG_AVX2 void haar_inverse_row(const double* ll, const double* hl, const double* lh,
                                   const double* hh, double* row0, double* row1, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d vll = _mm256_loadu_pd(ll + j), vhl = _mm256_loadu_pd(hl + j);
    const __m256d vlh = _mm256_loadu_pd(lh + j), vhh = _mm256_loadu_pd(hh + j);
    const __m256d ac = _mm256_add_pd(vll, vhl), bd = _mm256_sub_pd(vll, vhl);
    const __m256d a_c = _mm256_add_pd(vlh, vhh), b_d = _mm256_sub_pd(vlh, vhh);
    const __m256d a = _mm256_mul_pd(_mm256_add_pd(ac, a_c), half);
    const __m256d b = _mm256_mul_pd(_mm256_add_pd(bd, b_d), half);
    const __m256d c = _mm256_mul_pd(_mm256_sub_pd(ac, a_c), half);
    const __m256d d = _mm256_mul_pd(_mm256_sub_pd(bd, b_d), half);
    const __m256d ab_lo = _mm256_unpacklo_pd(a, b), ab_hi = _mm256_unpackhi_pd(a, b);
    const __m256d cd_lo = _mm256_unpacklo_pd(c, d), cd_hi = _mm256_unpackhi_pd(c, d);
    _mm256_storeu_pd(row0 + 2 * j, _mm256_permute2f128_pd(ab_lo, ab_hi, 0x20));
    _mm256_storeu_pd(row0 + 2 * j + 4, _mm256_permute2f128_pd(ab_lo, ab_hi, 0x31));
    _mm256_storeu_pd(row1 + 2 * j, _mm256_permute2f128_pd(cd_lo, cd_hi, 0x20));
    _mm256_storeu_pd(row1 + 2 * j + 4, _mm256_permute2f128_pd(cd_lo, cd_hi, 0x31));
  }
  if (j < n) {
    scalar_kernels().haar_inverse_row(ll + j, hl + j, lh + j, hh + j, row0 + 2 * j, row1 + 2 * j,
                                      n - j);
  }
}

DWTSTEG_AVX2 void accumulate_sign(std::int32_t* acc, const std::int8_t* pn, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i raw = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(pn + i));
    const __m256i v = _mm256_cvtepi8_epi32(raw);
    auto* dst = reinterpret_cast<__m256i*>(acc + i);
    _mm256_storeu_si256(dst, _mm256_add_epi32(_mm256_loadu_si256(dst), v));
  }
  for (; i < n; ++i) acc[i] += pn[i];
}

DWTSTEG_AVX2 void add_scaled_counts(double* dst, const std::int32_t* acc, double k, std::size_t n) {
  const __m256d vk = _mm256_set1_pd(k);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c =
        _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(acc + i)));
    _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(dst + i), _mm256_mul_pd(vk, c)));
  }
  for (; i < n; ++i) dst[i] += k * static_cast<double>(acc[i]);
}

DWTSTEG_AVX2 double dot_sign(const double* x, const std::int8_t* pn, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd(), acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x + i), load_sign4(pn + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(x + i + 4), load_sign4(pn + i + 4)));
    acc2 = _mm256_add_pd(acc2, _mm256_mul_pd(_mm256_loadu_pd(x + i + 8), load_sign4(pn + i + 8)));
    acc3 =
        _mm256_add_pd(acc3, _mm256_mul_pd(_mm256_loadu_pd(x + i + 12), load_sign4(pn + i + 12)));
  }
  double s = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
  for (; i < n; ++i) s += x[i] * static_cast<double>(pn[i]);
  return s;
}

DWTSTEG_AVX2 std::int64_t sum_sign(const std::int8_t* pn, std::size_t n) {
  // Lanes move by at most 1 per step, so they stay in range for any n < 2^34.
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i raw = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(pn + i));
    acc = _mm256_add_epi32(acc, _mm256_cvtepi8_epi32(raw));
  }
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t s = 0;
  for (std::int32_t v : lanes) s += v;
  for (; i < n; ++i) s += pn[i];
  return s;
}

DWTSTEG_AVX2 double sum(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i];
  return s;
}

DWTSTEG_AVX2 Moments centered_moments(const double* x, double mx, const double* y, double my,
                                      std::size_t n) {
  const __m256d vmx = _mm256_set1_pd(mx), vmy = _mm256_set1_pd(my);
  __m256d axx = _mm256_setzero_pd(), ayy = _mm256_setzero_pd(), axy = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), vmx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), vmy);
    axx = _mm256_add_pd(axx, _mm256_mul_pd(dx, dx));
    ayy = _mm256_add_pd(ayy, _mm256_mul_pd(dy, dy));
    axy = _mm256_add_pd(axy, _mm256_mul_pd(dx, dy));
  }
  Moments m{hsum(axx), hsum(ayy), hsum(axy)};
  for (; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    m.sxx += dx * dx;
    m.syy += dy * dy;
    m.sxy += dx * dy;
  }
  return m;
}

DWTSTEG_AVX2 std::uint64_t sum_sq_diff_u8(const std::uint8_t* a, const std::uint8_t* b,
                                          std::size_t n) {
  // Each 32-bit lane gains at most 2 * 2 * 255² per 32-byte step; flush to
  // 64 bits well before 2^32.
  constexpr std::size_t kFlushSteps = 4096;
  const __m256i zero = _mm256_setzero_si256();
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i + 32 <= n) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t step = 0; step < kFlushSteps && i + 32 <= n; ++step, i += 32) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      const __m256i d = _mm256_sub_epi8(_mm256_max_epu8(va, vb), _mm256_min_epu8(va, vb));
      const __m256i lo = _mm256_unpacklo_epi8(d, zero), hi = _mm256_unpackhi_epi8(d, zero);
      acc = _mm256_add_epi32(acc, _mm256_madd_epi16(lo, lo));
      acc = _mm256_add_epi32(acc, _mm256_madd_epi16(hi, hi));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint32_t v : lanes) total += v;
  }
  for (; i < n; ++i) {
    const int d = int(a[i]) - int(b[i]);
    total += static_cast<std::uint64_t>(d * d);
  }
  return total;
}

#undef DWTSTEG_AVX2

constexpr Kernels kAvx2{
    Isa::Avx2,       haar_forward_row, haar_inverse_row, accumulate_sign,  add_scaled_counts,
    dot_sign,        sum_sign,         sum,              centered_moments, sum_sq_diff_u8,
};

}  // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace dwtsteg::simd
