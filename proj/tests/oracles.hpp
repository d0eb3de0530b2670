#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's kernels.

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dwtsteg/haar_dwt.hpp"
#include "dwtsteg/image.hpp"

namespace oracle {

inline std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (auto b : bytes) {
    h ^= b;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// PN matrices as doubles, drawn the documented way from a raw seed.
inline std::vector<std::vector<double>> pn_matrices(std::uint64_t seed, std::size_t count,
                                                    std::size_t n) {
  std::vector<std::vector<double>> out(count, std::vector<double>(n));
  for (auto& m : out) {
    for (auto& v : m) v = (splitmix64(seed) >> 63) ? 1.0 : -1.0;
  }
  return out;
}

/// Haar subbands via the matrix product H·A·Hᵀ on each 2x2 block, with
/// H = [[1,1],[1,-1]]/sqrt(2). Returns {LL, HL, LH, HH} as row-major vectors.
struct Bands {
  std::vector<double> ll, hl, lh, hh;
};

inline Bands haar_matrix_product(const std::vector<double>& img, std::size_t w, std::size_t h) {
  const double r = 1.0 / std::sqrt(2.0);
  const double H[2][2] = {{r, r}, {r, -r}};
  Bands b;
  for (std::size_t by = 0; by < h / 2; ++by) {
    for (std::size_t bx = 0; bx < w / 2; ++bx) {
      double A[2][2], T[2][2] = {}, R[2][2] = {};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) A[i][j] = img[(2 * by + i) * w + 2 * bx + j];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) T[i][j] += H[i][k] * A[k][j];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) R[i][j] += T[i][k] * H[j][k];
      b.ll.push_back(R[0][0]);
      b.hl.push_back(R[0][1]);
      b.lh.push_back(R[1][0]);
      b.hh.push_back(R[1][1]);
    }
  }
  return b;
}

/// Two-pass Pearson in extended precision.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

inline dwtsteg::GrayImage random_gray(std::mt19937_64& rng, std::size_t w, std::size_t h) {
  std::uniform_int_distribution<int> d(0, 255);
  std::vector<std::uint8_t> s(w * h);
  for (auto& v : s) v = static_cast<std::uint8_t>(d(rng));
  return {w, h, std::move(s)};
}

inline dwtsteg::BitImage random_bits(std::mt19937_64& rng, std::size_t w, std::size_t h) {
  std::bernoulli_distribution d(0.5);
  std::vector<std::uint8_t> s(w * h);
  for (auto& v : s) v = d(rng) ? 1 : 0;
  return {w, h, std::move(s)};
}

/// Exactly half zeros in random order (n even).
inline std::vector<std::uint8_t> balanced_message(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> m(n, 0);
  for (std::size_t i = 0; i < n / 2; ++i) m[i] = 1;
  std::shuffle(m.begin(), m.end(), rng);
  return m;
}

}  // namespace oracle
