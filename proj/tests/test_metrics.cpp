#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "dwtsteg/error.hpp"
#include "dwtsteg/metrics.hpp"
#include "oracles.hpp"

using namespace dwtsteg;

namespace {

GrayImage offset_image(const GrayImage& g, int delta) {
  std::vector<std::uint8_t> s(g.samples().begin(), g.samples().end());
  for (auto& v : s) v = static_cast<std::uint8_t>(v + delta);
  return {g.width(), g.height(), std::move(s)};
}

}  // namespace

TEST_CASE("psnr") {
  std::mt19937_64 rng(1);
  std::vector<std::uint8_t> s(64 * 48);
  for (auto& v : s) v = static_cast<std::uint8_t>(rng() % 240);
  const GrayImage a(64, 48, s);
  CHECK(psnr(a, a) == std::numeric_limits<double>::infinity());
  CHECK(std::abs(psnr(a, offset_image(a, 1)) - 48.1308) < 1e-3);
  CHECK(std::abs(psnr(a, offset_image(a, 1)) - 10.0 * std::log10(65025.0)) < 1e-12);
  CHECK(psnr(a, offset_image(a, 3)) == psnr(offset_image(a, 3), a));
  double prev = std::numeric_limits<double>::infinity();
  for (int d : {1, 2, 4, 8}) {
    const double p = psnr(a, offset_image(a, d));
    CHECK(p < prev);
    prev = p;
  }
  CHECK_THROWS_AS(psnr(a, GrayImage(48, 64, std::uint8_t{0})), DimensionMismatch);
}

TEST_CASE("pearson examples and errors") {
  const std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 4}, neg{-1, -2, -3, -4};
  CHECK(pearson(x, x) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pearson(x, neg) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(pearson(x, y) - 0.8) < 1e-15);
  CHECK_THROWS_AS(pearson(x, std::vector<double>{1, 2, 3}), DimensionMismatch);
  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{2}), DimensionMismatch);
  CHECK_THROWS_AS(pearson(x, std::vector<double>{0.1, 0.1, 0.1, 0.1}), UndefinedCorrelation);
  CHECK_THROWS_AS(pearson(std::vector<double>{7, 7, 7, 7}, y), UndefinedCorrelation);
}

TEST_CASE("pearson agrees with the two-pass oracle; symmetry, affine invariance, bounds") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(2, 10000);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> mix(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = len(rng);
    const double rho = mix(rng), shift = 1000.0 * mix(rng);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = nd(rng) + shift;
      y[i] = rho * x[i] + nd(rng);
    }
    const double r = pearson(x, y);
    CHECK(std::abs(r - oracle::pearson(x, y)) < 1e-12);
    CHECK(std::abs(r - pearson(y, x)) < 1e-12);
    CHECK(r >= -1.0);
    CHECK(r <= 1.0);

    std::vector<double> ax(n), bx(n);
    for (std::size_t i = 0; i < n; ++i) {
      ax[i] = 2.5 * x[i] + 17.0;
      bx[i] = -0.75 * x[i] + 3.0;
    }
    CHECK(std::abs(pearson(ax, y) - r) < 1e-12);
    CHECK(std::abs(pearson(bx, y) + r) < 1e-12);
  }
}

TEST_CASE("image overloads") {
  const BitImage a(2, 2, std::vector<std::uint8_t>{1, 0, 0, 1});
  const BitImage b(2, 2, std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(pearson(a, a) == doctest::Approx(1.0));
  CHECK(pearson(a, b) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(pearson(a, BitImage(4, 1, std::uint8_t{0})), DimensionMismatch);

  std::mt19937_64 rng(8);
  const GrayImage g = oracle::random_gray(rng, 16, 16);
  CHECK(pearson(g, g) == doctest::Approx(1.0));
  CHECK(wavelet_pearson(g, g) == doctest::Approx(1.0));
  CHECK(wavelet_pearson(g, offset_image(g, 0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(wavelet_pearson(GrayImage(3, 3, std::uint8_t{1}), GrayImage(3, 3, std::uint8_t{2})),
                  OddDimension);
}

TEST_CASE("ber") {
  const std::vector<std::uint8_t> a{1, 0, 1, 0}, b{1, 1, 1, 1}, c{0, 1, 0, 1};
  CHECK(ber(a, a) == 0.0);
  CHECK(ber(a, c) == 1.0);
  CHECK(ber(a, b) == 0.5);
  CHECK_THROWS_AS(ber(a, std::vector<std::uint8_t>{1}), DimensionMismatch);
  CHECK_THROWS_AS(ber({}, {}), InvalidArgument);
}
