#include <cmath>
#include <random>

#include "doctest.h"
#include "dwtsteg/error.hpp"
#include "dwtsteg/haar_dwt.hpp"
#include "oracles.hpp"

using namespace dwtsteg;

namespace {

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double energy(std::span<const double> v) {
  double e = 0;
  for (double x : v) e += x * x;
  return e;
}

}  // namespace

TEST_CASE("forward_haar1 closed-form examples") {
  const SubbandSet c = forward_haar1(GrayImage(2, 2, std::uint8_t{100}));
  CHECK(c.ll.values()[0] == 200.0);
  CHECK(c.lh.values()[0] == 0.0);
  CHECK(c.hl.values()[0] == 0.0);
  CHECK(c.hh.values()[0] == 0.0);

  const SubbandSet s = forward_haar1(GrayImage(2, 2, std::vector<std::uint8_t>{10, 20, 30, 40}));
  CHECK(s.ll.values()[0] == 50.0);
  CHECK(s.lh.values()[0] == -20.0);
  CHECK(s.hl.values()[0] == -10.0);
  CHECK(s.hh.values()[0] == 0.0);

  CHECK_THROWS_AS(forward_haar1(GrayImage(2, 3, std::uint8_t{0})), OddDimension);
  CHECK_THROWS_AS(forward_haar1(GrayImage(3, 2, std::uint8_t{0})), OddDimension);
}

TEST_CASE("forward_haar1 matches the H*A*H^T oracle") {
  std::mt19937_64 rng(11);
  for (auto [w, h] : {std::pair<std::size_t, std::size_t>{2, 2}, {4, 6}, {34, 18}, {64, 64}}) {
    const GrayImage img = oracle::random_gray(rng, w, h);
    const std::vector<double> px(img.samples().begin(), img.samples().end());
    const oracle::Bands ref = oracle::haar_matrix_product(px, w, h);
    const SubbandSet got = forward_haar1(img);
    CHECK(max_abs_diff(got.ll.values(), ref.ll) < 1e-9);
    CHECK(max_abs_diff(got.hl.values(), ref.hl) < 1e-9);
    CHECK(max_abs_diff(got.lh.values(), ref.lh) < 1e-9);
    CHECK(max_abs_diff(got.hh.values(), ref.hh) < 1e-9);
  }
}

TEST_CASE("inverse_haar1 examples") {
  SubbandSet c{CoefMatrix(1, 1, 200.0), CoefMatrix(1, 1), CoefMatrix(1, 1), CoefMatrix(1, 1)};
  CHECK(inverse_haar1(c) == CoefMatrix(2, 2, 100.0));

  SubbandSet s{CoefMatrix(1, 1, 50.0), CoefMatrix(1, 1, -20.0), CoefMatrix(1, 1, -10.0),
               CoefMatrix(1, 1, 0.0)};
  CHECK(inverse_haar1(s) == CoefMatrix(2, 2, std::vector<double>{10, 20, 30, 40}));

  SubbandSet bad{CoefMatrix(2, 1), CoefMatrix(2, 1), CoefMatrix(1, 2), CoefMatrix(2, 1)};
  CHECK_THROWS_AS(inverse_haar1(bad), DimensionMismatch);
}

TEST_CASE("perfect reconstruction, energy and linearity") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> half(1, 80);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t w = 2 * half(rng), h = 2 * half(rng);
    const GrayImage x = oracle::random_gray(rng, w, h);
    const GrayImage y = oracle::random_gray(rng, w, h);
    const CoefMatrix mx(x), my(y);
    const SubbandSet bx = forward_haar1(x);

    const CoefMatrix back = inverse_haar1(bx);
    CHECK(max_abs_diff(back.values(), mx.values()) < 1e-9);
    CHECK(quantize(back) == x);

    const double e_px = energy(mx.values());
    const double e_co = energy(bx.ll.values()) + energy(bx.lh.values()) +
                        energy(bx.hl.values()) + energy(bx.hh.values());
    CHECK(std::abs(e_px - e_co) <= 1e-9 * e_px);

    const double alpha = 0.37, beta = -1.9;
    std::vector<double> combo(mx.size());
    for (std::size_t i = 0; i < combo.size(); ++i) {
      combo[i] = alpha * mx.values()[i] + beta * my.values()[i];
    }
    const SubbandSet bc = forward_haar1(CoefMatrix(w, h, combo));
    const SubbandSet by = forward_haar1(y);
    const std::pair<const CoefMatrix*, std::pair<const CoefMatrix*, const CoefMatrix*>> parts[] = {
        {&bc.ll, {&bx.ll, &by.ll}},
        {&bc.lh, {&bx.lh, &by.lh}},
        {&bc.hl, {&bx.hl, &by.hl}},
        {&bc.hh, {&bx.hh, &by.hh}}};
    for (const auto& [got, ab] : parts) {
      double worst = 0;
      for (std::size_t i = 0; i < got->size(); ++i) {
        const double want = alpha * ab.first->values()[i] + beta * ab.second->values()[i];
        worst = std::max(worst, std::abs(got->values()[i] - want));
      }
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("quantize rounding and clamping") {
  const CoefMatrix m(6, 1, std::vector<double>{100.0, 255.7, -3.2, 99.5, 0.49, -0.5});
  const GrayImage q = quantize(m);
  CHECK(q.samples()[0] == 100);
  CHECK(q.samples()[1] == 255);
  CHECK(q.samples()[2] == 0);
  CHECK(q.samples()[3] == 100);
  CHECK(q.samples()[4] == 0);
  CHECK(q.samples()[5] == 0);

  std::mt19937_64 rng(5);
  const GrayImage g = oracle::random_gray(rng, 9, 7);
  CHECK(quantize(CoefMatrix(g)) == g);
  CHECK(quantize(CoefMatrix(quantize(CoefMatrix(g)))) == g);
}
