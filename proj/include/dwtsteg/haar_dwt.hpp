#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dwtsteg/image.hpp"

namespace dwtsteg {

/// Real-valued row-major matrix of transform coefficients.
class CoefMatrix {
 public:
  CoefMatrix() = default;
  CoefMatrix(std::size_t width, std::size_t height, double value = 0.0);
  CoefMatrix(std::size_t width, std::size_t height, std::vector<double> values);
  explicit CoefMatrix(const GrayImage& img);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double at(std::size_t x, std::size_t y) const { return values_[y * width_ + x]; }
  double& at(std::size_t x, std::size_t y) { return values_[y * width_ + x]; }

  friend bool operator==(const CoefMatrix&, const CoefMatrix&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> values_;
};

/// One decomposition level. HL is high-pass along rows (top-right quadrant),
/// LH high-pass along columns (bottom-left).
struct SubbandSet {
  CoefMatrix ll;
  CoefMatrix lh;
  CoefMatrix hl;
  CoefMatrix hh;
};

/// One-level orthonormal 2-D Haar transform. For each 2x2 block [[a,b],[c,d]]:
///   LL = (a+b+c+d)/2, HL = (a-b+c-d)/2, LH = (a+b-c-d)/2, HH = (a-b-c+d)/2.
/// Throws OddDimension unless both dimensions are even.
SubbandSet forward_haar1(const GrayImage& img);
SubbandSet forward_haar1(const CoefMatrix& m);

/// Exact inverse of forward_haar1. Throws DimensionMismatch if the four
/// subbands differ in shape.
CoefMatrix inverse_haar1(const SubbandSet& bands);

/// Rounds half away from zero, then clamps to [0,255].
GrayImage quantize(const CoefMatrix& m);

}  // namespace dwtsteg
