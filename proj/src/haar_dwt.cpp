#include "dwtsteg/haar_dwt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dwtsteg/error.hpp"
#include "dwtsteg/simd/kernels.hpp"

namespace dwtsteg {

CoefMatrix::CoefMatrix(std::size_t width, std::size_t height, double value)
    : width_(width), height_(height), values_(width * height, value) {}

CoefMatrix::CoefMatrix(std::size_t width, std::size_t height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (values_.size() != width_ * height_) {
    throw DimensionMismatch("CoefMatrix: " + std::to_string(values_.size()) + " values for " +
                            std::to_string(width_) + "x" + std::to_string(height_));
  }
}

CoefMatrix::CoefMatrix(const GrayImage& img)
    : width_(img.width()),
      height_(img.height()),
      values_(img.samples().begin(), img.samples().end()) {}

SubbandSet forward_haar1(const GrayImage& img) { return forward_haar1(CoefMatrix(img)); }

SubbandSet forward_haar1(const CoefMatrix& m) {
  if (m.width() % 2 != 0 || m.height() % 2 != 0 || m.width() == 0 || m.height() == 0) {
    throw OddDimension("Haar transform needs even dimensions, got " + std::to_string(m.width()) +
                       "x" + std::to_string(m.height()));
  }
  const std::size_t hw = m.width() / 2, hh = m.height() / 2;
  SubbandSet out{CoefMatrix(hw, hh), CoefMatrix(hw, hh), CoefMatrix(hw, hh), CoefMatrix(hw, hh)};
  const auto& k = simd::active_kernels();
  const double* src = m.values().data();
  for (std::size_t y = 0; y < hh; ++y) {
    const double* row0 = src + (2 * y) * m.width();
    const double* row1 = row0 + m.width();
    k.haar_forward_row(row0, row1, out.ll.values().data() + y * hw,
                       out.hl.values().data() + y * hw, out.lh.values().data() + y * hw,
                       out.hh.values().data() + y * hw, hw);
  }
  return out;
}

CoefMatrix inverse_haar1(const SubbandSet& bands) {
  const std::size_t hw = bands.ll.width(), hh = bands.ll.height();
  for (const CoefMatrix* b : {&bands.lh, &bands.hl, &bands.hh}) {
    if (b->width() != hw || b->height() != hh) {
      throw DimensionMismatch("subbands differ in shape");
    }
  }
  if (hw == 0 || hh == 0) throw DimensionMismatch("empty subbands");
  CoefMatrix out(2 * hw, 2 * hh);
  const auto& k = simd::active_kernels();
  for (std::size_t y = 0; y < hh; ++y) {
    double* row0 = out.values().data() + (2 * y) * out.width();
    double* row1 = row0 + out.width();
    k.haar_inverse_row(bands.ll.values().data() + y * hw, bands.hl.values().data() + y * hw,
                       bands.lh.values().data() + y * hw, bands.hh.values().data() + y * hw, row0,
                       row1, hw);
  }
  return out;
}

GrayImage quantize(const CoefMatrix& m) {
  std::vector<std::uint8_t> samples(m.size());
  std::transform(m.values().begin(), m.values().end(), samples.begin(), [](double v) {
    // std::round is half-away-from-zero.
    return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
  });
  return GrayImage(m.width(), m.height(), std::move(samples));
}

}  // namespace dwtsteg
