#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dwtsteg/haar_dwt.hpp"
#include "dwtsteg/image.hpp"

namespace dwtsteg {

/// 10*log10(255² / MSE) in dB; +infinity for identical images.
/// Throws DimensionMismatch.
double psnr(const GrayImage& a, const GrayImage& b);
double mse(const GrayImage& a, const GrayImage& b);

/// Standard (two-pass) Pearson correlation coefficient.
/// Throws DimensionMismatch on unequal or too-short inputs and
/// UndefinedCorrelation when either vector is constant.
double pearson(std::span<const double> x, std::span<const double> y);
double pearson(const GrayImage& a, const GrayImage& b);
double pearson(const BitImage& a, const BitImage& b);
/// Pearson over the concatenated one-level Haar subbands of both images.
double wavelet_pearson(const CoefMatrix& a, const CoefMatrix& b);
double wavelet_pearson(const GrayImage& a, const GrayImage& b);

/// Fraction of differing positions.
double ber(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

struct MetricReport {
  std::optional<double> psnr_db;
  std::optional<double> correlation;
  std::optional<double> ber;
};

}  // namespace dwtsteg
