#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dwtsteg {

/// 8-bit grayscale raster, row-major.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples);
  /// Image of the given size filled with `value`.
  GrayImage(std::size_t width, std::size_t height, std::uint8_t value = 0);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }

  std::span<const std::uint8_t> samples() const noexcept { return samples_; }
  std::span<std::uint8_t> samples() noexcept { return samples_; }

  std::uint8_t at(std::size_t x, std::size_t y) const { return samples_[y * width_ + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) { return samples_[y * width_ + x]; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> samples_;
};

/// Binary raster, row-major, every element 0 or 1. PBM convention: 1 is black.
class BitImage {
 public:
  BitImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits);
  BitImage(std::size_t width, std::size_t height, std::uint8_t value = 0);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return bits_.size(); }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  std::uint8_t at(std::size_t x, std::size_t y) const { return bits_[y * width_ + x]; }
  void set(std::size_t x, std::size_t y, bool v) { bits_[y * width_ + x] = v ? 1 : 0; }

  friend bool operator==(const BitImage&, const BitImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> bits_;
};

/// Width and height of a raster, as transmitted alongside the session key.
struct Size2 {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t area() const noexcept { return width * height; }
  friend bool operator==(const Size2&, const Size2&) = default;
};

inline Size2 dims(const BitImage& img) { return {img.width(), img.height()}; }

}  // namespace dwtsteg
