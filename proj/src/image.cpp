#include "dwtsteg/image.hpp"

#include <algorithm>
#include <string>

#include "dwtsteg/error.hpp"

namespace dwtsteg {
namespace {

void check_shape(std::size_t width, std::size_t height, std::size_t n, const char* what) {
  if (width == 0 || height == 0) {
    throw InvalidArgument(std::string(what) + ": width and height must be positive");
  }
  if (n != width * height) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(n) + " elements for " +
                            std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  check_shape(width_, height_, samples_.size(), "GrayImage");
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t value)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, value)) {}

BitImage::BitImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  check_shape(width_, height_, bits_.size(), "BitImage");
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw InvalidArgument("BitImage: elements must be 0 or 1");
  }
}

BitImage::BitImage(std::size_t width, std::size_t height, std::uint8_t value)
    : BitImage(width, height, std::vector<std::uint8_t>(width * height, value)) {}

}  // namespace dwtsteg
