#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dwtsteg/image.hpp"

namespace dwtsteg {

// Netpbm codecs. Readers accept P5/P2 (PGM) and P4/P1 (PBM) with '#'
// comments and arbitrary whitespace between header tokens; writers always
// emit the canonical binary form. Bytes past the declared raster are ignored.

GrayImage parse_pgm(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

BitImage parse_pbm(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> write_pbm(const BitImage& img);

/// Row-major bit vector of `img`.
std::vector<std::uint8_t> flatten_bits(const BitImage& img);
/// Inverse of flatten_bits. Throws DimensionMismatch if v.size() != width*height.
BitImage unflatten_bits(std::span<const std::uint8_t> v, std::size_t width, std::size_t height);

/// Whole-file helpers. Throw Error on I/O failure.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

GrayImage load_pgm(const std::filesystem::path& path);
BitImage load_pbm(const std::filesystem::path& path);

}  // namespace dwtsteg
