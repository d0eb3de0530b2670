#include "dwtsteg/pixel_io.hpp"

#include <atomic>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include <unistd.h>

#include "dwtsteg/error.hpp"

namespace dwtsteg {
namespace {

// Rasters larger than this are rejected before allocation.
constexpr std::size_t kMaxDimension = 1u << 16;

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }
  std::span<const std::uint8_t> take(std::size_t n) {
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  /// Two-byte magic number, e.g. "P5". Returns the digit.
  char magic() {
    if (data_.size() < 2 || data_[0] != 'P') throw ParseError("bad magic number", 0);
    pos_ = 2;
    return static_cast<char>(data_[1]);
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      const std::uint8_t c = data_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t unsigned_int(const char* what) {
    skip_space_and_comments();
    if (at_end()) throw ParseError(std::string("truncated header: missing ") + what, pos_);
    if (data_[pos_] < '0' || data_[pos_] > '9') {
      throw ParseError(std::string("expected decimal ") + what, pos_);
    }
    std::size_t v = 0;
    const std::size_t start = pos_;
    while (!at_end() && data_[pos_] >= '0' && data_[pos_] <= '9') {
      v = v * 10 + (data_[pos_] - '0');
      if (v > 0xFFFFFFFFu) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    return v;
  }

  /// Raster data starts after exactly one whitespace byte.
  void single_space() {
    if (at_end()) throw ParseError("truncated header", pos_);
    if (!is_space(data_[pos_])) throw ParseError("expected whitespace before raster", pos_);
    ++pos_;
  }

  /// Position of the next header token.
  std::size_t token_start() {
    skip_space_and_comments();
    return pos_;
  }

  std::uint8_t peek() const { return data_[pos_]; }
  void advance() { ++pos_; }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

Size2 read_dimensions(Reader& r) {
  const std::size_t at = r.token_start();
  const std::size_t w = r.unsigned_int("width");
  const std::size_t h = r.unsigned_int("height");
  if (w == 0 || h == 0) throw ParseError("zero image dimension", at);
  if (w > kMaxDimension || h > kMaxDimension) throw ParseError("image dimension too large", at);
  return {w, h};
}

void append_header(std::vector<std::uint8_t>& out, const char* magic, std::size_t w,
                   std::size_t h) {
  const std::string header = std::string(magic) + "\n" + std::to_string(w) + " " +
                             std::to_string(h) + "\n";
  out.insert(out.end(), header.begin(), header.end());
}

}  // namespace

GrayImage parse_pgm(std::span<const std::uint8_t> data) {
  Reader r(data);
  const char kind = r.magic();
  if (kind != '5' && kind != '2') throw ParseError("bad magic number: not a PGM", 0);
  const Size2 size = read_dimensions(r);
  const std::size_t maxval_at = r.token_start();
  const std::size_t maxval = r.unsigned_int("maxval");
  if (maxval > 255) throw ParseError("maxval above 255 is not supported", maxval_at);
  if (maxval != 255) throw ParseError("maxval must be 255", maxval_at);

  const std::size_t n = size.area();
  std::vector<std::uint8_t> samples;
  if (kind == '5') {
    r.single_space();
    if (r.remaining() < n) {
      throw ParseError("truncated raster: need " + std::to_string(n) + " bytes, have " +
                           std::to_string(r.remaining()),
                       data.size());
    }
    const auto raster = r.take(n);
    samples.assign(raster.begin(), raster.end());
  } else {
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.skip_space_and_comments();
      if (r.at_end()) throw ParseError("truncated raster", r.pos());
      const std::size_t at = r.pos();
      const std::size_t v = r.unsigned_int("sample");
      if (v > maxval) throw ParseError("sample out of range", at);
      samples.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return GrayImage(size.width, size.height, std::move(samples));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
  std::vector<std::uint8_t> out;
  out.reserve(img.size() + 32);
  append_header(out, "P5", img.width(), img.height());
  const std::string maxval = "255\n";
  out.insert(out.end(), maxval.begin(), maxval.end());
  out.insert(out.end(), img.samples().begin(), img.samples().end());
  return out;
}

BitImage parse_pbm(std::span<const std::uint8_t> data) {
  Reader r(data);
  const char kind = r.magic();
  if (kind != '4' && kind != '1') throw ParseError("bad magic number: not a PBM", 0);
  const Size2 size = read_dimensions(r);

  std::vector<std::uint8_t> bits;
  bits.reserve(size.area());
  if (kind == '4') {
    r.single_space();
    const std::size_t row_bytes = (size.width + 7) / 8;
    for (std::size_t y = 0; y < size.height; ++y) {
      if (r.remaining() < row_bytes) throw ParseError("truncated row " + std::to_string(y), data.size());
      const auto row = r.take(row_bytes);
      for (std::size_t x = 0; x < size.width; ++x) {
        bits.push_back((row[x / 8] >> (7 - x % 8)) & 1u);
      }
    }
  } else {
    // P1 pixels are single characters; whitespace between them is optional.
    for (std::size_t i = 0; i < size.area(); ++i) {
      r.skip_space_and_comments();
      if (r.at_end()) throw ParseError("truncated raster", r.pos());
      const std::uint8_t c = r.peek();
      if (c != '0' && c != '1') throw ParseError("PBM sample is not 0 or 1", r.pos());
      bits.push_back(c == '1' ? 1 : 0);
      r.advance();
    }
  }
  return BitImage(size.width, size.height, std::move(bits));
}

std::vector<std::uint8_t> write_pbm(const BitImage& img) {
  std::vector<std::uint8_t> out;
  const std::size_t row_bytes = (img.width() + 7) / 8;
  out.reserve(row_bytes * img.height() + 24);
  append_header(out, "P4", img.width(), img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    const std::size_t row_start = out.size();
    out.resize(row_start + row_bytes, 0);
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (img.at(x, y)) out[row_start + x / 8] |= static_cast<std::uint8_t>(0x80u >> (x % 8));
    }
  }
  return out;
}

std::vector<std::uint8_t> flatten_bits(const BitImage& img) {
  return {img.bits().begin(), img.bits().end()};
}

BitImage unflatten_bits(std::span<const std::uint8_t> v, std::size_t width, std::size_t height) {
  if (v.size() != width * height) {
    throw DimensionMismatch("bit vector of length " + std::to_string(v.size()) +
                            " cannot be reshaped to " + std::to_string(width) + "x" +
                            std::to_string(height));
  }
  return BitImage(width, height, std::vector<std::uint8_t>(v.begin(), v.end()));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error("read error on " + path.string());
  return bytes;
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid()) + "-" + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot create " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("write error on " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

GrayImage load_pgm(const std::filesystem::path& path) { return parse_pgm(read_file(path)); }

BitImage load_pbm(const std::filesystem::path& path) { return parse_pbm(read_file(path)); }

}  // namespace dwtsteg
