#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace primesteg {

inline constexpr int kImageBitDepth = 8;

/// Raised for malformed PGM input. The message names the offending field.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// 8-bit grayscale raster, row-major.
class GrayImage {
public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_.at(y * width_ + x); }
  std::uint8_t& at(std::size_t x, std::size_t y) { return pixels_.at(y * width_ + x); }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Binary PGM (P5) with maxval 255. Comment lines in the header are skipped.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// "P5\n<w> <h>\n255\n" followed by the raster.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& image);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

enum class SynthMode { gradient, seeded_noise };

/// gradient: pixel(x, y) = (x + y) mod 256.
/// seeded_noise: state <- state * 1664525 + 1013904223 (mod 2^32), advanced
/// once per pixel before use; the pixel is the high byte of the state.
GrayImage synth_image(std::size_t width, std::size_t height, SynthMode mode,
                      std::uint32_t seed = 0);

}  // namespace primesteg
