#include "primesteg/imageio.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>

namespace primesteg {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(width * height, fill) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != width_ * height_) {
    throw std::invalid_argument("pixel buffer holds " + std::to_string(pixels_.size()) +
                                " values, expected " + std::to_string(width_ * height_));
  }
}

namespace {

class HeaderReader {
public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const noexcept { return pos_; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t number(const char* field) {
    skip_space_and_comments();
    const auto* first = reinterpret_cast<const char*>(bytes_.data()) + pos_;
    const auto* last = reinterpret_cast<const char*>(bytes_.data()) + bytes_.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      throw FormatError(std::string("PGM header: missing or invalid ") + field);
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void single_space(const char* field) {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw FormatError(std::string("PGM header: expected whitespace after ") + field);
    }
    ++pos_;
  }

private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw FormatError("PGM magic: expected \"P5\"");
  }
  HeaderReader reader(bytes.subspan(2));
  const auto width = reader.number("width");
  const auto height = reader.number("height");
  const auto maxval = reader.number("maxval");
  if (width == 0) throw FormatError("PGM width must be positive");
  if (height == 0) throw FormatError("PGM height must be positive");
  if (maxval != 255) {
    throw FormatError("PGM maxval must be 255, got " + std::to_string(maxval));
  }
  reader.single_space("maxval");

  const std::size_t offset = 2 + reader.pos();
  const std::size_t available = bytes.size() - offset;
  if (width > std::numeric_limits<std::uint32_t>::max() ||
      height > std::numeric_limits<std::uint32_t>::max() || available / width < height) {
    throw FormatError("PGM raster truncated: expected " + std::to_string(width) + "x" +
                      std::to_string(height) + " bytes, found " + std::to_string(available));
  }
  const auto raster = bytes.subspan(offset, width * height);
  return GrayImage(width, height, std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  const std::string header =
      "P5\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

GrayImage load_pgm(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

void save_pgm(const std::filesystem::path& path, const GrayImage& image) {
  write_file(path, write_pgm(image));
}

GrayImage synth_image(std::size_t width, std::size_t height, SynthMode mode, std::uint32_t seed) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("synthetic image dimensions must be positive");
  }
  GrayImage image(width, height);
  switch (mode) {
    case SynthMode::gradient:
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          image.at(x, y) = static_cast<std::uint8_t>((x + y) % 256);
        }
      }
      break;
    case SynthMode::seeded_noise: {
      std::uint32_t state = seed;
      for (auto& px : image.pixels()) {
        state = state * 1664525u + 1013904223u;
        px = static_cast<std::uint8_t>(state >> 24);
      }
      break;
    }
  }
  return image;
}

}  // namespace primesteg
