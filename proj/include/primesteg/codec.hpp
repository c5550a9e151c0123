#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primesteg/imageio.hpp"
#include "primesteg/numsys.hpp"

namespace primesteg {

class CapacityError : public std::runtime_error {
public:
  CapacityError(std::size_t required, std::size_t available);
  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

private:
  std::size_t required_;
  std::size_t available_;
};

/// The carrier ran out before the declared message was complete.
class TruncatedMessage : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The length header asks for more bits than the carrier can hold.
class MalformedHeader : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kFrameHeaderBits = 32;

/// Secret payload. On the wire: a 32-bit big-endian byte count, then the
/// payload bytes, every byte most significant bit first.
struct MessageFrame {
  std::vector<std::uint8_t> payload;

  std::size_t bit_length() const noexcept { return kFrameHeaderBits + 8 * payload.size(); }

  /// One entry (0 or 1) per wire bit.
  std::vector<std::uint8_t> to_bits() const;

  /// Inverse of to_bits. Throws TruncatedMessage if `bits` is shorter than
  /// the header or the length it declares.
  static MessageFrame from_bits(std::span<const std::uint8_t> bits);

  friend bool operator==(const MessageFrame&, const MessageFrame&) = default;
};

struct EmbedReport {
  std::size_t plane = 0;
  std::size_t bits_embedded = 0;
  std::size_t pixels_visited = 0;
  std::size_t pixels_skipped = 0;
  std::size_t capacity_bits = 0;
};

/// Per-value lookup for one (system, plane) pair, restricted to pixel values
/// 0..limit.
///
/// A value is usable when its canonical codeword stays canonical with the
/// plane bit forced to either 0 or 1, and both resulting values lie within
/// 0..limit. Both variants share the same usable status, so the set of
/// carrier pixels is identical before and after embedding.
class PlaneCarrier {
public:
  PlaneCarrier(const NumberSystem& sys, std::size_t plane, std::uint32_t limit);

  std::size_t plane() const noexcept { return plane_; }
  std::uint32_t limit() const noexcept { return static_cast<std::uint32_t>(entries_.size() - 1); }

  bool usable(std::uint32_t value) const { return entries_.at(value).usable; }
  bool bit(std::uint32_t value) const { return entries_.at(value).bit; }
  /// Value with the plane bit replaced. Only meaningful for usable values.
  std::uint32_t with_bit(std::uint32_t value, bool b) const {
    const auto& e = entries_.at(value);
    return b ? e.value_one : e.value_zero;
  }

private:
  struct Entry {
    bool usable = false;
    bool bit = false;
    std::uint32_t value_zero = 0;
    std::uint32_t value_one = 0;
  };

  std::size_t plane_;
  std::vector<Entry> entries_;
};

/// Both settings of `plane` in the canonical codeword of `pixel` are
/// themselves canonical.
bool embeddable(const NumberSystem& sys, std::uint32_t pixel, std::size_t plane);

/// Pixel value after writing `bit` into `plane`, or nothing when the pixel
/// cannot carry a bit there: not embeddable, or either bit setting would
/// leave [0, sys.max_pixel()].
std::optional<std::uint32_t> embed_bit(const NumberSystem& sys, std::uint32_t pixel,
                                       std::size_t plane, bool bit);

/// Number of carrier pixels, i.e. message bits (framing included) the image
/// can hold in `plane`.
std::size_t capacity(const GrayImage& image, const NumberSystem& sys, std::size_t plane);

struct EmbedResult {
  GrayImage stego;
  EmbedReport report;
};

/// Writes the frame into carrier pixels in row-major order. Non-carrier
/// pixels are left untouched and do not consume a bit.
EmbedResult embed_message(const GrayImage& cover, const NumberSystem& sys, std::size_t plane,
                          const MessageFrame& frame);

MessageFrame extract_message(const GrayImage& stego, const NumberSystem& sys, std::size_t plane);

}  // namespace primesteg
