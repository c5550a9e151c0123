#include "primesteg/codec.hpp"

#include <algorithm>

namespace primesteg {

namespace {

void check_plane(const NumberSystem& sys, std::size_t plane) {
  if (plane >= sys.plane_count()) {
    throw std::invalid_argument("plane " + std::to_string(plane) + " out of range for " +
                                sys.name() + " (valid 0.." +
                                std::to_string(sys.plane_count() - 1) + ")");
  }
}

void check_pixel(const NumberSystem& sys, std::uint32_t pixel) {
  if (pixel > sys.max_pixel()) {
    throw std::invalid_argument("pixel value " + std::to_string(pixel) + " exceeds " +
                                std::to_string(sys.max_pixel()) + " for " + sys.name());
  }
}

constexpr std::uint32_t kImageMax = (1u << kImageBitDepth) - 1;

PlaneCarrier image_carrier(const NumberSystem& sys, std::size_t plane) {
  check_plane(sys, plane);
  if (sys.max_pixel() < kImageMax) {
    throw std::invalid_argument("system " + sys.name() + " covers values up to " +
                                std::to_string(sys.max_pixel()) + ", images need " +
                                std::to_string(kImageMax));
  }
  return PlaneCarrier(sys, plane, kImageMax);
}

struct Variants {
  bool current;
  std::uint64_t zero;
  std::uint64_t one;
  bool both_canonical;
};

Variants variants(const NumberSystem& sys, std::uint32_t pixel, std::size_t plane) {
  Codeword word = decompose(sys, pixel);
  Variants v{word.bit(plane), 0, 0, true};
  word.set_bit(plane, false);
  v.zero = compose(sys, word);
  v.both_canonical = is_canonical(sys, word);
  word.set_bit(plane, true);
  v.one = compose(sys, word);
  v.both_canonical = v.both_canonical && is_canonical(sys, word);
  return v;
}

}  // namespace

CapacityError::CapacityError(std::size_t required, std::size_t available)
    : std::runtime_error("capacity exceeded: message needs " + std::to_string(required) +
                         " bits, carrier holds " + std::to_string(available)),
      required_(required),
      available_(available) {}

// --- MessageFrame -----------------------------------------------------------

std::vector<std::uint8_t> MessageFrame::to_bits() const {
  if (payload.size() > 0xFFFFFFFFu) throw std::length_error("payload exceeds 2^32 - 1 bytes");
  std::vector<std::uint8_t> bits;
  bits.reserve(bit_length());
  const auto length = static_cast<std::uint32_t>(payload.size());
  for (int i = 31; i >= 0; --i) bits.push_back((length >> i) & 1u);
  for (auto byte : payload) {
    for (int i = 7; i >= 0; --i) bits.push_back((byte >> i) & 1u);
  }
  return bits;
}

MessageFrame MessageFrame::from_bits(std::span<const std::uint8_t> bits) {
  if (bits.size() < kFrameHeaderBits) {
    throw TruncatedMessage("message ends inside the 32-bit length header (" +
                           std::to_string(bits.size()) + " bits available)");
  }
  std::uint32_t length = 0;
  for (std::size_t i = 0; i < kFrameHeaderBits; ++i) length = (length << 1) | (bits[i] & 1u);
  const std::size_t needed = kFrameHeaderBits + 8 * std::size_t{length};
  if (bits.size() < needed) {
    throw TruncatedMessage("message declares " + std::to_string(length) + " bytes but only " +
                           std::to_string((bits.size() - kFrameHeaderBits) / 8) + " follow");
  }
  MessageFrame frame;
  frame.payload.resize(length);
  auto it = bits.begin() + kFrameHeaderBits;
  for (auto& byte : frame.payload) {
    for (int i = 0; i < 8; ++i) byte = static_cast<std::uint8_t>((byte << 1) | (*it++ & 1u));
  }
  return frame;
}

// --- Per-pixel rules --------------------------------------------------------

PlaneCarrier::PlaneCarrier(const NumberSystem& sys, std::size_t plane, std::uint32_t limit)
    : plane_(plane) {
  check_plane(sys, plane);
  check_pixel(sys, limit);
  entries_.resize(std::size_t{limit} + 1);
  for (std::uint32_t value = 0; value <= limit; ++value) {
    const auto v = variants(sys, value, plane);
    auto& e = entries_[value];
    e.bit = v.current;
    e.usable = v.both_canonical && v.zero <= limit && v.one <= limit;
    if (e.usable) {
      e.value_zero = static_cast<std::uint32_t>(v.zero);
      e.value_one = static_cast<std::uint32_t>(v.one);
    } else {
      e.value_zero = e.value_one = value;
    }
  }
}

bool embeddable(const NumberSystem& sys, std::uint32_t pixel, std::size_t plane) {
  check_plane(sys, plane);
  check_pixel(sys, pixel);
  return variants(sys, pixel, plane).both_canonical;
}

std::optional<std::uint32_t> embed_bit(const NumberSystem& sys, std::uint32_t pixel,
                                       std::size_t plane, bool bit) {
  check_plane(sys, plane);
  check_pixel(sys, pixel);
  const auto v = variants(sys, pixel, plane);
  if (!v.both_canonical || v.zero > sys.max_pixel() || v.one > sys.max_pixel()) {
    return std::nullopt;
  }
  return static_cast<std::uint32_t>(bit ? v.one : v.zero);
}

// --- Image level ------------------------------------------------------------

std::size_t capacity(const GrayImage& image, const NumberSystem& sys, std::size_t plane) {
  const auto carrier = image_carrier(sys, plane);
  const auto px = image.pixels();
  return static_cast<std::size_t>(
      std::count_if(px.begin(), px.end(), [&](std::uint8_t v) { return carrier.usable(v); }));
}

EmbedResult embed_message(const GrayImage& cover, const NumberSystem& sys, std::size_t plane,
                          const MessageFrame& frame) {
  const auto carrier = image_carrier(sys, plane);
  const auto bits = frame.to_bits();

  EmbedResult result{cover, {}};
  auto& report = result.report;
  report.plane = plane;
  const auto px = cover.pixels();
  report.capacity_bits = static_cast<std::size_t>(
      std::count_if(px.begin(), px.end(), [&](std::uint8_t v) { return carrier.usable(v); }));
  if (bits.size() > report.capacity_bits) throw CapacityError(bits.size(), report.capacity_bits);

  auto out = result.stego.pixels();
  for (std::size_t i = 0; i < out.size() && report.bits_embedded < bits.size(); ++i) {
    ++report.pixels_visited;
    if (!carrier.usable(out[i])) {
      ++report.pixels_skipped;
      continue;
    }
    out[i] = static_cast<std::uint8_t>(carrier.with_bit(out[i], bits[report.bits_embedded++]));
  }
  return result;
}

MessageFrame extract_message(const GrayImage& stego, const NumberSystem& sys, std::size_t plane) {
  const auto carrier = image_carrier(sys, plane);
  std::vector<std::uint8_t> bits;
  for (auto v : stego.pixels()) {
    if (carrier.usable(v)) bits.push_back(carrier.bit(v) ? 1 : 0);
  }
  if (bits.size() >= kFrameHeaderBits) {
    std::uint64_t length = 0;
    for (std::size_t i = 0; i < kFrameHeaderBits; ++i) length = (length << 1) | bits[i];
    const std::size_t room = bits.size() - kFrameHeaderBits;
    if (8 * length > room) {
      throw MalformedHeader("header declares " + std::to_string(length) + " bytes but the carrier holds " +
                            std::to_string(room / 8) + " after the header");
    }
  }
  return MessageFrame::from_bits(bits);
}

}  // namespace primesteg
