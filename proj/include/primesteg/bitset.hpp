#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace primesteg {

/// Fixed-size bit set used as a subset-sum reachability table.
///
/// Bit `v` set means the value `v` can be written as a sum of some subset of
/// the weights seen so far. The size is fixed at construction; shifts drop
/// bits that fall off the top.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t pos) const noexcept;
  void set(std::size_t pos) noexcept;

  /// Sets every bit `v + shift` for which bit `v` is set (within size).
  void or_shifted(const Bitset& other, std::size_t shift) noexcept;

  std::size_t count() const noexcept;

  /// True when bits [0, last] are all set.
  bool covers_prefix(std::size_t last) const noexcept;

  friend bool operator==(const Bitset&, const Bitset&) = default;

private:
  static constexpr std::size_t kWordBits = 64;

  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace primesteg
