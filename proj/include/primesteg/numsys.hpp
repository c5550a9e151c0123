#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primesteg/bitset.hpp"

namespace primesteg {

enum class SystemKind { binary, fibonacci, prime };

inline constexpr int kMinBitDepth = 1;
inline constexpr int kMaxBitDepth = 16;

/// Largest Fibonacci order accepted by the system builders. Larger orders
/// need thousands of unit-weight planes before the pixel range is covered.
inline constexpr unsigned kMaxFibonacciOrder = 128;

/// One pixel value written as 0/1 digits over the planes of a NumberSystem.
/// Digit 0 is the least significant plane.
class Codeword {
public:
  Codeword() = default;
  explicit Codeword(std::size_t planes) : digits_(planes, 0) {}

  /// Parses a '0'/'1' string written most significant plane first.
  static Codeword from_string(std::string_view msb_first);

  std::size_t size() const noexcept { return digits_.size(); }
  bool bit(std::size_t plane) const { return digits_.at(plane) != 0; }
  void set_bit(std::size_t plane, bool value) { digits_.at(plane) = value ? 1 : 0; }

  /// Most significant plane first, as the codebook tables are printed.
  std::string to_string() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;

  /// Lexicographic order read from the most significant plane down.
  /// Only meaningful between codewords of equal length.
  friend std::strong_ordering operator<=>(const Codeword& a, const Codeword& b);

private:
  std::vector<std::uint8_t> digits_;
};

/// A radix-2 positional system with an arbitrary weight per plane.
///
/// Built by the make_* functions below. Construction fills the prefix
/// reachability tables and verifies that every value in [0, max_pixel()] can
/// be represented; after that the object is immutable.
class NumberSystem {
public:
  SystemKind kind() const noexcept { return kind_; }
  /// Fibonacci order p; 0 for binary and prime systems.
  unsigned order() const noexcept { return order_; }
  int bit_depth() const noexcept { return bit_depth_; }

  std::span<const std::uint32_t> weights() const noexcept { return weights_; }
  std::uint32_t weight(std::size_t plane) const;
  std::size_t plane_count() const noexcept { return weights_.size(); }
  std::uint64_t weight_sum() const noexcept { return weight_sum_; }

  /// Largest pixel value the system is asked to carry: 2^k - 1, or the
  /// weight sum for systems built with an explicit plane count.
  std::uint32_t max_pixel() const noexcept { return max_pixel_; }

  /// Values expressible with planes [0, planes). `planes` runs 0..plane_count().
  const Bitset& reach(std::size_t planes) const;
  bool representable(std::uint64_t value) const noexcept;

  /// "binary", "prime" or "fib:<p>".
  std::string name() const;

private:
  friend NumberSystem build_system(SystemKind, unsigned, int, std::vector<std::uint32_t>,
                                   std::uint32_t);

  NumberSystem() = default;

  SystemKind kind_ = SystemKind::binary;
  unsigned order_ = 0;
  int bit_depth_ = 0;
  std::uint32_t max_pixel_ = 0;
  std::uint64_t weight_sum_ = 0;
  std::vector<std::uint32_t> weights_;
  std::vector<Bitset> reach_;
};

/// Weights 2^0 .. 2^(k-1).
NumberSystem make_binary_system(int bit_depth);

/// Weights 1, 2, 3, 5, 7, ... truncated at the first prefix whose sum reaches
/// 2^k - 1.
NumberSystem make_prime_system(int bit_depth);

/// Weights F_p(1), F_p(2), ... : every term of the Fibonacci p-sequence that
/// does not exceed 2^k - 1, extended further if the pixel range is not yet
/// covered.
NumberSystem make_fibonacci_system(unsigned order, int bit_depth);

/// The first `planes` weights of a system kind, with no sizing rule applied.
/// Values run 0..sum of the weights; used for small worked tables.
NumberSystem make_system_with_planes(SystemKind kind, std::size_t planes, unsigned order = 1);

// Raw weight sequences, independent of any bit depth.
std::vector<std::uint64_t> binary_weights(std::size_t count);
std::vector<std::uint64_t> prime_weights(std::size_t count);
std::vector<std::uint64_t> fibonacci_weights(unsigned order, std::size_t count);

/// Fibonacci p-sequence term: F_p(n) = 1 for n <= p, else F_p(n-1) + F_p(n-p-1).
std::uint64_t fibonacci_term(unsigned order, std::size_t n);

/// Lexicographically greatest codeword whose weighted sum is `value`.
Codeword decompose(const NumberSystem& sys, std::uint64_t value);

/// Weighted digit sum. Accepts non-canonical codewords.
std::uint64_t compose(const NumberSystem& sys, const Codeword& word);

bool is_canonical(const NumberSystem& sys, const Codeword& word);

struct CodebookEntry {
  std::uint64_t value;
  Codeword word;
};

std::vector<CodebookEntry> codebook(const NumberSystem& sys, std::uint64_t max_value);

/// CSV with header `value,codeword`, codewords most significant plane first.
std::string codebook_csv(std::span<const CodebookEntry> entries);

}  // namespace primesteg
