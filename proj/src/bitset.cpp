#include "primesteg/bitset.hpp"

#include <bit>

namespace primesteg {

Bitset::Bitset(std::size_t size)
    : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

bool Bitset::test(std::size_t pos) const noexcept {
  if (pos >= size_) return false;
  return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1u;
}

void Bitset::set(std::size_t pos) noexcept {
  if (pos >= size_) return;
  words_[pos / kWordBits] |= std::uint64_t{1} << (pos % kWordBits);
}

void Bitset::or_shifted(const Bitset& other, std::size_t shift) noexcept {
  const std::size_t word_shift = shift / kWordBits;
  const std::size_t bit_shift = shift % kWordBits;
  const std::size_t n = words_.size();
  const std::size_t src_n = other.words_.size();

  // Walk downward so that `other` may alias `*this`.
  for (std::size_t i = n; i-- > word_shift;) {
    const std::size_t src = i - word_shift;
    std::uint64_t w = src < src_n ? other.words_[src] << bit_shift : 0;
    if (bit_shift != 0 && src >= 1 && src - 1 < src_n) {
      w |= other.words_[src - 1] >> (kWordBits - bit_shift);
    }
    words_[i] |= w;
  }
  clear_tail();
}

std::size_t Bitset::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::covers_prefix(std::size_t last) const noexcept {
  if (last >= size_) return false;
  const std::size_t full_words = (last + 1) / kWordBits;
  for (std::size_t i = 0; i < full_words; ++i) {
    if (words_[i] != ~std::uint64_t{0}) return false;
  }
  const std::size_t rest = (last + 1) % kWordBits;
  if (rest == 0) return true;
  const std::uint64_t mask = (std::uint64_t{1} << rest) - 1;
  return (words_[full_words] & mask) == mask;
}

void Bitset::clear_tail() noexcept {
  const std::size_t rest = size_ % kWordBits;
  if (rest != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << rest) - 1;
  }
}

}  // namespace primesteg
