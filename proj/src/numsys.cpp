#include "primesteg/numsys.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace primesteg {

namespace {

void check_bit_depth(int bit_depth) {
  if (bit_depth < kMinBitDepth || bit_depth > kMaxBitDepth) {
    throw std::invalid_argument("bit depth must be in [1, 16], got " + std::to_string(bit_depth));
  }
}

void check_order(unsigned order) {
  if (order < 1 || order > kMaxFibonacciOrder) {
    throw std::invalid_argument("fibonacci order must be in [1, " +
                                std::to_string(kMaxFibonacciOrder) + "], got " +
                                std::to_string(order));
  }
}

std::uint32_t pixel_limit(int bit_depth) { return (std::uint32_t{1} << bit_depth) - 1; }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("weight sequence exceeds 64-bit range");
  }
  return a + b;
}

void check_length(const NumberSystem& sys, const Codeword& word) {
  if (word.size() != sys.plane_count()) {
    throw std::invalid_argument("codeword has " + std::to_string(word.size()) +
                                " planes, system " + sys.name() + " has " +
                                std::to_string(sys.plane_count()));
  }
}

// Pulls weights from `next` until one exceeds `limit`; that one is dropped.
template <typename Next>
std::vector<std::uint32_t> take_while_at_most(std::uint64_t limit, Next next) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t w = next(); w <= limit; w = next()) {
    out.push_back(static_cast<std::uint32_t>(w));
  }
  return out;
}

}  // namespace

// --- Codeword ---------------------------------------------------------------

Codeword Codeword::from_string(std::string_view msb_first) {
  Codeword word(msb_first.size());
  for (std::size_t i = 0; i < msb_first.size(); ++i) {
    const char c = msb_first[msb_first.size() - 1 - i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("codeword digits must be '0' or '1'");
    }
    word.digits_[i] = c == '1' ? 1 : 0;
  }
  return word;
}

std::string Codeword::to_string() const {
  std::string s;
  s.reserve(digits_.size());
  for (std::size_t i = digits_.size(); i-- > 0;) s.push_back(digits_[i] ? '1' : '0');
  return s;
}

std::strong_ordering operator<=>(const Codeword& a, const Codeword& b) {
  return std::lexicographical_compare_three_way(a.digits_.rbegin(), a.digits_.rend(),
                                                b.digits_.rbegin(), b.digits_.rend());
}

// --- NumberSystem -----------------------------------------------------------

NumberSystem build_system(SystemKind kind, unsigned order, int bit_depth,
                          std::vector<std::uint32_t> weights, std::uint32_t max_pixel) {
  if (weights.empty() || weights.front() != 1) {
    throw std::logic_error("number system must start with a unit weight");
  }

  NumberSystem sys;
  sys.kind_ = kind;
  sys.order_ = order;
  sys.bit_depth_ = bit_depth;
  sys.max_pixel_ = max_pixel;
  sys.weights_ = std::move(weights);

  // reach[i] only needs to hold values up to the sum of the first i weights.
  sys.reach_.reserve(sys.weights_.size() + 1);
  Bitset first(1);
  first.set(0);
  sys.reach_.push_back(std::move(first));
  std::uint64_t prefix = 0;
  for (auto w : sys.weights_) {
    prefix += w;
    Bitset next(prefix + 1);
    next.or_shifted(sys.reach_.back(), 0);
    next.or_shifted(sys.reach_.back(), w);
    sys.reach_.push_back(std::move(next));
  }
  sys.weight_sum_ = prefix;

  if (!sys.reach_.back().covers_prefix(max_pixel)) {
    throw std::logic_error("system " + sys.name() + " cannot represent every value up to " +
                           std::to_string(max_pixel));
  }
  return sys;
}

std::uint32_t NumberSystem::weight(std::size_t plane) const {
  if (plane >= weights_.size()) {
    throw std::invalid_argument("plane " + std::to_string(plane) + " out of range for " + name() +
                                " (valid 0.." + std::to_string(weights_.size() - 1) + ")");
  }
  return weights_[plane];
}

const Bitset& NumberSystem::reach(std::size_t planes) const {
  if (planes > weights_.size()) throw std::out_of_range("reach prefix out of range");
  return reach_[planes];
}

bool NumberSystem::representable(std::uint64_t value) const noexcept {
  return reach_.back().test(value);
}

std::string NumberSystem::name() const {
  switch (kind_) {
    case SystemKind::binary:
      return "binary";
    case SystemKind::prime:
      return "prime";
    case SystemKind::fibonacci:
      return "fib:" + std::to_string(order_);
  }
  return "unknown";
}

// --- Weight sequences -------------------------------------------------------

std::vector<std::uint64_t> binary_weights(std::size_t count) {
  if (count > 64) throw std::invalid_argument("binary weights beyond 2^63 do not fit");
  std::vector<std::uint64_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::uint64_t{1} << i;
  return out;
}

std::vector<std::uint64_t> prime_weights(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(1);
  for (std::uint64_t candidate = 2; out.size() < count; ++candidate) {
    bool prime = true;
    // out[0] is the unit weight, not a prime.
    for (std::size_t j = 1; j < out.size() && out[j] * out[j] <= candidate; ++j) {
      if (candidate % out[j] == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(candidate);
  }
  return out;
}

std::vector<std::uint64_t> fibonacci_weights(unsigned order, std::size_t count) {
  check_order(order);
  // Terms F_p(0..count); weights drop the first of the duplicated leading ones.
  std::vector<std::uint64_t> terms(count + 1);
  for (std::size_t n = 0; n <= count; ++n) {
    terms[n] = n <= order ? 1 : checked_add(terms[n - 1], terms[n - order - 1]);
  }
  return {terms.begin() + 1, terms.end()};
}

std::uint64_t fibonacci_term(unsigned order, std::size_t n) {
  if (n == 0) {
    check_order(order);
    return 1;
  }
  return fibonacci_weights(order, n).back();
}

// --- System builders --------------------------------------------------------

NumberSystem make_binary_system(int bit_depth) {
  check_bit_depth(bit_depth);
  std::vector<std::uint32_t> weights;
  for (int i = 0; i < bit_depth; ++i) weights.push_back(std::uint32_t{1} << i);
  return build_system(SystemKind::binary, 0, bit_depth, std::move(weights), pixel_limit(bit_depth));
}

NumberSystem make_prime_system(int bit_depth) {
  check_bit_depth(bit_depth);
  const std::uint32_t limit = pixel_limit(bit_depth);
  std::vector<std::uint32_t> weights;
  std::uint64_t sum = 0;
  for (std::size_t count = 16; sum < limit; count *= 2) {
    weights.clear();
    sum = 0;
    for (auto p : prime_weights(count)) {
      weights.push_back(static_cast<std::uint32_t>(p));
      sum += p;
      if (sum >= limit) break;
    }
  }
  return build_system(SystemKind::prime, 0, bit_depth, std::move(weights), limit);
}

NumberSystem make_fibonacci_system(unsigned order, int bit_depth) {
  check_order(order);
  check_bit_depth(bit_depth);
  const std::uint32_t limit = pixel_limit(bit_depth);

  std::vector<std::uint64_t> terms(order + 1, 1);  // F_p(0..p)
  std::size_t next_index = 1;
  auto next = [&] {
    while (next_index >= terms.size()) {
      const std::size_t n = terms.size();
      terms.push_back(terms[n - 1] + terms[n - order - 1]);
    }
    return terms[next_index++];
  };
  // Every term that fits the pixel range becomes a plane. Coverage of the
  // range is checked by build_system; later terms could not improve it.
  auto weights = take_while_at_most(limit, next);
  return build_system(SystemKind::fibonacci, order, bit_depth, std::move(weights), limit);
}

NumberSystem make_system_with_planes(SystemKind kind, std::size_t planes, unsigned order) {
  if (planes == 0) throw std::invalid_argument("plane count must be positive");
  std::vector<std::uint64_t> raw;
  switch (kind) {
    case SystemKind::binary:
      raw = binary_weights(planes);
      break;
    case SystemKind::prime:
      raw = prime_weights(planes);
      break;
    case SystemKind::fibonacci:
      raw = fibonacci_weights(order, planes);
      break;
  }
  std::uint64_t sum = 0;
  std::vector<std::uint32_t> weights;
  for (auto w : raw) {
    sum += w;
    weights.push_back(static_cast<std::uint32_t>(w));
  }
  if (sum > pixel_limit(kMaxBitDepth)) {
    throw std::invalid_argument("weight sum of " + std::to_string(planes) +
                                " planes exceeds the 16-bit value range");
  }
  int bit_depth = 1;
  while (pixel_limit(bit_depth) < sum) ++bit_depth;
  return build_system(kind, kind == SystemKind::fibonacci ? order : 0, bit_depth,
                      std::move(weights), static_cast<std::uint32_t>(sum));
}

// --- Decomposition ----------------------------------------------------------

Codeword decompose(const NumberSystem& sys, std::uint64_t value) {
  if (!sys.representable(value)) {
    throw std::invalid_argument("value " + std::to_string(value) + " is not representable in " +
                                sys.name() + " (max " + std::to_string(sys.weight_sum()) + ")");
  }
  const auto weights = sys.weights();
  Codeword word(weights.size());
  std::uint64_t rest = value;
  for (std::size_t i = weights.size(); i-- > 0;) {
    // Take plane i whenever the remainder stays reachable by the lower planes.
    if (weights[i] <= rest && sys.reach(i).test(rest - weights[i])) {
      word.set_bit(i, true);
      rest -= weights[i];
    }
  }
  return word;
}

std::uint64_t compose(const NumberSystem& sys, const Codeword& word) {
  check_length(sys, word);
  const auto weights = sys.weights();
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (word.bit(i)) value += weights[i];
  }
  return value;
}

bool is_canonical(const NumberSystem& sys, const Codeword& word) {
  return decompose(sys, compose(sys, word)) == word;
}

std::vector<CodebookEntry> codebook(const NumberSystem& sys, std::uint64_t max_value) {
  if (max_value > sys.weight_sum()) {
    throw std::invalid_argument("codebook limit " + std::to_string(max_value) +
                                " exceeds weight sum " + std::to_string(sys.weight_sum()));
  }
  std::vector<CodebookEntry> out;
  out.reserve(max_value + 1);
  for (std::uint64_t v = 0; v <= max_value; ++v) out.push_back({v, decompose(sys, v)});
  return out;
}

std::string codebook_csv(std::span<const CodebookEntry> entries) {
  std::ostringstream os;
  os << "value,codeword\n";
  for (const auto& e : entries) os << e.value << ',' << e.word.to_string() << '\n';
  return os.str();
}

}  // namespace primesteg
