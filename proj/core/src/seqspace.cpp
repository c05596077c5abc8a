#include "ncrand/seqspace.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace ncrand::seqspace {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Mask keeping the r most significant bits of a word (r in [0, 64]).
std::uint64_t head_mask(std::size_t r) {
  if (r == 0) return 0;
  return ~std::uint64_t{0} << (kWordBits - r);
}

}  // namespace

BitString BitString::from_ascii(std::string_view text) {
  BitString s;
  s.words_.resize(word_count(text.size()), 0);
  s.size_ = text.size();
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') throw std::invalid_argument("BitString: symbols must be '0' or '1'");
    if (c == '1') s.words_[i / kWordBits] |= std::uint64_t{1} << (kWordBits - 1 - i % kWordBits);
  }
  return s;
}

BitString BitString::zeros(std::size_t n) {
  BitString s;
  s.words_.resize(word_count(n), 0);
  s.size_ = n;
  return s;
}

BitString BitString::ones(std::size_t n) {
  BitString s = zeros(n);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (n % kWordBits != 0) s.words_.back() = head_mask(n % kWordBits);
  return s;
}

BitString BitString::alternating(std::size_t n, int first) {
  BitString s = zeros(n);
  // 0101... pattern as a word, shifted if the first bit is 1.
  std::uint64_t pattern = 0x5555555555555555ull;  // bit 62, 60, ... set (MSB-first: 0101...)
  if (first == 1) pattern = ~pattern;             // 1010...
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = pattern;
  if (n % kWordBits != 0) s.words_.back() &= head_mask(n % kWordBits);
  return s;
}

BitString BitString::random(std::size_t n, std::uint64_t seed) {
  BitString s = zeros(n);
  std::mt19937_64 eng(seed);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = eng();
  if (n % kWordBits != 0) s.words_.back() &= head_mask(n % kWordBits);
  return s;
}

int BitString::bit(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitString::bit");
  return static_cast<int>((words_[i / kWordBits] >> (kWordBits - 1 - i % kWordBits)) & 1u);
}

void BitString::push_back(int b) {
  if (size_ % kWordBits == 0) words_.push_back(0);
  if (b != 0) words_.back() |= std::uint64_t{1} << (kWordBits - 1 - size_ % kWordBits);
  ++size_;
}

void BitString::append(const BitString& tail) {
  for (std::size_t i = 0; i < tail.size(); ++i) push_back(tail.bit(i));
}

BitString BitString::concat(const BitString& tail) const {
  BitString out = *this;
  out.append(tail);
  return out;
}

BitString BitString::prefix(std::size_t n) const {
  if (n > size_) throw std::out_of_range("BitString::prefix");
  BitString out;
  out.size_ = n;
  out.words_.assign(words_.begin(), words_.begin() + word_count(n));
  if (n % kWordBits != 0 && !out.words_.empty()) out.words_.back() &= head_mask(n % kWordBits);
  return out;
}

std::size_t BitString::count_ones() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitString::is_prefix_of(const BitString& other) const {
  if (size_ > other.size_) return false;
  std::size_t full = size_ / kWordBits;
  for (std::size_t w = 0; w < full; ++w)
    if (words_[w] != other.words_[w]) return false;
  std::size_t r = size_ % kWordBits;
  if (r == 0) return true;
  return ((words_[full] ^ other.words_[full]) & head_mask(r)) == 0;
}

std::string BitString::str() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (bit(i)) out[i] = '1';
  return out;
}

bool BitString::operator==(const BitString& o) const {
  return size_ == o.size_ && std::equal(words_.begin(), words_.end(), o.words_.begin());
}

std::strong_ordering BitString::operator<=>(const BitString& o) const {
  std::size_t common = std::min(size_, o.size_);
  std::size_t full = common / kWordBits;
  for (std::size_t w = 0; w < full; ++w) {
    if (words_[w] != o.words_[w]) return words_[w] < o.words_[w] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  std::size_t r = common % kWordBits;
  if (r != 0) {
    std::uint64_t a = words_[full] & head_mask(r);
    std::uint64_t b = o.words_[full] & head_mask(r);
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return size_ <=> o.size_;
}

DyadicValue DyadicValue::from_parts(BigInt num, unsigned exp) {
  if (num < 0) throw std::invalid_argument("DyadicValue: negative numerator");
  while (exp > 0 && num != 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (num == 0) exp = 0;
  if (num > pow2(exp)) throw std::invalid_argument("DyadicValue: value exceeds 1");
  return DyadicValue{std::move(num), exp};
}

Rational DyadicValue::to_rational() const { return Rational(numerator, pow2(exponent)); }

double DyadicValue::to_double() const { return static_cast<double>(to_rational()); }

std::string DyadicValue::str() const {
  return numerator.str() + "/2^" + std::to_string(exponent);
}

DyadicValue DyadicValue::plus(const DyadicValue& o) const {
  unsigned exp = std::max(exponent, o.exponent);
  BigInt num = (numerator << (exp - exponent)) + (o.numerator << (exp - o.exponent));
  return from_parts(std::move(num), exp);
}

bool DyadicValue::less_than_pow2(unsigned k) const {
  // num / 2^exp < 1 / 2^k  <=>  num * 2^k < 2^exp
  if (k >= exponent) return numerator == 0 ? true : (numerator << (k - exponent)) < 1;
  return numerator < pow2(exponent - k);
}

std::strong_ordering DyadicValue::operator<=>(const DyadicValue& o) const {
  unsigned exp = std::max(exponent, o.exponent);
  BigInt a = numerator << (exp - exponent);
  BigInt b = o.numerator << (exp - o.exponent);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DyadicValue dyadic_expand(const BitString& prefix, Tail tail) {
  // Prefix contributes sum x_i / 2^(i+1); an all-ones tail adds 2^-|prefix|.
  BigInt num = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    num <<= 1;
    num += prefix.bit(i);
  }
  if (tail == Tail::ones) num += 1;
  return DyadicValue::from_parts(std::move(num), static_cast<unsigned>(prefix.size()));
}

PrefixSet::PrefixSet(std::vector<BitString> members) : members_(std::move(members)) { normalize(); }

void PrefixSet::insert(BitString member) {
  members_.push_back(std::move(member));
  normalize();
}

void PrefixSet::normalize() {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PrefixSet PrefixSet::canonicalized() const {
  // In lexicographic order every extension follows its prefix contiguously,
  // so one pass with the last survivor suffices.
  std::vector<BitString> kept;
  kept.reserve(members_.size());
  const BitString* survivor = nullptr;
  for (const BitString& m : members_) {
    if (survivor != nullptr && survivor->is_prefix_of(m)) continue;
    kept.push_back(m);
    survivor = &kept.back();
  }
  PrefixSet out;
  out.members_ = std::move(kept);  // already sorted and unique
  return out;
}

bool PrefixSet::is_prefix_free() const {
  for (std::size_t i = 0; i + 1 < members_.size(); ++i)
    if (members_[i].is_prefix_of(members_[i + 1])) return false;
  return true;
}

DyadicValue cylinder_measure(const BitString& x) {
  return DyadicValue::from_parts(BigInt(1), static_cast<unsigned>(x.size()));
}

DyadicValue prefix_set_measure(const PrefixSet& s) {
  PrefixSet canon = s.canonicalized();
  if (canon.empty()) return DyadicValue::zero();
  // Group survivors by length: sum_L n_L 2^-L = (sum_L n_L 2^(Lmax-L)) / 2^Lmax.
  std::size_t max_len = 0;
  for (const BitString& m : canon.members()) max_len = std::max(max_len, m.size());
  BigInt num = 0;
  std::size_t run_len = canon.members().front().size();
  BigInt run_count = 0;
  auto flush = [&](std::size_t len, const BigInt& count) {
    num += count << (max_len - len);
  };
  for (const BitString& m : canon.members()) {
    if (m.size() != run_len) {
      flush(run_len, run_count);
      run_len = m.size();
      run_count = 0;
    }
    ++run_count;
  }
  flush(run_len, run_count);
  return DyadicValue::from_parts(std::move(num), static_cast<unsigned>(max_len));
}

}  // namespace ncrand::seqspace
