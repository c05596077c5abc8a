#pragma once

// Finite words over {0,1}, dyadic expansion of eventually-constant sequences,
// cylinder sets and the unbiased measure. All measures are exact dyadic
// rationals; no floating point enters this module.

#include "ncrand/exact.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncrand::seqspace {

/// A finite word over {0,1}. Bits are packed MSB-first into 64-bit words so
/// that word-wise unsigned comparison agrees with lexicographic bit order;
/// unused trailing bits are kept zero.
class BitString {
 public:
  BitString() = default;

  /// Parses an ASCII string of '0'/'1' characters (the serialization format).
  static BitString from_ascii(std::string_view text);
  static BitString zeros(std::size_t n);
  static BitString ones(std::size_t n);
  /// n bits of period two starting with `first`.
  static BitString alternating(std::size_t n, int first = 0);
  /// n uniform bits from a fixed engine: consecutive mt19937_64 outputs fill
  /// consecutive storage words, earliest bit in the most significant position.
  static BitString random(std::size_t n, std::uint64_t seed);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int bit(std::size_t i) const;
  void push_back(int b);
  void append(const BitString& tail);
  BitString concat(const BitString& tail) const;
  BitString prefix(std::size_t n) const;

  std::size_t count_ones() const;
  bool is_prefix_of(const BitString& other) const;
  std::string str() const;

  bool operator==(const BitString& o) const;
  /// Lexicographic bit order; a proper prefix precedes its extensions.
  std::strong_ordering operator<=>(const BitString& o) const;

 private:
  using Words = boost::container::small_vector<std::uint64_t, 2>;
  Words words_;
  std::size_t size_ = 0;
};

/// A dyadic rational numerator / 2^exponent in [0, 1], kept reduced
/// (numerator odd or zero). Serializes as "p/2^k".
struct DyadicValue {
  BigInt numerator;
  unsigned exponent = 0;

  static DyadicValue zero() { return {}; }
  static DyadicValue one() { return {BigInt(1), 0}; }
  /// Reduces and validates 0 <= value <= 1.
  static DyadicValue from_parts(BigInt num, unsigned exp);

  Rational to_rational() const;
  double to_double() const;
  std::string str() const;

  DyadicValue plus(const DyadicValue& o) const;
  /// value < 2^-k, exactly.
  bool less_than_pow2(unsigned k) const;

  bool operator==(const DyadicValue& o) const = default;
  std::strong_ordering operator<=>(const DyadicValue& o) const;
};

enum class Tail { zeros, ones };

/// Value of the infinite sequence prefix . tail^omega under the dyadic
/// expansion sum x_n / 2^n, as an exact dyadic rational.
DyadicValue dyadic_expand(const BitString& prefix, Tail tail);

/// A finite set of words, deduplicated and kept in lexicographic order.
class PrefixSet {
 public:
  PrefixSet() = default;
  explicit PrefixSet(std::vector<BitString> members);

  void insert(BitString member);
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<BitString>& members() const { return members_; }

  /// Drops every member that extends another member (the shorter word
  /// survives); the denoted open set of sequences is unchanged.
  PrefixSet canonicalized() const;
  bool is_prefix_free() const;

 private:
  std::vector<BitString> members_;
  void normalize();
};

/// P_unbiased of the cylinder of x: exactly 2^-|x|.
DyadicValue cylinder_measure(const BitString& x);

/// Measure of the set of sequences beginning with some member of s:
/// canonicalizes s and sums the survivors' cylinder measures.
DyadicValue prefix_set_measure(const PrefixSet& s);

}  // namespace ncrand::seqspace
