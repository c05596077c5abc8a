#include "ncrand/effreal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace ncrand::effreal {

ComputableReal::ComputableReal(std::function<Rational(unsigned)> approximant)
    : state_(std::make_shared<State>()) {
  state_->fn = std::move(approximant);
}

ComputableReal ComputableReal::constant(Rational value) {
  return ComputableReal([value = std::move(value)](unsigned) { return value; });
}

Rational ComputableReal::approx(unsigned k) const {
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->memo.find(k);
    if (it != state_->memo.end()) return it->second;
  }
  Rational r = state_->fn(k);
  std::lock_guard<std::mutex> lock(state_->mutex);
  return state_->memo.emplace(k, std::move(r)).first->second;
}

namespace {

// Partial sum of the Machin formula pi = 16 atan(1/5) - 4 atan(1/239) with m
// terms of each arctan series.
Rational machin_partial(unsigned m) {
  auto atan_inv = [](long x, unsigned terms) {
    Rational sum = 0;
    BigInt x2 = BigInt(x) * x;
    BigInt power = x;  // x^(2i+1)
    for (unsigned i = 0; i < terms; ++i) {
      Rational term(BigInt(1), power * (2 * i + 1));
      sum += (i % 2 == 0) ? term : -term;
      power *= x2;
    }
    return sum;
  };
  return 16 * atan_inv(5, m) - 4 * atan_inv(239, m);
}

// Alternating-series tail: |pi - machin_partial(m)| <= 16/((2m+1) 5^(2m+1)) +
// 4/((2m+1) 239^(2m+1)) <= 20 * 5^-(2m+1), and 5^(2m+1) >= 2^(2(2m+1)) gives
// the modulus below with room to spare.
unsigned machin_modulus(unsigned n_bits) { return n_bits / 4 + 2; }

// Smallest m with (m+1)! >= 2^(n+1), so that the factorial-series tail
// 2/(m+1)! is below 2^-n.
unsigned factorial_modulus(unsigned n_bits) {
  BigInt bound = pow2(n_bits + 1);
  BigInt fact = 1;
  unsigned m = 0;
  while (fact < bound) {
    ++m;
    fact *= m;
  }
  return m;  // (m)! >= bound, so taking terms 0..m leaves tail 2/(m+1)! < 2^-n
}

Rational exp1_partial(unsigned m) {
  Rational sum = 0;
  BigInt fact = 1;
  for (unsigned i = 0; i <= m; ++i) {
    if (i > 0) fact *= i;
    sum += Rational(BigInt(1), fact);
  }
  return sum;
}

}  // namespace

ComputableReal pi() {
  ComputableSequence sums([](unsigned n, unsigned) { return machin_partial(n); });
  return alg_lim(sums, [](unsigned n_bits) { return machin_modulus(n_bits); });
}

ComputableReal euler_e() {
  ComputableSequence sums([](unsigned n, unsigned) { return exp1_partial(n); });
  return alg_lim(sums, [](unsigned n_bits) { return factorial_modulus(n_bits); });
}

ComputableReal sqrt_of(const Rational& value) {
  if (value < 0) throw std::invalid_argument("sqrt_of: negative argument");
  return ComputableReal([value](unsigned k) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    // isqrt(num * den * 4^k) / (den * 2^k) is within 2^-k of sqrt(num/den).
    BigInt s = boost::multiprecision::sqrt(num * den << (2 * k));
    return Rational(s, den << k);
  });
}

ComputableReal negate(const ComputableReal& x) {
  return ComputableReal([x](unsigned k) { return -x.approx(k); });
}

namespace {

// |x| <= |approx(x, 0)| + 1 by the guarantee at k = 0.
Rational magnitude_bound(const ComputableReal& x) {
  Rational r = x.approx(0);
  return boost::multiprecision::abs(r) + 1;
}

ComputableReal invert(const ComputableReal& y, const Rational& lower_bound) {
  if (lower_bound <= 0) throw std::invalid_argument("division-bound-missing");
  // With |y| >= b and p >= k + 1 + 2L (2^-L <= b), the error of 1/approx(y, p)
  // is at most 2^(1-p) / b^2 <= 2^-k, and approx(y, p) stays >= b/2 != 0.
  unsigned big_l = ceil_log2_inverse(lower_bound);
  return ComputableReal([y, big_l](unsigned k) {
    unsigned p = k + 1 + 2 * big_l;
    if (p < big_l + 1) p = big_l + 1;
    Rational r = y.approx(p);
    if (r == 0) throw std::domain_error("invert: approximant vanished below the stated bound");
    return Rational(1) / r;
  });
}

}  // namespace

ComputableReal field_op(FieldOp op, const ComputableReal& x, const ComputableReal& y,
                        std::optional<Rational> divisor_lower_bound) {
  switch (op) {
    case FieldOp::add:
      return ComputableReal([x, y](unsigned k) { return x.approx(k + 1) + y.approx(k + 1); });
    case FieldOp::sub:
      return ComputableReal([x, y](unsigned k) { return x.approx(k + 1) - y.approx(k + 1); });
    case FieldOp::mul: {
      // |xy - x_p y_p| <= |x| 2^-p + |y_p| 2^-p <= (Bx + By + 1) 2^-p.
      Rational bound = magnitude_bound(x) + magnitude_bound(y) + 1;
      unsigned shift = ceil_log2(bound);
      return ComputableReal([x, y, shift](unsigned k) {
        unsigned p = k + shift;
        return x.approx(p) * y.approx(p);
      });
    }
    case FieldOp::div: {
      if (!divisor_lower_bound.has_value()) throw std::invalid_argument("division-bound-missing");
      return field_op(FieldOp::mul, x, invert(y, *divisor_lower_bound));
    }
  }
  throw std::logic_error("field_op: unknown operation");
}

ComputableSequence::ComputableSequence(std::function<Rational(unsigned, unsigned)> approximant)
    : fn_(std::move(approximant)) {}

ComputableReal ComputableSequence::element(unsigned n) const {
  auto fn = fn_;
  return ComputableReal([fn, n](unsigned k) { return fn(n, k); });
}

ComputableReal alg_lim(const ComputableSequence& s, std::function<unsigned(unsigned)> modulus) {
  return ComputableReal([s, modulus = std::move(modulus)](unsigned k) {
    return s.approx(modulus(k + 1), k + 1);
  });
}

ComputableSequence linear_form(std::vector<ComputableSequence> seqs,
                               std::function<Rational(std::size_t, unsigned, unsigned)> coefficient,
                               std::function<unsigned(unsigned)> degree) {
  return ComputableSequence(
      [seqs = std::move(seqs), coefficient = std::move(coefficient), degree = std::move(degree)](
          unsigned n, unsigned k) {
        unsigned d = degree(n);
        // Element precision p with (sum |c|) 2^-p <= 2^-k.
        Rational coeff_mass = 1;
        for (std::size_t j = 0; j < seqs.size(); ++j)
          for (unsigned idx = 0; idx <= d; ++idx)
            coeff_mass += boost::multiprecision::abs(coefficient(j, n, idx));
        unsigned p = k + ceil_log2(coeff_mass);
        Rational sum = 0;
        for (std::size_t j = 0; j < seqs.size(); ++j)
          for (unsigned idx = 0; idx <= d; ++idx) {
            Rational c = coefficient(j, n, idx);
            if (c != 0) sum += c * seqs[j].approx(idx, p);
          }
        return sum;
      });
}

std::string decimal_string(const Rational& r, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = (negative ? "-" : "") + whole.str();
  if (digits == 0) return out;
  out += '.';
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    BigInt digit = rem / den;
    rem %= den;
    out += static_cast<char>('0' + digit.convert_to<int>());
  }
  return out;
}

}  // namespace ncrand::effreal
