#pragma once

// Computable reals: rational approximation streams carrying the normalized
// guarantee |approx(k) - x| <= 2^-k. Field operations derive their working
// precision from exact magnitude bounds, so the guarantee is preserved by
// construction rather than by rounding analysis after the fact.

#include "ncrand/exact.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace ncrand::effreal {

class ComputableReal {
 public:
  /// Wraps an approximant with the contract |approximant(k) - x| <= 2^-k.
  /// The function must be reentrant; results are memoized per instance.
  explicit ComputableReal(std::function<Rational(unsigned)> approximant);

  static ComputableReal constant(Rational value);

  /// The rational r_k with |r_k - x| <= 2^-k.
  Rational approx(unsigned k) const;

 private:
  struct State {
    std::function<Rational(unsigned)> fn;
    std::mutex mutex;
    std::map<unsigned, Rational> memo;
  };
  std::shared_ptr<State> state_;
};

/// pi, built as the algorithmic limit of Machin-formula partial sums with the
/// tail modulus documented in the implementation.
ComputableReal pi();

/// e as partial sums of 1/i! with the factorial tail modulus.
ComputableReal euler_e();

/// Square root of a positive rational via integer square roots:
/// approx(k) = isqrt(num * den * 4^k) / (den * 2^k).
ComputableReal sqrt_of(const Rational& value);

inline ComputableReal sqrt2() { return sqrt_of(Rational(2)); }

ComputableReal negate(const ComputableReal& x);

enum class FieldOp { add, sub, mul, div };

/// Field operations. Division is total only on its stated domain: the caller
/// must supply a positive rational lower bound on |y| (zero-testing of
/// computable reals is undecidable); omitting it throws
/// std::invalid_argument("division-bound-missing").
ComputableReal field_op(FieldOp op, const ComputableReal& x, const ComputableReal& y,
                        std::optional<Rational> divisor_lower_bound = std::nullopt);

/// A computable sequence: one uniform procedure (n, k) -> r with
/// |r - x_n| <= 2^-k serves every index.
class ComputableSequence {
 public:
  explicit ComputableSequence(std::function<Rational(unsigned, unsigned)> approximant);
  ComputableReal element(unsigned n) const;
  Rational approx(unsigned n, unsigned k) const { return fn_(n, k); }

 private:
  std::function<Rational(unsigned, unsigned)> fn_;
};

/// Algorithmic limit: the caller warrants |x_n - x| < 2^-N for n >= modulus(N).
/// The result's approximant is approx(s(modulus(k+1)), k+1).
ComputableReal alg_lim(const ComputableSequence& s, std::function<unsigned(unsigned)> modulus);

/// Linear forms over computable sequences: s_n = sum_j sum_{k<=degree(n)}
/// coefficient(j, n, k) * seqs[j](k), with derived precision bookkeeping.
/// This is the closure operation the computability-structure axioms demand.
ComputableSequence linear_form(std::vector<ComputableSequence> seqs,
                               std::function<Rational(std::size_t, unsigned, unsigned)> coefficient,
                               std::function<unsigned(unsigned)> degree);

/// Decimal rendering of a rational to `digits` fractional digits (truncated).
std::string decimal_string(const Rational& r, unsigned digits);

}  // namespace ncrand::effreal
