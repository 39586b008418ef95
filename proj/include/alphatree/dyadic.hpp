#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "alphatree/rational.hpp"

namespace alphatree {

/// Exact nonnegative binary fraction mantissa * 2^-scale.
///
/// Canonical form: the mantissa is odd, or the scale is zero (which covers
/// zero and the even integers). The value is unbounded above, so partial sums
/// that overflow past 1 stay exact.
class DyadicFraction {
 public:
  using Scale = std::uint32_t;

  DyadicFraction() = default;
  DyadicFraction(BigNat mantissa, Scale scale);

  /// 2^-a.
  static DyadicFraction pow2(Scale a);

  const BigNat& mantissa() const { return mantissa_; }
  Scale scale() const { return scale_; }
  bool is_zero() const { return mantissa_ == 0; }

  /// Bit i (1-based) after the binary point.
  bool fractional_bit(Scale i) const;
  BigNat integer_part() const { return mantissa_ >> scale_; }

  Rational to_rational() const;
  double to_double() const;

  friend bool operator==(const DyadicFraction&, const DyadicFraction&) = default;
  friend std::strong_ordering operator<=>(const DyadicFraction& a, const DyadicFraction& b);

 private:
  void canonicalize();

  BigNat mantissa_{0};
  Scale scale_ = 0;
};

/// floor(2^i x) / 2^i: keeps the integer part and the first i fractional bits.
DyadicFraction trunc(DyadicFraction::Scale i, const DyadicFraction& x);

/// x + 2^-a, exactly. Requires a >= 1.
DyadicFraction add_pow2(const DyadicFraction& x, DyadicFraction::Scale a);

/// Value whose binary expansion is the bitwise XOR of the aligned expansions.
DyadicFraction bit_xor(const DyadicFraction& x, const DyadicFraction& y);

/// ceil(-log2 x) for 0 < x <= 1: the position of the leading one of x's
/// fractional expansion. Throws InvalidInput outside that range.
DyadicFraction::Scale ceil_neg_log2(const DyadicFraction& x);

/// "n.b1b2...bk" with both parts in binary, e.g. 1.625 -> "1.101", 1 -> "1.0".
std::string to_binary_string(const DyadicFraction& x);
DyadicFraction parse_binary_string(const std::string& text);

}  // namespace alphatree
