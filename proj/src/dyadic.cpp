#include "alphatree/dyadic.hpp"

#include <algorithm>

#include "alphatree/errors.hpp"

namespace alphatree {

namespace mp = boost::multiprecision;

DyadicFraction::DyadicFraction(BigNat mantissa, Scale scale)
    : mantissa_(std::move(mantissa)), scale_(scale) {
  if (mantissa_ < 0) throw InvalidInput("dyadic fractions are nonnegative");
  canonicalize();
}

DyadicFraction DyadicFraction::pow2(Scale a) { return DyadicFraction(BigNat(1), a); }

void DyadicFraction::canonicalize() {
  if (mantissa_ == 0) {
    scale_ = 0;
    return;
  }
  if (scale_ == 0) return;
  auto zeros = static_cast<Scale>(std::min<std::size_t>(mp::lsb(mantissa_), scale_));
  if (zeros > 0) {
    mantissa_ >>= zeros;
    scale_ -= zeros;
  }
}

bool DyadicFraction::fractional_bit(Scale i) const {
  if (i == 0 || i > scale_) return false;
  return mp::bit_test(mantissa_, scale_ - i);
}

Rational DyadicFraction::to_rational() const {
  return Rational(mantissa_, BigNat(1) << scale_);
}

double DyadicFraction::to_double() const { return alphatree::to_double(to_rational()); }

std::strong_ordering operator<=>(const DyadicFraction& a, const DyadicFraction& b) {
  int c;
  if (a.scale_ == b.scale_) {
    c = a.mantissa_.compare(b.mantissa_);
  } else if (a.scale_ < b.scale_) {
    c = BigNat(a.mantissa_ << (b.scale_ - a.scale_)).compare(b.mantissa_);
  } else {
    c = a.mantissa_.compare(BigNat(b.mantissa_ << (a.scale_ - b.scale_)));
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

DyadicFraction trunc(DyadicFraction::Scale i, const DyadicFraction& x) {
  if (x.scale() <= i) return x;
  return DyadicFraction(x.mantissa() >> (x.scale() - i), i);
}

DyadicFraction add_pow2(const DyadicFraction& x, DyadicFraction::Scale a) {
  if (a == 0) throw InvalidInput("add_pow2 needs an exponent a >= 1");
  auto scale = std::max(x.scale(), a);
  BigNat m = x.mantissa() << (scale - x.scale());
  m += BigNat(1) << (scale - a);
  return DyadicFraction(std::move(m), scale);
}

DyadicFraction bit_xor(const DyadicFraction& x, const DyadicFraction& y) {
  auto scale = std::max(x.scale(), y.scale());
  BigNat a = x.mantissa() << (scale - x.scale());
  BigNat b = y.mantissa() << (scale - y.scale());
  return DyadicFraction(a ^ b, scale);
}

DyadicFraction::Scale ceil_neg_log2(const DyadicFraction& x) {
  if (x.is_zero()) throw InvalidInput("ceil_neg_log2 is undefined at 0");
  if (x > DyadicFraction(BigNat(1), 0)) throw InvalidInput("ceil_neg_log2 needs x <= 1");
  // x = M 2^-e with 2^msb(M) <= M < 2^(msb(M)+1).
  return x.scale() - static_cast<DyadicFraction::Scale>(mp::msb(x.mantissa()));
}

std::string to_binary_string(const DyadicFraction& x) {
  BigNat whole = x.integer_part();
  std::string out;
  if (whole == 0) {
    out = "0";
  } else {
    for (auto bit = static_cast<long>(mp::msb(whole)); bit >= 0; --bit) {
      out.push_back(mp::bit_test(whole, static_cast<unsigned>(bit)) ? '1' : '0');
    }
  }
  out.push_back('.');
  if (x.scale() == 0) {
    out.push_back('0');
    return out;
  }
  for (DyadicFraction::Scale i = 1; i <= x.scale(); ++i) {
    out.push_back(x.fractional_bit(i) ? '1' : '0');
  }
  return out;
}

DyadicFraction parse_binary_string(const std::string& text) {
  auto dot = text.find('.');
  std::string whole = text.substr(0, dot);
  std::string frac = dot == std::string::npos ? std::string() : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw InvalidInput("empty binary fraction");
  BigNat m = 0;
  for (char c : whole + frac) {
    if (c != '0' && c != '1') throw InvalidInput("malformed binary fraction '" + text + "'");
    m <<= 1;
    if (c == '1') m |= 1;
  }
  return DyadicFraction(std::move(m), static_cast<DyadicFraction::Scale>(frac.size()));
}

}  // namespace alphatree
