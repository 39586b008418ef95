#include "alphatree/rational.hpp"

#include <cctype>
#include <cmath>

#include "alphatree/errors.hpp"

namespace alphatree {

namespace mp = boost::multiprecision;

Rational make_rational(const BigNat& num, const BigNat& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  return Rational(num, den);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigNat(num), BigNat(den));
}

namespace {

BigNat parse_integer(const std::string& digits, const std::string& whole) {
  if (digits.empty()) throw InvalidInput("malformed number '" + whole + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("malformed number '" + whole + "'");
    }
  }
  return BigNat(digits);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    value = make_rational(parse_integer(s.substr(0, slash), text),
                          parse_integer(s.substr(slash + 1), text));
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string int_part = s.substr(0, dot);
    std::string frac_part = s.substr(dot + 1);
    if (int_part.empty()) int_part = "0";
    if (frac_part.empty()) frac_part = "0";
    BigNat scale = mp::pow(BigNat(10), static_cast<unsigned>(frac_part.size()));
    value = Rational(parse_integer(int_part, text)) +
            make_rational(parse_integer(frac_part, text), scale);
  } else {
    value = Rational(parse_integer(s, text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

namespace {

double log2_big(const BigNat& n) {
  auto bits = mp::msb(n);
  if (bits < 1000) return std::log2(n.convert_to<double>());
  unsigned shift = static_cast<unsigned>(bits - 60);
  BigNat top = n >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace

double to_double(const Rational& r) {
  const BigNat& n = mp::numerator(r);
  const BigNat& d = mp::denominator(r);
  if (n == 0) return 0.0;
  if (mp::msb(mp::abs(n)) < 1000 && mp::msb(d) < 1000) {
    return n.convert_to<double>() / d.convert_to<double>();
  }
  double sign = n < 0 ? -1.0 : 1.0;
  return sign * std::exp2(log2_big(mp::abs(n)) - log2_big(d));
}

double log2_of(const Rational& r) {
  if (r <= 0) throw InvalidInput("log2 of a non-positive value");
  return log2_big(mp::numerator(r)) - log2_big(mp::denominator(r));
}

std::int64_t ceil_neg_log2(const Rational& r) {
  if (r <= 0) throw InvalidInput("ceil(-log2 r) needs r > 0");
  const BigNat& n = mp::numerator(r);
  const BigNat& d = mp::denominator(r);
  std::int64_t c = static_cast<std::int64_t>(mp::msb(d)) - static_cast<std::int64_t>(mp::msb(n));
  // n * 2^c lies in [2^msb(d), 2^(msb(d)+1)), so the answer is c or c + 1.
  bool reaches = c >= 0 ? (n << static_cast<unsigned>(c)) >= d
                        : n >= (d << static_cast<unsigned>(-c));
  return reaches ? c : c + 1;
}

bool is_power_of_two(const Rational& r) {
  if (r <= 0) return false;
  const BigNat& n = mp::numerator(r);
  const BigNat& d = mp::denominator(r);
  // Reduced form: one of n, d is 1 and the other a power of two.
  auto single_bit = [](const BigNat& v) { return mp::msb(v) == mp::lsb(v); };
  return (n == 1 && single_bit(d)) || (d == 1 && single_bit(n));
}

Rational pow2_neg(std::int64_t e) {
  if (e >= 0) return Rational(BigNat(1), BigNat(1) << static_cast<unsigned>(e));
  return Rational(BigNat(1) << static_cast<unsigned>(-e));
}

}  // namespace alphatree
