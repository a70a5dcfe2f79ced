#include "ultra/rational.hpp"

#include <cctype>
#include <string>

#include "ultra/errors.hpp"

namespace ultra {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Boost reads a leading "0" as an octal prefix, so digits go through here.
BigInt decimal_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return BigInt{std::string(s)};
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw SyntaxError("not a number: '" + std::string(whole) + "'");
  }
  BigInt v = decimal_digits(s);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = trim(text);
  std::string_view s = whole;
  if (s.empty()) throw SyntaxError("empty number");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(trim(s.substr(0, slash)), whole);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    if (!all_digits(den_text)) {
      throw SyntaxError("bad denominator in '" + std::string(whole) + "'");
    }
    BigInt den = decimal_digits(den_text);
    if (den == 0) throw SyntaxError("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    BigInt ev = parse_int(s.substr(e + 1), whole);
    if (ev > 4096 || ev < -4096) {
      throw SyntaxError("exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = ev.convert_to<long>();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (fp.empty() || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw SyntaxError("not a number: '" + std::string(whole) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw SyntaxError("not a number: '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  BigInt mantissa = decimal_digits(digits);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Rational(mantissa * pow10(exponent));
  return Rational(mantissa, pow10(-exponent));
}

std::string to_string(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt scale = pow10(digits);
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  std::string s = BigInt(scaled / scale).str();
  if (digits > 0) {
    std::string frac = BigInt(scaled % scale).str();
    s += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  if (negative && scaled != 0) s = "-" + s;
  return s;
}

}  // namespace ultra
