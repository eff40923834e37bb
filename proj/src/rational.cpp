#include "vrglue/rational.hpp"

#include <cctype>

#include "vrglue/error.hpp"

namespace vrglue {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt pow10(long long e) {
  BigInt result(1);
  for (long long i = 0; i < e; ++i) result *= 10;
  return result;
}

Rational parse_decimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  long long exponent = 0;
  auto epos = rest.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view etext = rest.substr(epos + 1);
    rest = rest.substr(0, epos);
    bool eneg = false;
    if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
      eneg = etext.front() == '-';
      etext.remove_prefix(1);
    }
    if (!all_digits(etext) || etext.size() > 6)
      fail(Errc::invalid_input, "bad exponent in number '" + std::string(text) + "'");
    for (char c : etext) exponent = exponent * 10 + (c - '0');
    if (eneg) exponent = -exponent;
  }

  std::string_view int_part = rest;
  std::string_view frac_part;
  auto dot = rest.find('.');
  if (dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty())
    fail(Errc::invalid_input, "empty number '" + std::string(text) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    fail(Errc::invalid_input, "bad number '" + std::string(text) + "'");

  BigInt mantissa(0);
  for (char c : int_part) mantissa = mantissa * 10 + (c - '0');
  for (char c : frac_part) mantissa = mantissa * 10 + (c - '0');
  long long scale = exponent - static_cast<long long>(frac_part.size());

  Rational value(mantissa);
  if (scale > 0)
    value *= Rational(pow10(scale));
  else if (scale < 0)
    value /= Rational(pow10(-scale));
  if (negative) value = -value;
  return value;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view den_digits = den;
  if (!den_digits.empty() && den_digits.front() == '+') den_digits.remove_prefix(1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '+' || num_digits.front() == '-'))
    num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den_digits))
    fail(Errc::invalid_input, "bad fraction '" + std::string(text) + "'");

  BigInt n(std::string(num));
  BigInt d(std::string(den));
  if (d == 0) fail(Errc::invalid_input, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace vrglue
