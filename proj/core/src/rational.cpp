#include "tao/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tao {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

boost::multiprecision::cpp_int parse_int(std::string_view s)
{
  boost::multiprecision::cpp_int value = 0;
  for (char c : s)
    value = value * 10 + (c - '0');
  return value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    auto d = parse_int(den);
    if (d == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
      scale *= 10;
    value = Rational(parse_int(whole) * scale + parse_int(frac), scale);
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    value = Rational(parse_int(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value)
{
  const auto& num = boost::multiprecision::numerator(value);
  const auto& den = boost::multiprecision::denominator(value);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

} // namespace tao
