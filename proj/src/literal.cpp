#include "eisum/literal.hpp"

#include "eisum/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace eisum {

namespace {

[[noreturn]] void bad(std::string_view s, const char* what) {
  fail(ErrorKind::InvalidArgument, "cannot parse '" + std::string(s) + "' as " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer pow10(long e) {
  Integer r = 1;
  for (long k = 0; k < e; ++k) r *= 10;
  return r;
}

/// Unsigned decimal with optional fraction and exponent.
Rational parse_decimal(std::string_view s, std::string_view whole) {
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = s.substr(e + 1);
    bool neg = false;
    if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
      neg = ex.front() == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) bad(whole, "a decimal number");
    long v = 0;
    std::from_chars(ex.data(), ex.data() + ex.size(), v);
    exponent = neg ? -v : v;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      bad(whole, "a decimal number");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) bad(whole, "a decimal number");
    digits = std::string(s);
  }
  // A leading 0 would make the Integer constructor read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  if (digits.empty()) digits = "0";
  if (exponent > 100000 || exponent < -100000) bad(whole, "a decimal number of sane size");
  Integer mant(digits);
  if (exponent >= 0) return Rational(mant * pow10(exponent));
  return Rational(mant, pow10(-exponent));
}

}  // namespace

Rational parse_rational(std::string_view s_in) {
  std::string_view s = trim(s_in);
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(s_in, "a rational number");
  Rational v;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(s.substr(0, slash), s_in);
    const Rational den = parse_decimal(s.substr(slash + 1), s_in);
    if (den == 0) bad(s_in, "a rational number with nonzero denominator");
    v = num / den;
  } else {
    v = parse_decimal(s, s_in);
  }
  return neg ? Rational(-v) : v;
}

GaussianRational parse_gaussian(std::string_view s_in) {
  std::string_view s = trim(s_in);
  if (s.empty()) bad(s_in, "a complex number");
  if (s.back() != 'i') return {parse_rational(s), Rational(0)};
  s.remove_suffix(1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view re = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im = split == std::string_view::npos ? s : s.substr(split);
  im = trim(im);
  Rational imv;
  if (im.empty() || im == "+") imv = 1;
  else if (im == "-") imv = -1;
  else imv = parse_rational(im);
  return {re.empty() ? Rational(0) : parse_rational(re), imv};
}

Real parse_angle(std::string_view s_in) {
  std::string_view s = trim(s_in);
  const auto p = s.find("pi");
  if (p == std::string_view::npos) return to_real(parse_rational(s));
  // [sign][coef]pi[/den]
  std::string_view coef = s.substr(0, p);
  std::string_view rest = s.substr(p + 2);
  Rational c = 1;
  if (coef == "-") c = -1;
  else if (!coef.empty() && coef != "+") c = parse_rational(coef);
  if (!rest.empty()) {
    if (rest.front() != '/') bad(s_in, "an angle");
    const Rational d = parse_rational(rest.substr(1));
    if (d == 0) bad(s_in, "an angle");
    c /= d;
  }
  return to_real(c) * real_pi();
}

int parse_int(std::string_view s_in) {
  std::string_view s = trim(s_in);
  int v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) bad(s_in, "an integer");
  return v;
}

std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return q.str();
  const int places = std::max(twos, fives);
  const Integer scaled = boost::multiprecision::abs(num) * pow10(places) /
                         boost::multiprecision::denominator(q);
  std::string digits = scaled.str();
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (num < 0 ? "-" : "") + digits;
}

}  // namespace eisum
