#include "channelgame/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace channelgame {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(s.begin());
  }
  if (s.empty()) throw std::invalid_argument("malformed rational literal: " + text);

  Rat result;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    mpz_class p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: " + text);
    result = Rat(p, q);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal literal: " + text);
    }
    mpz_class scale(1);
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class p = mpz_class(whole) * scale + mpz_class(frac);
    result = Rat(p, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed rational literal: " + text);
    result = Rat(mpz_class(s));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string rat_to_string(const Rat& value) {
  Rat v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

SignificantDigits significant_digits(const Rat& value, int sig, Rounding mode) {
  if (sig < 1) throw std::invalid_argument("sig must be >= 1");
  SignificantDigits out;
  if (value == 0) {
    out.digits = std::string(static_cast<size_t>(sig), '0');
    return out;
  }
  Rat x = value;
  if (x < 0) {
    out.negative = true;
    x = -x;
  }
  int exp = 0;
  const Rat tenth(1, 10);
  while (x < tenth) {
    x *= 10;
    --exp;
  }
  while (x >= 1) {
    x /= 10;
    ++exp;
  }
  // x in [0.1, 1); scaled = x * 10^sig in [10^(sig-1), 10^sig)
  mpz_class pow10(1);
  for (int i = 0; i < sig; ++i) pow10 *= 10;
  Rat scaled = x * Rat(pow10);
  mpz_class floor_part = scaled.get_num() / scaled.get_den();  // exact floor, operands > 0
  Rat remainder = scaled - Rat(floor_part);
  mpz_class digits = floor_part;
  const Rat half(1, 2);
  switch (mode) {
    case Rounding::Down:
      break;
    case Rounding::Up:
      if (remainder > 0) ++digits;
      break;
    case Rounding::HalfUp:
      if (remainder >= half) ++digits;
      break;
    case Rounding::HalfEven:
      if (remainder > half) {
        ++digits;
      } else if (remainder == half) {
        if (mpz_odd_p(digits.get_mpz_t())) ++digits;
      }
      break;
  }
  if (digits == pow10) {  // rounding carried into one more digit
    digits /= 10;
    ++exp;
  }
  std::string text = digits.get_str();
  while (static_cast<int>(text.size()) < sig) text.insert(text.begin(), '0');
  out.digits = text;
  out.exp10 = exp;
  return out;
}

std::string format_decimal(const Rat& value, int sig, Rounding mode) {
  SignificantDigits d = significant_digits(value, sig, mode);
  std::string body;
  const int n = static_cast<int>(d.digits.size());
  if (d.exp10 <= 0) {
    body = "0." + std::string(static_cast<size_t>(-d.exp10), '0') + d.digits;
  } else if (d.exp10 >= n) {
    body = d.digits + std::string(static_cast<size_t>(d.exp10 - n), '0');
  } else {
    body = d.digits.substr(0, static_cast<size_t>(d.exp10)) + "." +
           d.digits.substr(static_cast<size_t>(d.exp10));
  }
  return d.negative ? "-" + body : body;
}

std::string format_fixed(const Rat& value, int fraction_digits, Rounding mode) {
  if (fraction_digits < 0) throw std::invalid_argument("fraction_digits must be >= 0");
  Rat x = value;
  bool negative = false;
  if (x < 0) {
    negative = true;
    x = -x;
  }
  mpz_class scale(1);
  for (int i = 0; i < fraction_digits; ++i) scale *= 10;
  Rat scaled = x * Rat(scale);
  mpz_class floor_part = scaled.get_num() / scaled.get_den();
  Rat remainder = scaled - Rat(floor_part);
  const Rat half(1, 2);
  switch (mode) {
    case Rounding::Down:
      break;
    case Rounding::Up:
      if (remainder > 0) ++floor_part;
      break;
    case Rounding::HalfUp:
      if (remainder >= half) ++floor_part;
      break;
    case Rounding::HalfEven:
      if (remainder > half) {
        ++floor_part;
      } else if (remainder == half) {
        if (mpz_odd_p(floor_part.get_mpz_t())) ++floor_part;
      }
      break;
  }
  mpz_class whole = floor_part / scale;
  mpz_class frac = floor_part % scale;
  std::string out = whole.get_str();
  if (fraction_digits > 0) {
    std::string f = frac.get_str();
    while (static_cast<int>(f.size()) < fraction_digits) f.insert(f.begin(), '0');
    out += "." + f;
  }
  return negative && floor_part != 0 ? "-" + out : out;
}

}  // namespace channelgame
