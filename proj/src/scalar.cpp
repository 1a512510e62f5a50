#include "kg/scalar.hpp"

#include <cctype>

namespace kg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return GaussianRational(parse_rational(text));

  std::string_view body = text.substr(0, text.size() - 1);
  // Split off the imaginary term at the last interior sign, if any.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos)
    return {Rational(0), parse_rational(body)};
  Rational re = parse_rational(body.substr(0, split));
  Rational im = parse_rational(body.substr(split + 1));
  if (body[split] == '-') im = -im;
  return {re, im};
}

std::string GaussianRational::to_string() const {
  if (im_ == 0) return rational_to_string(re_);
  std::string im_part = rational_to_string(abs(im_)) + "i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + im_part;
  return rational_to_string(re_) + (im_ < 0 ? "-" : "+") + im_part;
}

}  // namespace kg
