#include "parslit/rational.hpp"

#include <cctype>

#include "parslit/errors.hpp"

namespace parslit {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));

  std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "bad denominator: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

const Rational& ExtRational::value() const {
  if (kind_ != Kind::Finite) throw Error(ErrorCode::Indeterminate, "value of an infinite extent");
  return value_;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  using K = ExtRational::Kind;
  if (a.is_finite() && b.is_finite()) return ExtRational(Rational(a.value_ + b.value_));
  if ((a.kind_ == K::NegInf && b.kind_ == K::PosInf) ||
      (a.kind_ == K::PosInf && b.kind_ == K::NegInf)) {
    throw Error(ErrorCode::Indeterminate, "inf - inf");
  }
  return ExtRational(a.is_finite() ? b.kind_ : a.kind_);
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    default: return ExtRational(Rational(-value_));
  }
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtRational::pos_inf();
  if (text == "-inf") return ExtRational::neg_inf();
  return ExtRational(parse_rational(text));
}

std::string format_ext_rational(const ExtRational& value) {
  if (value.is_pos_inf()) return "inf";
  if (value.is_neg_inf()) return "-inf";
  return format_rational(value.value());
}

}  // namespace parslit
