#ifndef PARSLIT_RATIONAL_HPP
#define PARSLIT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace parslit {

using Rational = mpq_class;

/// p / q in canonical form; mpq_class(p, q) by itself is not reduced.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Accepts "p", "p/q", with optional sign. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" (reduced, q > 0) otherwise.
std::string format_rational(const Rational& value);

/// An exact rational or one of the symbols -inf / +inf.
///
/// Arithmetic throws Indeterminate on inf - inf; nothing else is undefined.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() = default;
  ExtRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}
  ExtRational(long value) : kind_(Kind::Finite), value_(value) {}

  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  /// Throws Indeterminate when infinite.
  const Rational& value() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
  ExtRational operator-() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  explicit ExtRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

/// "inf", "+inf", "-inf" or a rational.
ExtRational parse_ext_rational(std::string_view text);
std::string format_ext_rational(const ExtRational& value);

/// Exact complex number with rational parts.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace parslit

#endif  // PARSLIT_RATIONAL_HPP
