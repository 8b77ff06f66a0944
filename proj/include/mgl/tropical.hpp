#pragma once

#include <compare>
#include <optional>
#include <string>

#include "mgl/rational.hpp"

namespace mgl {

/// A finite tropical number  v - log2(c)  with v rational and c a positive
/// rational.
///
/// Pure valuations have c = 1.  Moduli imported from signed rationals, and the
/// t-monomials produced by sliding, enter through c, so every value the
/// library manipulates is exact.  The representation is canonical: c carries
/// no factor of two (such factors are folded into v), hence structural
/// equality is numeric equality.
class LogRational {
 public:
  LogRational() = default;
  LogRational(Rational v);  // NOLINT(google-explicit-constructor)
  LogRational(long v) : LogRational(Rational(v)) {}  // NOLINT

  /// v - log2(c); c must be positive.
  static LogRational from_parts(Rational v, Rational c);
  /// -log2|r| for nonzero r.
  static LogRational neg_log2(const Rational& r);

  const Rational& rational_part() const { return v_; }
  const Rational& log_coefficient() const { return c_; }
  bool is_rational() const { return c_ == 1; }

  /// 2^(-value) when that number is rational (v integral), else nullopt.
  std::optional<Rational> modulus() const;

  friend LogRational operator+(const LogRational& a, const LogRational& b);
  friend LogRational operator-(const LogRational& a, const LogRational& b);
  friend LogRational operator-(const LogRational& a);
  LogRational& operator+=(const LogRational& o) { return *this = *this + o; }
  /// k * value for an integer k.
  friend LogRational operator*(long k, const LogRational& a);

  friend bool operator==(const LogRational& a, const LogRational& b) {
    return a.v_ == b.v_ && a.c_ == b.c_;
  }
  friend std::strong_ordering operator<=>(const LogRational& a,
                                          const LogRational& b);

  std::string str() const;

 private:
  Rational v_{0};
  Rational c_{1};
};

/// An element of T = Q-ish ∪ {∞}.  ∞ absorbs addition and is the maximum.
class TropicalValue {
 public:
  TropicalValue() = default;  // ∞
  TropicalValue(LogRational finite) : value_(std::move(finite)) {}  // NOLINT
  TropicalValue(Rational finite) : value_(LogRational(std::move(finite))) {}  // NOLINT
  TropicalValue(long finite) : value_(LogRational(finite)) {}  // NOLINT

  static TropicalValue infinity() { return {}; }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const LogRational& finite() const;

  friend TropicalValue operator+(const TropicalValue& a, const TropicalValue& b);
  friend bool operator==(const TropicalValue& a, const TropicalValue& b) = default;
  friend std::strong_ordering operator<=>(const TropicalValue& a,
                                          const TropicalValue& b);

  /// "inf", "p/q", or "v-log2(c)".
  std::string str() const;

 private:
  std::optional<LogRational> value_;
};

/// A signed tropical coordinate: the real number  sign * 2^(-val).
/// Invariant: sign == 0 exactly when val == ∞.
class SignedTropical {
 public:
  SignedTropical() = default;  // zero
  SignedTropical(int sign, TropicalValue val);

  static SignedTropical from_rational(const Rational& r);

  int sign() const { return sign_; }
  const TropicalValue& val() const { return val_; }
  bool is_zero() const { return sign_ == 0; }

  /// The exact rational value when representable.
  std::optional<Rational> to_rational() const;

  friend SignedTropical operator*(const SignedTropical& a, const SignedTropical& b);
  friend SignedTropical operator-(const SignedTropical& a) {
    SignedTropical out = a;
    out.sign_ = -out.sign_;
    return out;
  }
  /// Multiplies the modulus by a positive rational.
  SignedTropical scaled(const Rational& positive) const;

  friend bool operator==(const SignedTropical& a, const SignedTropical& b) = default;

  /// Orders by modulus: the larger modulus compares greater.
  friend std::strong_ordering compare_modulus(const SignedTropical& a,
                                              const SignedTropical& b);

  std::string str() const;

 private:
  int sign_ = 0;
  TropicalValue val_;
};

}  // namespace mgl
