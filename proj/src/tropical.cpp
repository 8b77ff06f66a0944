#include "mgl/tropical.hpp"

#include <cmath>

#include <limits>

namespace mgl {

namespace {

// Power of two dividing a nonzero integer.
unsigned long two_adic(const Integer& z) { return mpz_scan1(z.get_mpz_t(), 0); }

Integer pow_int(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

double log2_of(const Integer& z) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log2(m) + static_cast<double>(e);
}

// Sign of  v - log2(c)  for rational v and c > 0.
int sign_of_difference(const Rational& v, const Rational& c) {
  if (c == 1) return sgn(v);
  // Doubles decide whenever the gap is far above their rounding error.
  const double approx = v.get_d() - (log2_of(c.get_num()) - log2_of(c.get_den()));
  if (std::isfinite(approx) && std::abs(approx) > 1e-6) return approx > 0 ? 1 : -1;
  const Integer& q = v.get_den();
  if (!q.fits_ulong_p() || q > 4096) {
    throw Error("valuation denominator too large for exact comparison");
  }
  unsigned long qq = q.get_ui();
  Integer lhs = pow_int(c.get_den(), qq);  // 2^p * den(c)^q  vs  num(c)^q
  Integer rhs = pow_int(c.get_num(), qq);
  const Integer& p = v.get_num();
  if (!p.fits_slong_p()) throw Error("valuation numerator too large for exact comparison");
  long pp = p.get_si();
  if (pp >= 0) {
    lhs <<= static_cast<unsigned long>(pp);
  } else {
    rhs <<= static_cast<unsigned long>(-pp);
  }
  return cmp(lhs, rhs) > 0 ? 1 : (cmp(lhs, rhs) < 0 ? -1 : 0);
}

}  // namespace

LogRational::LogRational(Rational v) : v_(std::move(v)) {}

LogRational LogRational::from_parts(Rational v, Rational c) {
  if (sgn(c) <= 0) throw Error("log coefficient must be positive");
  c.canonicalize();
  Integer num = c.get_num();
  Integer den = c.get_den();
  unsigned long kn = two_adic(num);
  unsigned long kd = two_adic(den);
  num >>= kn;
  den >>= kd;
  LogRational out;
  out.v_ = v - Rational(static_cast<long>(kn) - static_cast<long>(kd));
  out.c_ = Rational(num, den);
  out.c_.canonicalize();
  return out;
}

LogRational LogRational::neg_log2(const Rational& r) {
  if (r == 0) throw Error("-log2 of zero is not finite");
  return from_parts(0, abs(r));
}

std::optional<Rational> LogRational::modulus() const {
  if (v_.get_den() != 1) return std::nullopt;
  const Integer& k = v_.get_num();
  if (!k.fits_slong_p()) throw Error("valuation too large to convert");
  long kk = k.get_si();
  Rational out = c_;
  if (kk >= 0) {
    out /= Rational(pow_int(Integer(2), static_cast<unsigned long>(kk)));
  } else {
    out *= Rational(pow_int(Integer(2), static_cast<unsigned long>(-kk)));
  }
  return out;
}

LogRational operator+(const LogRational& a, const LogRational& b) {
  if (a.c_ == 1 && b.c_ == 1) return LogRational(a.v_ + b.v_);
  return LogRational::from_parts(a.v_ + b.v_, a.c_ * b.c_);
}

LogRational operator-(const LogRational& a) {
  if (a.c_ == 1) return LogRational(-a.v_);
  return LogRational::from_parts(-a.v_, 1 / a.c_);
}

LogRational operator-(const LogRational& a, const LogRational& b) { return a + (-b); }

LogRational operator*(long k, const LogRational& a) {
  if (k == 0) return LogRational();
  if (a.c_ == 1) return LogRational(Rational(k) * a.v_);
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), a.c_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), a.c_.get_den_mpz_t(), e);
  LogRational out = LogRational::from_parts(Rational(static_cast<long>(e)) * a.v_, Rational(num, den));
  return k < 0 ? -out : out;
}

std::strong_ordering operator<=>(const LogRational& a, const LogRational& b) {
  int s = sign_of_difference(a.v_ - b.v_, a.c_ / b.c_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string LogRational::str() const {
  if (c_ == 1) return v_.get_str();
  return v_.get_str() + "-log2(" + c_.get_str() + ")";
}

const LogRational& TropicalValue::finite() const {
  if (!value_) throw Error("tropical value is infinite");
  return *value_;
}

TropicalValue operator+(const TropicalValue& a, const TropicalValue& b) {
  if (a.is_infinite() || b.is_infinite()) return TropicalValue::infinity();
  return TropicalValue(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const TropicalValue& a, const TropicalValue& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return *a.value_ <=> *b.value_;
}

std::string TropicalValue::str() const { return value_ ? value_->str() : "inf"; }

SignedTropical::SignedTropical(int sign, TropicalValue val) : sign_(sign), val_(std::move(val)) {
  if (sign_ < -1 || sign_ > 1) throw Error("sign must be -1, 0 or +1");
  if ((sign_ == 0) != val_.is_infinite()) {
    throw Error("signed tropical value: sign is 0 exactly when the valuation is inf");
  }
}

SignedTropical SignedTropical::from_rational(const Rational& r) {
  if (r == 0) return {};
  return {sgn(r), TropicalValue(LogRational::neg_log2(r))};
}

std::optional<Rational> SignedTropical::to_rational() const {
  if (sign_ == 0) return Rational(0);
  auto m = val_.finite().modulus();
  if (!m) return std::nullopt;
  return sign_ > 0 ? *m : Rational(-*m);
}

SignedTropical operator*(const SignedTropical& a, const SignedTropical& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return {};
  return {a.sign_ * b.sign_, a.val_ + b.val_};
}

SignedTropical SignedTropical::scaled(const Rational& positive) const {
  if (sgn(positive) <= 0) throw Error("scale factor must be positive");
  if (sign_ == 0) return *this;
  return {sign_, val_ + TropicalValue(LogRational::neg_log2(positive))};
}

std::strong_ordering compare_modulus(const SignedTropical& a, const SignedTropical& b) {
  return b.val_ <=> a.val_;
}

std::string SignedTropical::str() const {
  if (sign_ == 0) return "0";
  return std::string(sign_ > 0 ? "+" : "-") + "@" + val_.str();
}

}  // namespace mgl
