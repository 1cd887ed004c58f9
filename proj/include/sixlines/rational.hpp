#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "sixlines/errors.hpp"

namespace sixlines {

using Integer = mpz_class;

// Arbitrary-precision rational, always canonical: positive denominator,
// gcd(num, den) = 1, zero stored as 0/1. Thin value wrapper over GMP.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den) : q_(num, den) { canonicalize(); }
  Rational(const Integer& num, const Integer& den) : q_(num, den) {
    canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  // Exact square root if this is the square of a rational, else nullopt.
  std::optional<Rational> sqrt_if_square() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rational(0);
    if (!mpz_perfect_square_p(num().get_mpz_t()) ||
        !mpz_perfect_square_p(den().get_mpz_t()))
      return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
    return Rational(rn, rd);
  }
  bool is_perfect_square() const { return sqrt_if_square().has_value(); }

  double to_double() const { return q_.get_d(); }

  // "n" for integers, "n/d" otherwise; matches the RAT grammar.
  std::string str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  const mpq_class& raw() const { return q_; }

private:
  void canonicalize() {
    if (q_.get_den() == 0) throw DivisionByZero("rational with denominator 0");
    q_.canonicalize();
  }

  mpq_class q_;
};

}  // namespace sixlines
