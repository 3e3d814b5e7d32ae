#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homcoh {

// Exact rational number, always kept in lowest terms with a positive
// denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  // Accepts an optional sign, digits, and an optional "/" followed by a
  // nonzero denominator. Throws ParseError otherwise.
  static Scalar parse(std::string_view text);

  std::string str() const;
  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Scalar& operator+=(const Scalar& o) {
    q_ += o.q_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    q_ -= o.q_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    q_ *= o.q_;
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  // this += a * b without an intermediate temporary.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-q_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar factorial(unsigned n);

}  // namespace homcoh
