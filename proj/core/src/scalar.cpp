#include "homcoh/scalar.hpp"

#include <cctype>
#include <ostream>

#include "homcoh/errors.hpp"

namespace homcoh {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed scalar \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in scalar \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const { return q_.get_str(10); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  q_ /= o.q_;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  q_ += t;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(mpq_class(f));
}

}  // namespace homcoh
