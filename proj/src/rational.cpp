#include "leibniz/rational.hpp"

#include <ostream>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long n) : value_(n) {}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpz_class num, mpz_class den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  auto malformed = [&]() {
    return ParseError("malformed rational '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num_text)) throw malformed();
  if (slash != std::string_view::npos && !is_digits(den_text)) throw malformed();
  // No leading zeros, no "-0", no "/1", and the fraction must be reduced.
  if (num_text.size() > 1 && num_text.front() == '0') throw malformed();
  if (negative && num_text == "0") throw malformed();
  mpz_class num(std::string(num_text), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    if (den_text.front() == '0') throw malformed();
    den = mpz_class(std::string(den_text), 10);
    if (den == 1 || num == 0) throw malformed();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw malformed();
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  value_ += a.value_ * b.value_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace leibniz
