#include "bihom/scalar.hpp"

#include <cctype>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

// Decimal integer with optional leading '-', no leading zeros, no '+'.
bool is_canonical_integer(std::string_view s, bool allow_negative) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  if (s[0] == '-') {
    if (!allow_negative) return false;
    pos = 1;
  }
  if (pos == s.size()) return false;
  if (s[pos] == '0' && s.size() - pos > 1) return false;
  if (s[pos] == '0' && pos == 1) return false;  // "-0"
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform.
  return mpz_class(std::to_string(v));
}

}  // namespace

Scalar::Scalar(std::int64_t value) : value_(to_mpz(value)) {}

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error("zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_canonical_integer(text, true)) {
      throw Error("malformed scalar \"" + std::string(text) + "\"");
    }
    return Scalar(mpq_class(mpz_class(std::string(text))));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_canonical_integer(num, true) || !is_canonical_integer(den, false)) {
    throw Error("malformed scalar \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string{num});
  mpz_class d(std::string{den});
  if (d == 0) throw Error("zero denominator in \"" + std::string(text) + "\"");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    throw Error("scalar \"" + std::string(text) + "\" is not in lowest terms");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& other) {
  value_ += other.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  value_ -= other.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  value_ *= other.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw Error("division by zero");
  value_ /= other.value_;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  value_ += a.value_ * b.value_;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace bihom
