#include "dqalg/scalar.hpp"

#include <charconv>
#include <ostream>

namespace dq {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidInput, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec{FieldKind::Prime, p};
}

std::string FieldSpec::describe() const {
  return kind == FieldKind::Rational ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

std::int64_t Fp::reduce(std::int64_t v, std::uint64_t p) {
  if (p == 0) return v;
  auto r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + static_cast<std::int64_t>(p) : r;
}

std::uint64_t Fp::common_modulus(const Fp& a, const Fp& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ != 0 && b.p_ != a.p_) {
    throw Error(ErrorCode::DimensionMismatch, "GF(p) elements with different moduli combined");
  }
  return a.p_;
}

Fp Fp::bound(std::int64_t value, std::uint64_t modulus) {
  Fp x;
  x.p_ = modulus;
  x.v_ = reduce(value, modulus);
  return x;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(ErrorCode::Singular, "inverse of zero in GF(p)");
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::logic_error("inverse of an unbound GF(p) literal");
  }
  // extended Euclid on (v, p)
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = v_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::int64_t r2 = r0 - qt * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - qt * t1;
    t0 = t1;
    t1 = t2;
  }
  return bound(t0, p_);
}

Fp operator+(const Fp& a, const Fp& b) {
  const auto p = Fp::common_modulus(a, b);
  return Fp::bound(Fp::reduce(a.v_, p) + Fp::reduce(b.v_, p), p);
}

Fp operator-(const Fp& a, const Fp& b) {
  const auto p = Fp::common_modulus(a, b);
  return Fp::bound(Fp::reduce(a.v_, p) - Fp::reduce(b.v_, p), p);
}

Fp operator*(const Fp& a, const Fp& b) {
  const auto p = Fp::common_modulus(a, b);
  return Fp::bound(Fp::reduce(a.v_, p) * Fp::reduce(b.v_, p), p);
}

Fp operator-(const Fp& a) { return Fp::bound(-a.v_, a.p_); }

bool operator==(const Fp& a, const Fp& b) {
  const auto p = Fp::common_modulus(a, b);
  return Fp::reduce(a.v_, p) == Fp::reduce(b.v_, p);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

Rational inverse(const Rational& x) {
  if (x.is_zero()) throw Error(ErrorCode::Singular, "inverse of zero rational");
  return Rational(1) / x;
}

std::string to_text(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_text(const Fp& x) { return std::to_string(x.value()); }

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorCode::ParseError, "empty integer in '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace dq
