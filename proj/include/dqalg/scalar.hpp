#pragma once

// Exact scalars: arbitrary-precision rationals and GF(p) with a runtime
// modulus. Both plug into Eigen as custom scalar types.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "dqalg/errors.hpp"

namespace dq {

using Index = Eigen::Index;

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

enum class FieldKind { Rational, Prime };

/// The ground field: Q, or GF(p) for a prime p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;

  static FieldSpec rational() { return {}; }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  std::uint64_t characteristic() const { return kind == FieldKind::Rational ? 0 : p; }
  /// True for characteristic 0 or p > n.
  bool characteristic_exceeds(Index n) const {
    return kind == FieldKind::Rational || p > static_cast<std::uint64_t>(n);
  }
  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t p);

/// Element of GF(p). The modulus travels with the value. A modulus of 0 marks
/// an unbound integer literal (what Eigen produces for Scalar(0) / Scalar(1));
/// literals adopt the modulus of whatever they are combined with.
class Fp {
 public:
  Fp() = default;
  Fp(int literal) : v_(literal) {}
  Fp(long literal) : v_(literal) {}
  Fp(long long literal) : v_(literal) {}

  static Fp bound(std::int64_t value, std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  /// Canonical representative in [0, p-1] (the raw literal when unbound).
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const;

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend Fp operator-(const Fp& a);
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static std::uint64_t common_modulus(const Fp& a, const Fp& b);
  static std::int64_t reduce(std::int64_t v, std::uint64_t p);

  std::int64_t v_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

/// Throws Singular on zero.
Rational inverse(const Rational& x);
inline Fp inverse(const Fp& x) { return x.inverse(); }

/// Canonical text: "a/b" with gcd 1 and b > 0, "a" when b = 1.
std::string to_text(const Rational& x);
/// Decimal in [0, p-1].
std::string to_text(const Fp& x);

Rational parse_rational(std::string_view text);

template <class S>
S make_scalar(const FieldSpec& field, long long value);

template <>
inline Rational make_scalar<Rational>(const FieldSpec&, long long value) {
  return Rational(value);
}

template <>
inline Fp make_scalar<Fp>(const FieldSpec& field, long long value) {
  return Fp::bound(value, field.p);
}

template <class S>
constexpr FieldKind scalar_kind();
template <>
constexpr FieldKind scalar_kind<Rational>() { return FieldKind::Rational; }
template <>
constexpr FieldKind scalar_kind<Fp>() { return FieldKind::Prime; }

template <class S>
struct ScalarTag {
  using type = S;
};

/// Calls fn(ScalarTag<S>{}) with S matching the runtime field.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& field, Fn&& fn) {
  if (field.kind == FieldKind::Rational) return fn(ScalarTag<Rational>{});
  return fn(ScalarTag<Fp>{});
}

}  // namespace dq

namespace Eigen {

template <>
struct NumTraits<dq::Fp> : GenericNumTraits<dq::Fp> {
  typedef dq::Fp Real;
  typedef dq::Fp NonInteger;
  typedef dq::Fp Literal;
  typedef dq::Fp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline dq::Fp epsilon() { return dq::Fp(0); }
  static inline dq::Fp dummy_precision() { return dq::Fp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
