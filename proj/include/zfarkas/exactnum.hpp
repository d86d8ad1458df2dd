#pragma once

// Exact integers and rationals, floor/ceiling division, factorization and
// membership in the localized rings Q_P.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "zfarkas/errors.hpp"

namespace zfarkas {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over boost::multiprecision::cpp_int. Truncating
/// division is deliberately not exposed; use floor_div / ceil_div / exact_div.
class Int {
 public:
  using Backend = boost::multiprecision::cpp_int;

  Int() = default;
  Int(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Int(int v) : value_(v) {}        // NOLINT(google-explicit-constructor)
  explicit Int(Backend v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal integer. Throws InvalidArgument.
  static Int parse(std::string_view text);

  const Backend& raw() const { return value_; }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool fits_int64() const;
  std::int64_t to_int64() const;
  std::string to_string() const { return value_.str(); }

  Int operator-() const { return Int(Backend(-value_)); }
  Int& operator+=(const Int& o) {
    value_ += o.value_;
    return *this;
  }
  Int& operator-=(const Int& o) {
    value_ -= o.value_;
    return *this;
  }
  Int& operator*=(const Int& o) {
    value_ *= o.value_;
    return *this;
  }

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend bool operator==(const Int& a, const Int& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& a);

 private:
  Backend value_;
};

Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);
/// Nonnegative least common multiple; lcm(0, x) = 0.
Int lcm(const Int& a, const Int& b);
bool divides(const Int& d, const Int& a);

/// floor(a / m). Throws DivisionByZero when m = 0.
Int floor_div(const Int& a, const Int& m);
/// ceil(a / m); equals -floor_div(-a, m).
Int ceil_div(const Int& a, const Int& m);
/// a - m * floor_div(a, m); has the sign of m.
Int floor_mod(const Int& a, const Int& m);
/// a / m when m divides a; throws InvalidArgument otherwise.
Int exact_div(const Int& a, const Int& m);
Int pow(const Int& base, unsigned exponent);

template <std::signed_integral T>
constexpr T floor_div(T a, T m) {
  if (m == 0) throw DivisionByZero();
  T q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

template <std::signed_integral T>
constexpr T ceil_div(T a, T m) {
  if (m == 0) throw DivisionByZero();
  T q = a / m;
  if ((a % m != 0) && ((a < 0) == (m < 0))) ++q;
  return q;
}

/// Exact rational, always reduced with a positive denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : num_(v), den_(1) {}        // NOLINT(google-explicit-constructor)
  Rat(Int v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(Int num, Int den);

  /// Accepts "p" or "p/q". Throws InvalidArgument or DivisionByZero.
  static Rat parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == Int(1); }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }
  Int floor() const { return floor_div(num_, den_); }
  Int ceil() const { return ceil_div(num_, den_); }
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rat operator-() const { return Rat(-num_, den_, Reduced{}); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a);

 private:
  struct Reduced {};
  Rat(Int num, Int den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Int num_;
  Int den_;
};

Rat abs(const Rat& a);

bool is_prime(const Int& n);

/// Finite ascending set of primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws InvalidArgument if an element is not prime. Duplicates are merged.
  explicit PrimeSet(std::vector<Int> primes);
  PrimeSet(std::initializer_list<long long> primes);

  const std::vector<Int>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  bool contains(const Int& p) const;
  bool includes(const PrimeSet& other) const;
  const Int& smallest() const;

  PrimeSet united(const PrimeSet& other) const;
  PrimeSet minus(const PrimeSet& other) const;

  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<Int> primes_;
};

/// Default bound on |n| accepted by factorize.
inline const Int kFactorizeLimit = Int(1'000'000'000'000LL);

/// Prime factors of |n| with multiplicity, ascending. Trial division.
/// Throws InvalidArgument for n = 0, ResourceLimit when |n| exceeds limit.
std::vector<Int> factorize(const Int& n, const Int& limit = kFactorizeLimit);
/// Distinct prime factors of |n| (empty for |n| = 1).
PrimeSet prime_factors(const Int& n, const Int& limit = kFactorizeLimit);

/// Splits |n| = smooth * coprime where smooth has all prime factors in P
/// and coprime has none. n must be nonzero.
std::pair<Int, Int> split_smooth(const Int& n, const PrimeSet& primes);

/// True iff every prime factor of the reduced denominator of x lies in P.
bool in_qp(const Rat& x, const PrimeSet& primes);

/// Splits the denominator of x as (P-smooth part, P-coprime part).
std::pair<Int, Int> p_part(const Rat& x, const PrimeSet& primes);

}  // namespace zfarkas

namespace Eigen {

template <>
struct NumTraits<zfarkas::Int> : GenericNumTraits<zfarkas::Int> {
  using Real = zfarkas::Int;
  using NonInteger = zfarkas::Rat;
  using Literal = zfarkas::Int;
  using Nested = zfarkas::Int;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<zfarkas::Rat> : GenericNumTraits<zfarkas::Rat> {
  using Real = zfarkas::Rat;
  using NonInteger = zfarkas::Rat;
  using Literal = zfarkas::Rat;
  using Nested = zfarkas::Rat;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace zfarkas {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;
using RatMatrix = Matrix<Rat>;
using RatVector = Vector<Rat>;

template <typename Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rat>();
}

/// Builds an IntVector from a braced list; convenience for tests and examples.
IntVector int_vector(std::initializer_list<long long> values);
RatVector rat_vector(std::initializer_list<Rat> values);

}  // namespace zfarkas
