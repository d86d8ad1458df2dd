#include "zfarkas/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>

namespace zfarkas {

namespace mp = boost::multiprecision;

Int Int::parse(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    }
  }
  // Leading zeros would select octal in the backend parser.
  while (pos + 1 < text.size() && text[pos] == '0') ++pos;
  Backend v(std::string(text.substr(pos)));
  return Int(text[0] == '-' ? Backend(-v) : v);
}

bool Int::fits_int64() const {
  return value_ >= std::numeric_limits<std::int64_t>::min() &&
         value_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Int::to_int64() const {
  if (!fits_int64()) throw ResourceLimit("integer does not fit in 64 bits: " + to_string());
  return value_.convert_to<std::int64_t>();
}

std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.value_; }

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

Int gcd(const Int& a, const Int& b) { return Int(Int::Backend(mp::gcd(a.raw(), b.raw()))); }

Int lcm(const Int& a, const Int& b) {
  if (a.is_zero() || b.is_zero()) return Int(0);
  return abs(exact_div(a, gcd(a, b)) * b);
}

bool divides(const Int& d, const Int& a) {
  if (d.is_zero()) return a.is_zero();
  return Int::Backend(a.raw() % d.raw()).is_zero();
}

Int floor_div(const Int& a, const Int& m) {
  if (m.is_zero()) throw DivisionByZero();
  Int::Backend q;
  Int::Backend r;
  mp::divide_qr(a.raw(), m.raw(), q, r);
  if (!r.is_zero() && (r.sign() != m.sign())) --q;
  return Int(std::move(q));
}

Int ceil_div(const Int& a, const Int& m) { return -floor_div(-a, m); }

Int floor_mod(const Int& a, const Int& m) { return a - m * floor_div(a, m); }

Int exact_div(const Int& a, const Int& m) {
  if (m.is_zero()) throw DivisionByZero();
  Int::Backend q;
  Int::Backend r;
  mp::divide_qr(a.raw(), m.raw(), q, r);
  if (!r.is_zero()) {
    throw InvalidArgument(m.to_string() + " does not divide " + a.to_string());
  }
  return Int(std::move(q));
}

Int pow(const Int& base, unsigned exponent) {
  return Int(Int::Backend(mp::pow(base.raw(), exponent)));
}

Rat::Rat(Int num, Int den) {
  if (den.is_zero()) throw DivisionByZero();
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (g != Int(1)) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(Int::parse(text));
  return Rat(Int::parse(text.substr(0, slash)), Int::parse(text.substr(slash + 1)));
}

std::string Rat::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) return *this = Rat(num_ + o.num_, den_);
  return *this = Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) { return *this = Rat(num_ * o.num_, den_ * o.den_); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this = Rat(num_ * o.den_, den_ * o.num_);
}

std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.to_string(); }

Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

bool is_prime(const Int& n) {
  if (n < Int(2)) return false;
  if (n < Int(4)) return true;
  if (divides(Int(2), n) || divides(Int(3), n)) return false;
  for (Int d(5); d * d <= n; d += Int(6)) {
    if (divides(d, n) || divides(d + Int(2), n)) return false;
  }
  return true;
}

PrimeSet::PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
  for (const auto& p : primes_) {
    if (!is_prime(p)) throw InvalidArgument("not a prime: " + p.to_string());
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet::PrimeSet(std::initializer_list<long long> primes)
    : PrimeSet(std::vector<Int>(primes.begin(), primes.end())) {}

bool PrimeSet::contains(const Int& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::includes(const PrimeSet& other) const {
  return std::includes(primes_.begin(), primes_.end(), other.primes_.begin(),
                       other.primes_.end());
}

const Int& PrimeSet::smallest() const {
  if (primes_.empty()) throw InvalidArgument("empty prime set has no smallest element");
  return primes_.front();
}

PrimeSet PrimeSet::united(const PrimeSet& other) const {
  PrimeSet out;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                 std::back_inserter(out.primes_));
  return out;
}

PrimeSet PrimeSet::minus(const PrimeSet& other) const {
  PrimeSet out;
  std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(),
                      other.primes_.end(), std::back_inserter(out.primes_));
  return out;
}

std::vector<Int> factorize(const Int& n, const Int& limit) {
  if (n.is_zero()) throw InvalidArgument("cannot factorize zero");
  Int m = abs(n);
  if (m > limit) {
    throw ResourceLimit("factorization limited to |n| <= " + limit.to_string() + ", got " +
                        m.to_string());
  }
  std::vector<Int> out;
  auto strip = [&](const Int& p) {
    while (divides(p, m)) {
      out.push_back(p);
      m = exact_div(m, p);
    }
  };
  strip(Int(2));
  strip(Int(3));
  for (Int d(5); d * d <= m; d += Int(6)) {
    strip(d);
    strip(d + Int(2));
  }
  if (m > Int(1)) out.push_back(m);
  return out;
}

PrimeSet prime_factors(const Int& n, const Int& limit) { return PrimeSet(factorize(n, limit)); }

std::pair<Int, Int> split_smooth(const Int& n, const PrimeSet& primes) {
  if (n.is_zero()) throw InvalidArgument("split_smooth of zero");
  Int coprime = abs(n);
  Int smooth(1);
  for (const auto& p : primes) {
    while (divides(p, coprime)) {
      coprime = exact_div(coprime, p);
      smooth *= p;
    }
  }
  return {smooth, coprime};
}

bool in_qp(const Rat& x, const PrimeSet& primes) {
  return split_smooth(x.den(), primes).second == Int(1);
}

std::pair<Int, Int> p_part(const Rat& x, const PrimeSet& primes) {
  return split_smooth(x.den(), primes);
}

IntVector int_vector(std::initializer_list<long long> values) {
  IntVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (auto x : values) v(i++) = Int(x);
  return v;
}

RatVector rat_vector(std::initializer_list<Rat> values) {
  RatVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

}  // namespace zfarkas
