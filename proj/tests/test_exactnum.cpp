#include <gtest/gtest.h>

#include "support.hpp"
#include "zfarkas/exactnum.hpp"

using namespace zfarkas;
using zfarkas::testing::Gen;

TEST(FloorDiv, RoundsTowardMinusInfinity) {
  EXPECT_EQ(floor_div(Int(7), Int(2)), Int(3));
  EXPECT_EQ(floor_div(Int(7), Int(-2)), Int(-4));
  EXPECT_EQ(floor_div(Int(-7), Int(2)), Int(-4));
  EXPECT_EQ(floor_div(Int(-7), Int(-2)), Int(3));
  EXPECT_EQ(floor_div(Int(0), Int(5)), Int(0));
}

TEST(CeilDiv, RoundsTowardPlusInfinity) {
  EXPECT_EQ(ceil_div(Int(7), Int(2)), Int(4));
  EXPECT_EQ(ceil_div(Int(7), Int(-2)), Int(-3));
  EXPECT_EQ(ceil_div(Int(-7), Int(2)), Int(-3));
  EXPECT_EQ(ceil_div(Int(6), Int(3)), Int(2));
}

TEST(FloorDiv, ZeroDivisorThrows) {
  EXPECT_THROW(floor_div(Int(1), Int(0)), DivisionByZero);
  EXPECT_THROW(ceil_div(Int(1), Int(0)), DivisionByZero);
  EXPECT_THROW(Rat(Int(1), Int(0)), DivisionByZero);
}

TEST(FloorDiv, BoundsProperty) {
  Gen g(11);
  for (int trial = 0; trial < 5000; ++trial) {
    const Int a = g.integer(-1000, 1000);
    const Int m = g.nonzero(-50, 50);
    const Int f = floor_div(a, m);
    const Int c = ceil_div(a, m);
    // m*f <= a < m*f + |m| reads as f <= a/m < f + 1 for either sign of m.
    const Rat q(a, m);
    EXPECT_LE(Rat(f), q);
    EXPECT_LT(q, Rat(f + Int(1)));
    EXPECT_GE(Rat(c), q);
    EXPECT_GT(q, Rat(c - Int(1)));
    const Int gap = c - f;
    EXPECT_TRUE(gap == Int(0) || gap == Int(1));
    EXPECT_EQ(gap == Int(0), divides(m, a));
  }
}

TEST(FloorDiv, AgreesWithMachineArithmetic) {
  Gen g(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const long long a = g.uniform(-100000, 100000);
    long long m = g.uniform(-300, 300);
    if (m == 0) m = 7;
    long long q = a / m;
    if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
    EXPECT_EQ(floor_div(Int(a), Int(m)), Int(q));
    EXPECT_EQ(floor_div(a, m), q);
  }
}

TEST(Int, ParseAndPrint) {
  EXPECT_EQ(Int::parse("-0012").to_string(), "-12");
  EXPECT_EQ(Int::parse("+5"), Int(5));
  EXPECT_EQ(Int::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  EXPECT_THROW(Int::parse("12x"), InvalidArgument);
  EXPECT_THROW(Int::parse(""), InvalidArgument);
}

TEST(Rat, NormalizesAndParses) {
  EXPECT_EQ(Rat(Int(4), Int(-6)).to_string(), "-2/3");
  EXPECT_EQ(Rat::parse("6/4"), Rat(Int(3), Int(2)));
  EXPECT_EQ(Rat::parse("-7").to_string(), "-7");
  EXPECT_EQ(Rat(Int(-7), Int(2)).floor(), Int(-4));
  EXPECT_EQ(Rat(Int(-7), Int(2)).ceil(), Int(-3));
  EXPECT_THROW(Rat::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rat::parse("1/"), InvalidArgument);
}

TEST(Rat, FieldAxiomsOnSamples) {
  Gen g(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rat x = g.rational(50, 30), y = g.rational(50, 30), z = g.rational(50, 30);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ(x - x, Rat(0));
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
    EXPECT_EQ(gcd(x.num(), x.den()), Int(1));
    EXPECT_GT(x.den(), Int(0));
  }
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(Int(12)), (std::vector<Int>{Int(2), Int(2), Int(3)}));
  EXPECT_EQ(factorize(Int(-7)), (std::vector<Int>{Int(7)}));
  EXPECT_TRUE(factorize(Int(1)).empty());
  EXPECT_THROW(factorize(Int(0)), InvalidArgument);
}

TEST(Factorize, RecombinesExactly) {
  Gen g(14);
  for (int trial = 0; trial < 2000; ++trial) {
    const Int n = g.nonzero(-1'000'000, 1'000'000);
    Int prod(1);
    Int prev(1);
    for (const Int& p : factorize(n)) {
      EXPECT_TRUE(is_prime(p));
      EXPECT_LE(prev, p);
      prev = p;
      prod = prod * p;
    }
    EXPECT_EQ(prod, abs(n));
  }
}

TEST(Factorize, RefusesBeyondLimit) {
  EXPECT_THROW(factorize(Int::parse("1000000000039")), ResourceLimit);
}

TEST(IsPrime, MatchesSieve) {
  std::vector<bool> composite(2000, false);
  for (int i = 2; i < 2000; ++i) {
    if (composite[i]) continue;
    for (int j = 2 * i; j < 2000; j += i) composite[j] = true;
  }
  for (int i = 0; i < 2000; ++i) EXPECT_EQ(is_prime(Int(i)), i >= 2 && !composite[i]) << i;
}

TEST(InQp, Examples) {
  EXPECT_TRUE(in_qp(Rat(Int(3), Int(4)), PrimeSet{2}));
  EXPECT_FALSE(in_qp(Rat(Int(1), Int(3)), PrimeSet{2}));
  EXPECT_TRUE(in_qp(Rat(5), PrimeSet{}));
  EXPECT_FALSE(in_qp(Rat(Int(1), Int(2)), PrimeSet{}));
}

TEST(PPart, Examples) {
  EXPECT_EQ(p_part(Rat(Int(1), Int(12)), PrimeSet{2}), std::make_pair(Int(4), Int(3)));
  EXPECT_EQ(p_part(Rat(Int(1), Int(5)), (PrimeSet{2, 3})), std::make_pair(Int(1), Int(5)));
  EXPECT_EQ(p_part(Rat(7), PrimeSet{5}), std::make_pair(Int(1), Int(1)));
}

TEST(InQp, IsASubring) {
  Gen g(15);
  const std::vector<PrimeSet> sets{PrimeSet{}, PrimeSet{2}, PrimeSet{3}, PrimeSet{2, 3}, PrimeSet{2, 5, 7}};
  int checked = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const PrimeSet& p = sets[static_cast<std::size_t>(g.uniform(0, 4))];
    const Rat x = g.rational(40, 24), y = g.rational(40, 24);
    if (!in_qp(x, p) || !in_qp(y, p)) continue;
    ++checked;
    EXPECT_TRUE(in_qp(x + y, p));
    EXPECT_TRUE(in_qp(x * y, p));
    EXPECT_TRUE(in_qp(-x, p));
  }
  EXPECT_GT(checked, 500);
}

TEST(PPart, SplitsTheDenominator) {
  Gen g(16);
  const PrimeSet p{2, 3};
  for (int trial = 0; trial < 1000; ++trial) {
    const Rat x = g.rational(100, 360);
    const auto [smooth, coprime] = p_part(x, p);
    EXPECT_EQ(smooth * coprime, x.den());
    EXPECT_EQ(gcd(coprime, Int(6)), Int(1));
    EXPECT_TRUE(in_qp(Rat(Int(1), smooth), p));
  }
}

TEST(PrimeSet, SetOperations) {
  const PrimeSet a{2, 3}, b{3, 5};
  EXPECT_EQ(a.united(b), (PrimeSet{2, 3, 5}));
  EXPECT_EQ(a.minus(b), PrimeSet{2});
  EXPECT_TRUE((PrimeSet{2, 3, 5}).includes(a));
  EXPECT_FALSE(a.includes(b));
  EXPECT_EQ(PrimeSet({Int(3), Int(2), Int(3)}), a);
  EXPECT_THROW(PrimeSet{4}, InvalidArgument);
}
