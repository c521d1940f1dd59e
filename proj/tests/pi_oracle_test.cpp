#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "cyclometria/pi_oracle.hpp"
#include "euler_pi.hpp"

using namespace cyclometria;

namespace {

BigInt mpz(const oracle::cpp_int& v) { return BigInt(v.str()); }

}  // namespace

TEST(PiEnclosure, ContainsArchimedesRow) {
  Enclosure e = pi_enclosure(25);
  FixedDecimal row = FixedDecimal::parse("3.141592653589793238462643");
  EXPECT_GE(e.lo(), row);
  EXPECT_LT(e.hi(), row + row.ulp());
  EXPECT_LE(e.width(), FixedDecimal(1, 25));
  EXPECT_EQ(e.common_truncation(24)->to_string(), "3.141592653589793238462643");
}

TEST(PiEnclosure, OneDigit) {
  Enclosure e = pi_enclosure(1);
  EXPECT_LE(e.width(), FixedDecimal(1, 1));
  EXPECT_LE(e.lo(), FixedDecimal::parse("3.15"));
  EXPECT_GE(e.hi(), FixedDecimal::parse("3.14"));
}

TEST(PiEnclosure, ZeroDigitsRejected) {
  EXPECT_THROW(pi_enclosure(0), std::invalid_argument);
  EXPECT_THROW(pi_digits(0), std::invalid_argument);
}

TEST(PiEnclosure, MachinWidthIsBounded) {
  for (unsigned d : {10u, 50u, 300u}) {
    Enclosure e = machin_pi(d);
    EXPECT_LT(e.lo(), e.hi());
    EXPECT_LE(e.width(), FixedDecimal(100 * (d + 10), d));
  }
}

TEST(PiDigits, Examples) {
  EXPECT_EQ(pi_digits(1), "3");
  EXPECT_EQ(pi_digits(25), "3141592653589793238462643");
  EXPECT_EQ(pi_digits(35), oracle::euler_digits(35));
}

TEST(PiDigits, MatchesEulerThroughTwoHundred) {
  EXPECT_EQ(pi_digits(201), oracle::euler_digits(201));
}

TEST(PiDigits, PrefixConsistency) {
  std::string longest = pi_digits(400);
  for (unsigned n = 1; n <= 400; n += 7) EXPECT_EQ(pi_digits(n), longest.substr(0, n)) << n;
}

TEST(CmpPi, KnownConvergents) {
  EXPECT_EQ(cmp_pi(make_rational(333, 106)), Ordering::Less);
  EXPECT_EQ(cmp_pi(make_rational(355, 113)), Ordering::Greater);
  EXPECT_EQ(cmp_pi(BigRational(3)), Ordering::Less);
  EXPECT_EQ(cmp_pi(make_rational(22, 7)), Ordering::Greater);
  EXPECT_EQ(cmp_pi(make_rational(103993, 33102)), Ordering::Less);
  EXPECT_EQ(cmp_pi(BigRational(BigInt("428224593349304"), BigInt("136308121570117"))), Ordering::Less);
}

TEST(CmpPi, NeedsPrecisionBeyondStart) {
  // Agrees with pi to ~60 digits, so the 32-digit start must be doubled.
  Enclosure e = pi_enclosure(80);
  BigRational close = e.lo().truncated(60).to_rational();
  EXPECT_EQ(cmp_pi(close), Ordering::Less);
  EXPECT_EQ(cmp_pi(close + BigRational(BigInt(1), pow10(60))), Ordering::Greater);
}

TEST(CmpPi, CeilingRaises) {
  PiOracle small({60});
  Enclosure e = pi_enclosure(200);
  EXPECT_THROW(small.compare(e.lo().truncated(150).to_rational()), PrecisionCeilingError);
  EXPECT_THROW(small.enclosure(100), PrecisionCeilingError);
}

TEST(CmpValuePi, Examples) {
  EXPECT_EQ(cmp_value_pi(Enclosure(FixedDecimal::parse("3"), FixedDecimal::parse("4"))), Ordering::Inconclusive);
  EXPECT_EQ(cmp_value_pi(enclose(make_rational(3217, 1024), 10)), Ordering::Greater);
  EXPECT_EQ(cmp_value_pi(Enclosure(FixedDecimal::parse("3.141533338705093"), FixedDecimal::parse("3.141533338705095"))),
            Ordering::Less);
}

TEST(PiOracleProperty, MonotoneRefinement) {
  PiOracle o;
  Enclosure prev = o.enclosure(1);
  for (unsigned d = 2; d <= 120; ++d) {
    Enclosure next = o.enclosure(d);
    EXPECT_TRUE(prev.contains(next)) << d;
    prev = next;
  }
}

TEST(PiOracleProperty, AgreesWithEulerAtEveryPrecision) {
  for (unsigned d = 1; d <= 200; ++d) {
    oracle::Interval iv = oracle::euler_pi(d);
    Enclosure other(FixedDecimal(mpz(iv.lo), d), FixedDecimal(mpz(iv.hi), d));
    Enclosure ours = pi_enclosure(d);
    EXPECT_TRUE(ours.overlaps(other)) << d;
    EXPECT_TRUE(other.contains(ours) || ours.contains(other) || ours.overlaps(other));
  }
}

TEST(PiOracleProperty, ConcurrentReadersSeeConsistentPrefixes) {
  PiOracle o;
  std::string reference = pi_digits(600);
  std::vector<std::thread> threads;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (unsigned n = 50 + 37 * t; n < 600; n += 61) {
        if (o.digits(n) != reference.substr(0, n)) ++bad[t];
        Enclosure e = o.enclosure(n);
        if (!e.contains(o.enclosure(n + 5))) ++bad[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int b : bad) EXPECT_EQ(b, 0);
}
