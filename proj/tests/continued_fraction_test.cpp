#include <gtest/gtest.h>

#include "cyclometria/continued_fraction.hpp"
#include "cyclometria/pi_oracle.hpp"
#include "euler_pi.hpp"

using namespace cyclometria;

namespace {

std::vector<long> as_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

bool contains(const std::vector<BigRational>& v, const BigRational& r) {
  return std::find(v.begin(), v.end(), r) != v.end();
}

}  // namespace

TEST(PiContinuedFraction, LeadingTerms) {
  CFExpansion cf = pi_continued_fraction(5);
  EXPECT_EQ(as_longs(cf.terms), (std::vector<long>{3, 7, 15, 1, 292}));
  ASSERT_EQ(cf.convergents.size(), 5u);
  EXPECT_EQ(cf.convergents[0], BigRational(3));
  EXPECT_EQ(cf.convergents[1], make_rational(22, 7));
  EXPECT_EQ(cf.convergents[2], make_rational(333, 106));
  EXPECT_EQ(cf.convergents[3], make_rational(355, 113));
  EXPECT_EQ(cf.convergents[4], make_rational(103993, 33102));
}

TEST(PiContinuedFraction, KnownLongerPrefix) {
  CFExpansion cf = pi_continued_fraction(20);
  EXPECT_EQ(as_longs(cf.terms),
            (std::vector<long>{3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2}));
  EXPECT_THROW(pi_continued_fraction(0), std::invalid_argument);
}

TEST(PiContinuedFraction, IndependentOfStartPrecision) {
  EXPECT_EQ(pi_continued_fraction(60, 64).terms, pi_continued_fraction(60, 256).terms);
  EXPECT_EQ(pi_continued_fraction(60, 8).terms, pi_continued_fraction(60, 64).terms);
}

TEST(PiContinuedFraction, ConvergentsAlternateAroundPi) {
  CFExpansion cf = pi_continued_fraction(40);
  for (std::size_t k = 0; k < cf.convergents.size(); ++k) {
    EXPECT_EQ(cmp_pi(cf.convergents[k]), k % 2 == 0 ? Ordering::Less : Ordering::Greater) << k;
  }
  EXPECT_EQ(convergents_from_terms(cf.terms), cf.convergents);
}

// Best approximation: no rational with a smaller denominator is closer.
TEST(PiContinuedFraction, ConvergentsAreBestApproximations) {
  CFExpansion cf = pi_continued_fraction(8);
  Enclosure pi = pi_enclosure(60);
  BigRational pi_mid = (pi.lo().to_rational() + pi.hi().to_rational()) / BigRational(2);
  for (const auto& c : cf.convergents) {
    if (c.den() > 1000) break;
    BigRational best = (c - pi_mid).abs();
    for (long q = 1; q < c.den().get_si(); ++q) {
      BigInt p = (pi_mid * BigRational(q)).floor();
      for (BigInt cand : {p, BigInt(p + 1)}) {
        EXPECT_GT((BigRational(cand, q) - pi_mid).abs(), best) << c << " vs " << cand << "/" << q;
      }
    }
  }
}

TEST(ContinuedFraction, Rationals) {
  EXPECT_EQ(as_longs(continued_fraction(make_rational(22, 7)).terms), (std::vector<long>{3, 7}));
  EXPECT_EQ(as_longs(continued_fraction(make_rational(355, 113)).terms), (std::vector<long>{3, 7, 16}));
  EXPECT_EQ(as_longs(continued_fraction(BigRational(5)).terms), (std::vector<long>{5}));
  EXPECT_EQ(as_longs(continued_fraction(make_rational(-1, 2)).terms), (std::vector<long>{-1, 2}));
  CFExpansion d = continued_fraction(make_rational(1667438, 530762));
  EXPECT_EQ(d.convergents.back(), make_rational(833719, 265381));
}

TEST(ClassifyBound, Examples) {
  CFExpansion cf = pi_continued_fraction(30);
  EXPECT_EQ(classify_bound(make_rational(355, 113), cf), BoundClass::Convergent);
  EXPECT_EQ(classify_bound(make_rational(333, 106), cf), BoundClass::Convergent);
  EXPECT_EQ(classify_bound(BigRational(3), cf), BoundClass::Convergent);
  // D reduces to 833719/265381, the ninth convergent.
  EXPECT_EQ(classify_bound(make_rational(1667438, 530762), cf), BoundClass::Convergent);
  // Between 333/106 and 103993/33102, j = 1..291 of (355 j + 333)/(113 j + 106).
  EXPECT_EQ(classify_bound(make_rational(688, 219), cf), BoundClass::Semiconvergent);
  EXPECT_EQ(classify_bound(make_rational(355 * 291 + 333, 113 * 291 + 106), cf), BoundClass::Semiconvergent);
  EXPECT_EQ(classify_bound(make_rational(25, 8), cf), BoundClass::Semiconvergent);
  EXPECT_EQ(classify_bound(BigRational(4), cf), BoundClass::Semiconvergent);
  EXPECT_EQ(classify_bound(make_rational(3217, 1024), cf), BoundClass::Other);
  EXPECT_EQ(classify_bound(make_rational(9691760, 3084983), cf), BoundClass::Other);
}

TEST(ClassifyBound, RequiresLongEnoughExpansion) {
  CFExpansion short_cf = pi_continued_fraction(3);
  EXPECT_THROW(classify_bound(make_rational(355, 113), short_cf), std::invalid_argument);
}

TEST(ClassifyBound, ChainBoundsAgainstBruteForce) {
  CFExpansion cf = pi_continued_fraction(40);
  // Brute-force semiconvergent set from consecutive convergent pairs.
  std::vector<BigRational> semis;
  for (std::size_t k = 2; k < 12; ++k) {
    const auto& a = cf.convergents[k - 1];
    const auto& b = cf.convergents[k - 2];
    for (long j = 1; j < cf.terms[k].get_si(); ++j) {
      semis.push_back(BigRational(a.num() * j + b.num(), a.den() * j + b.den()));
    }
  }
  for (const auto& r : {make_rational(1667793, 530875), make_rational(BigInt("9252915567"), BigInt("2945294501"))}) {
    BoundClass c = classify_bound(r, cf);
    if (contains(cf.convergents, r)) {
      EXPECT_EQ(c, BoundClass::Convergent);
    } else if (contains(semis, r)) {
      EXPECT_EQ(c, BoundClass::Semiconvergent);
    } else {
      EXPECT_EQ(c, BoundClass::Other);
    }
  }
}
