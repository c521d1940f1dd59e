#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "cyclometria/rational.hpp"
#include "generators.hpp"

using namespace cyclometria;
using boost::multiprecision::cpp_rational;

namespace {

cpp_rational to_boost(const BigRational& r) {
  return cpp_rational(boost::multiprecision::cpp_int(r.num().get_str()),
                      boost::multiprecision::cpp_int(r.den().get_str()));
}

}  // namespace

TEST(MakeRational, ReducesRawPairs) {
  EXPECT_EQ(make_rational(1667438, 530762).to_string(), "833719/265381");
  EXPECT_EQ(make_rational(355, 113).to_string(), "355/113");
  EXPECT_EQ(make_rational(BigInt("9254583360"), BigInt("2945825376")).to_string(), "96401910/30685681");
}

TEST(MakeRational, ZeroNumeratorHasUnitDenominator) {
  BigRational z = make_rational(0, 5);
  EXPECT_EQ(z.num(), 0);
  EXPECT_EQ(z.den(), 1);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(MakeRational, ZeroDenominatorThrows) {
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
  EXPECT_THROW(BigRational(BigInt(0), BigInt(0)), std::invalid_argument);
}

TEST(MakeRational, SignMovesToNumerator) {
  BigRational r = make_rational(3, -6);
  EXPECT_EQ(r.num(), -1);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(make_rational(-4, -8), make_rational(1, 2));
}

TEST(BigRationalTest, FloorAndCeilRoundTowardInfinities) {
  EXPECT_EQ(make_rational(22, 7).floor(), 3);
  EXPECT_EQ(make_rational(22, 7).ceil(), 4);
  EXPECT_EQ(make_rational(-22, 7).floor(), -4);
  EXPECT_EQ(make_rational(-22, 7).ceil(), -3);
  EXPECT_EQ(BigRational(5).floor(), 5);
  EXPECT_EQ(BigRational(5).ceil(), 5);
}

TEST(BigRationalTest, ParseAndPrint) {
  EXPECT_EQ(BigRational::parse("333/106"), make_rational(333, 106));
  EXPECT_EQ(BigRational::parse("-10/4").to_string(), "-5/2");
  EXPECT_EQ(BigRational::parse("42"), BigRational(42));
  EXPECT_THROW(BigRational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse(""), std::invalid_argument);
  std::ostringstream os;
  os << make_rational(7, 22);
  EXPECT_EQ(os.str(), "7/22");
}

TEST(BigRationalTest, ReciprocalOfZeroThrows) {
  EXPECT_THROW(BigRational(0).reciprocal(), std::domain_error);
  EXPECT_EQ(make_rational(-7, 22).reciprocal(), make_rational(-22, 7));
}

TEST(BigRationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(BigRational(1) / BigRational(0), std::domain_error);
}

TEST(BigRationalTest, OrderingOfConvergents) {
  EXPECT_LT(make_rational(333, 106), make_rational(355, 113));
  EXPECT_LT(make_rational(355, 113), make_rational(22, 7));
  EXPECT_GT(make_rational(-1, 3), make_rational(-1, 2));
}

TEST(HelpersTest, FloorCeilDiv) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(pow10(0), 1);
  EXPECT_EQ(pow10(30).get_str(), "1" + std::string(30, '0'));
  EXPECT_EQ(parse_integer("-123"), -123);
  EXPECT_THROW(parse_integer("12a"), std::invalid_argument);
}

// Value is representation-independent: p/q equals kp/kq for every k.
TEST(BigRationalProperty, ScaledRepresentationsAreEqual) {
  for (int i = 0; i < 500; ++i) {
    BigRational r = gen::rational(20);
    BigInt k = gen::integer(gen::uniform(1, 15));
    EXPECT_EQ(BigRational(r.num() * k, r.den() * k), r);
  }
}

TEST(BigRationalProperty, NormalizationIsIdempotentAndCoprime) {
  for (int i = 0; i < 500; ++i) {
    BigRational r = gen::rational(25);
    BigRational again(r.num(), r.den());
    EXPECT_EQ(again.num(), r.num());
    EXPECT_EQ(again.den(), r.den());
    EXPECT_GT(r.den(), 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), BigInt(abs(r.num())).get_mpz_t(), r.den().get_mpz_t());
    EXPECT_TRUE(g == 1 || r.num() == 0);
  }
}

TEST(BigRationalProperty, ArithmeticAgreesWithBoost) {
  for (int i = 0; i < 500; ++i) {
    BigRational a = gen::rational(18);
    BigRational b = gen::rational(18);
    EXPECT_EQ(to_boost(a + b), to_boost(a) + to_boost(b));
    EXPECT_EQ(to_boost(a - b), to_boost(a) - to_boost(b));
    EXPECT_EQ(to_boost(a * b), to_boost(a) * to_boost(b));
    if (b.sign() != 0) EXPECT_EQ(to_boost(a / b), to_boost(a) / to_boost(b));
    EXPECT_EQ(a < b, to_boost(a) < to_boost(b));
  }
}
