#include "robtree/errors.hpp"
#include "robtree/rational.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace robtree;

TEST(Rational, ParsesIntegersFractionsAndDecimalsExactly) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(parse_rational("1/4"), Rational(1, 4));
    EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
    EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(parse_rational("12.702"), make_rational(12702, 1000));
    EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
    EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
    EXPECT_EQ(parse_rational("0.1") * 3, Rational(3, 10));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "abc", "1/0", "1//2", "1.2.3", "--1", "1e", "0x10", " 1/ "}) {
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
    }
}

TEST(Rational, PrintsLowestTerms) {
    EXPECT_EQ(to_string(make_rational(6, 8)), "3/4");
    EXPECT_EQ(to_string(make_rational(4, 2)), "2");
    EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
    EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, DoubleConversionIsCorrectlyRounded) {
    EXPECT_EQ(to_double(Rational(9, 5)), 1.8);
    EXPECT_EQ(to_double(Rational(1, 3)), 1.0 / 3.0);
    EXPECT_EQ(to_double(Rational(-2, 3)), -2.0 / 3.0);
    EXPECT_EQ(to_double(Rational(16, 9)), 16.0 / 9.0);
    EXPECT_EQ(to_double(Rational(1, 10)), 0.1);
    EXPECT_EQ(to_double(Rational(0)), 0.0);
    EXPECT_EQ(to_double(parse_rational("12.702")), 12.702);
}

TEST(Rational, DecimalStrings) {
    EXPECT_TRUE(has_finite_decimal(Rational(3, 8)));
    EXPECT_FALSE(has_finite_decimal(Rational(1, 3)));
    EXPECT_EQ(to_decimal_string(Rational(3, 8)), "0.375");
    EXPECT_EQ(to_decimal_string(Rational(-5, 2)), "-2.5");
    EXPECT_EQ(to_decimal_string(Rational(7)), "7");
    EXPECT_EQ(to_decimal_string(Rational(1, 3)), "0.333333333333333");
    EXPECT_EQ(to_decimal_string(Rational(2, 3)), "0.666666666666667");
    EXPECT_EQ(parse_rational(to_decimal_string(Rational(123456789, 1024))), Rational(123456789, 1024));
}

TEST(Rational, FromInteger) {
    EXPECT_EQ(from_integer(0), Rational(0));
    EXPECT_EQ(from_integer(-7), Rational(-7));
    const long long big = std::numeric_limits<long long>::max();
    EXPECT_EQ(to_string(from_integer(big)), std::to_string(big));
    const long long small = std::numeric_limits<long long>::min();
    EXPECT_EQ(to_string(from_integer(small)), std::to_string(small));
}

TEST(Rational, MakeRationalCanonicalizes) {
    const Rational r = make_rational(6, -8);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 4);
    EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Rational, Log2Helpers) {
    EXPECT_EQ(ceil_log2(1), 0);
    EXPECT_EQ(ceil_log2(2), 1);
    EXPECT_EQ(ceil_log2(3), 2);
    EXPECT_EQ(ceil_log2(4), 2);
    EXPECT_EQ(ceil_log2(5), 3);
    EXPECT_EQ(floor_log2(1), 0);
    EXPECT_EQ(floor_log2(3), 1);
    EXPECT_EQ(floor_log2(4), 2);
    EXPECT_EQ(floor_log2(1023), 9);
    for (long long x = 1; x < 5000; ++x) {
        EXPECT_LE(1LL << floor_log2(x), x);
        EXPECT_GE(1LL << ceil_log2(x), x);
        EXPECT_LT(x, 1LL << (floor_log2(x) + 1));
    }
}
