#include <gtest/gtest.h>

#include "conics/field.hpp"

using conics::ErrorCode;
using conics::ModP;
using conics::Rational;

TEST(Rational, ParsesAndReduces) {
    EXPECT_EQ(Rational::parse("6/4"), Rational(3) / Rational(2));
    EXPECT_EQ(Rational::parse("-7").str(), "-7");
    EXPECT_EQ((Rational(1) / Rational(-3)).str(), "-1/3");
    EXPECT_THROW(Rational::parse("1/0"), conics::Error);
    EXPECT_THROW(Rational::parse("abc"), conics::Error);
}

TEST(Rational, Arithmetic) {
    Rational a = Rational(2) / Rational(3), b = Rational(-5) / Rational(7);
    EXPECT_EQ(a + b, Rational(-1) / Rational(21));
    EXPECT_EQ(a * b, Rational(-10) / Rational(21));
    EXPECT_EQ(a / b, Rational(-14) / Rational(15));
    EXPECT_EQ(a.inverse() * a, Rational(1));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(b.sign(), -1);
    EXPECT_THROW(a / Rational(0), conics::Error);
}

TEST(ModP, FieldOperations) {
    const std::uint64_t p = 1000000007ULL;
    ModP a(123456789, p), b(-5, p);
    EXPECT_EQ(b.value(), static_cast<std::int64_t>(p - 5));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a * a.inverse(), ModP(1, p));
    EXPECT_EQ(a - a, ModP(0, p));
    EXPECT_THROW(ModP(0, p).inverse(), conics::Error);
}

TEST(ModP, UnboundConstantsAdoptModulus) {
    const std::uint64_t p = 101;
    ModP x(50, p);
    EXPECT_EQ(x * ModP(2), ModP(100, p));
    EXPECT_EQ(x + 1, ModP(51, p));
    EXPECT_EQ((ModP(3) / x) * x, ModP(3, p));
    EXPECT_EQ(ModP(200), ModP(99, p));
}

TEST(ModP, MixedModuliRejected) {
    EXPECT_THROW(ModP(1, 7) + ModP(1, 11), conics::Error);
    EXPECT_THROW(ModP(1, 2), conics::Error);
}

TEST(ReduceMod, MapsRationals) {
    const std::uint64_t p = 13;
    EXPECT_EQ(conics::reduce_mod(Rational(1) / Rational(2), p), ModP(7, p));
    EXPECT_EQ(conics::reduce_mod(Rational(-3), p), ModP(10, p));
    try {
        conics::reduce_mod(Rational(1) / Rational(26), p);
        FAIL();
    } catch (const conics::Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadPrime);
    }
}
