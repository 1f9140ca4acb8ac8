#include <gtest/gtest.h>

#include "../tests/support.hpp"

using namespace testing_support;

TEST(Parse, Grammar) {
    EXPECT_EQ(tern("(X1 + X2)^2"), tern("X1^2 + 2*X1*X2 + X2^2"));
    EXPECT_EQ(tern("2X1X2"), tern("2*X1*X2"));
    EXPECT_EQ(tern("X1^2/4 - 3/2*X2^2"), tern("1/4*X1^2 - 3/2*X2^2"));
    EXPECT_EQ(bin("-(T1 - T2)*(T1 + T2)"), bin("T2^2 - T1^2"));
    EXPECT_EQ(bi("T1*X2 - T2*X1").tdeg(), 1);
}

TEST(Parse, RoundTrip) {
    for (const char* s : {"X1^3 - 1/2*X1*X2*X3 + 7*X3^3", "X1^2", "-X2*X3 + X1^2"}) {
        auto f = tern(s);
        EXPECT_EQ(conics::parse_tern(conics::to_string(f)), f);
    }
    auto b = bin("T1^5 + 2/3*T1^2*T2^3 - T2^5");
    EXPECT_EQ(conics::parse_bin(conics::to_string(b)), b);
    auto P = bi("32*T1*X2^3 + 8*T1*X1^2*X2 - 4*T2*X1^3");
    EXPECT_EQ(conics::parse_bi(conics::to_string(P)), P);
}

TEST(Parse, ErrorsCarryColumns) {
    try {
        conics::parse_tern("X1^");
        FAIL();
    } catch (const conics::Error& e) {
        EXPECT_EQ(e.code(), conics::ErrorCode::ParseError);
        EXPECT_EQ(e.column(), 4);
    }
    EXPECT_THROW(conics::parse_tern("X1 + Y2"), conics::Error);
    EXPECT_THROW(conics::parse_tern("X1 / X2"), conics::Error);
    EXPECT_THROW(conics::parse_tern("X1^2 + X2"), conics::Error);
    EXPECT_THROW(conics::parse_bin("T1*X1"), conics::Error);
    EXPECT_THROW(conics::parse_tern("(X1"), conics::Error);
}

TEST(Parse, ZeroNeedsDegree) {
    EXPECT_THROW(conics::parse_bin("0"), conics::Error);
    EXPECT_EQ(conics::parse_bin("0", 3).degree(), 3);
}
