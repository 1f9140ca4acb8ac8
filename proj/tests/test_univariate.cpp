#include <gtest/gtest.h>

#include "conics/univariate.hpp"

using conics::Rational;
namespace uni = conics::uni;
using P = uni::Poly<Rational>;

namespace {

P poly(std::initializer_list<int> c) {
    P p;
    for (int v : c) p.push_back(Rational(v));
    return p;
}

P from_roots(const std::vector<Rational>& roots) {
    P p{Rational(1)};
    for (const auto& r : roots) p = uni::mul(p, P{-r, Rational(1)});
    return p;
}

}  // namespace

TEST(Univariate, DivmodAndGcd) {
    auto a = uni::mul(poly({1, 1}), poly({-2, 0, 1}));
    auto b = uni::mul(poly({1, 1}), poly({3, 1}));
    auto g = uni::gcd(a, b);
    EXPECT_EQ(g, poly({1, 1}));
    auto [q, r] = uni::divmod(a, poly({1, 1}));
    EXPECT_TRUE(r.empty());
    EXPECT_EQ(q, poly({-2, 0, 1}));
}

TEST(Univariate, SquarefreeParts) {
    // (s-1)^3 (s+2)
    auto p = uni::mul(uni::mul(poly({-1, 1}), poly({-1, 1})), uni::mul(poly({-1, 1}), poly({2, 1})));
    auto parts = uni::squarefree(p);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(uni::degree(parts[0]), 1);
    EXPECT_EQ(uni::degree(parts[1]), 0);
    EXPECT_EQ(uni::degree(parts[2]), 1);
}

TEST(Univariate, RationalRootsWithFractions) {
    std::vector<Rational> roots{Rational(1) / Rational(3), Rational(-7) / Rational(2), Rational(0), Rational(5)};
    auto p = uni::mul(from_roots(roots), poly({2, 0, 1}));  // s^2 + 2 has no rational roots
    auto found = uni::rational_roots(p);
    ASSERT_EQ(found.size(), roots.size());
    for (const auto& r : roots) EXPECT_NE(std::find(found.begin(), found.end(), r), found.end());
}

TEST(Univariate, RepeatedRootsAndMultiplicity) {
    auto p = from_roots({Rational(2), Rational(2), Rational(2), Rational(-1)});
    auto found = uni::rational_roots(p);
    EXPECT_EQ(found.size(), 2u);
    EXPECT_EQ(uni::root_multiplicity(p, Rational(2)), 3);
    EXPECT_EQ(uni::root_multiplicity(p, Rational(-1)), 1);
    EXPECT_EQ(uni::root_multiplicity(p, Rational(4)), 0);
}

TEST(Univariate, IrreducibleHasNoRoots) {
    EXPECT_TRUE(uni::rational_roots(poly({-2, 0, 1})).empty());
    EXPECT_TRUE(uni::rational_roots(poly({1, 1, 1})).empty());
}
