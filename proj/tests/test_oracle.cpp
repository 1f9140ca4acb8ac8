#include <gtest/gtest.h>

#include "../tests/support.hpp"

using namespace testing_support;

TEST(Oracle, NullspaceImplicitize) {
    auto ex = sextic_example();
    auto par = conics::make_param(ex.u);
    EXPECT_TRUE(conics::proportional(conics::nullspace_implicitize(par, 6), tern("X2^5*X3 - (X1*X3 - X2^2)^3")));
    conics::BinTriple<Rational> veronese{bin("T1^2"), bin("T1*T2"), bin("T2^2")};
    auto v = conics::make_param(veronese);
    EXPECT_TRUE(conics::proportional(conics::nullspace_implicitize(v, 2), tern("X2^2 - X1*X3")));
    try {
        conics::nullspace_implicitize(par, 5);
        FAIL();
    } catch (const conics::Error& e) {
        EXPECT_EQ(e.code(), conics::ErrorCode::NoCurve);
    }
    try {
        conics::nullspace_implicitize(v, 3);
        FAIL();
    } catch (const conics::Error& e) {
        EXPECT_EQ(e.code(), conics::ErrorCode::NotProperOrWrongDegree);
    }
}

TEST(Oracle, SamplePoints) {
    auto ex = quintic_example();
    auto par = conics::make_param(ex.u);
    EXPECT_TRUE(conics::sample_points(par, 0, 1).points.empty());
    auto s = conics::sample_points(par, 25, 5);
    ASSERT_EQ(s.points.size(), 25u);
    auto E = tern(quintic_P0());
    std::set<Rational> params;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        EXPECT_TRUE(E.eval(s.points[i].coords()).is_zero());
        params.insert(s.parameters[i][1]);
    }
    EXPECT_EQ(params.size(), 25u);
    auto again = conics::sample_points(par, 25, 5);
    for (std::size_t i = 0; i < s.points.size(); ++i) EXPECT_EQ(again.points[i], s.points[i]);
}

TEST(Oracle, BaseLocusPatterns) {
    EXPECT_EQ(conics::base_locus_pattern(pencil("X1*X2 - X2*X3", "X1*X3 - X2*X3"), 1), (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(conics::base_locus_pattern(pencil("X1^2", "X2*X3"), 1), (std::vector<int>{2, 2}));
    EXPECT_EQ(conics::base_locus_pattern(pencil("X1^2", "X2^2 - X1*X3"), 1), (std::vector<int>{4}));
    EXPECT_EQ(conics::base_locus_pattern(pencil("X1*X2", "X1*X3 - X2*X3"), 1), (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(conics::base_locus_pattern(pencil("X1^2 - X2*X3", "X1*X2"), 1), (std::vector<int>{3, 1}));
    // irrational base points still give a pattern
    EXPECT_EQ(conics::base_locus_pattern(pencil("X1^2 - 2*X3^2", "X2^2 - 3*X3^2"), 1), (std::vector<int>{1, 1, 1, 1}));
    EXPECT_THROW(conics::base_locus_pattern(pencil("X1^2", "X2^2"), 1), conics::Error);
}

TEST(Oracle, PatternAgreesWithClassification) {
    Rng rng(55);
    for (auto cls : all_classes())
        for (int i = 0; i < 8; ++i) {
            auto p = random_pencil(cls, rng, false);
            auto rep = conics::base_locus_report(p, static_cast<std::uint64_t>(i));
            EXPECT_EQ(rep.pattern, conics::class_pattern(cls)) << conics::class_name(cls);
            EXPECT_TRUE(rep.agrees);
        }
}

TEST(Oracle, Deterministic) {
    Rng rng(1);
    auto p = random_pencil(conics::PencilClass::ThreePoints, rng, false);
    auto a = conics::base_locus_report(p, 9), b = conics::base_locus_report(p, 9);
    EXPECT_EQ(a.pattern, b.pattern);
    EXPECT_EQ(a.prime, b.prime);
}

TEST(Oracle, ModularMirror) {
    auto ex = sextic_example();
    auto rep = conics::modular_mirror({ex.pencil, ex.u}, 1000000007ULL);
    EXPECT_TRUE(rep.agrees());
    EXPECT_EQ(rep.rational.mu, 3);
    EXPECT_EQ(rep.modular.mu, 3);
    EXPECT_EQ(rep.modular.generator_count, 6);

    auto three = pencil("X1*X2", "X1*X3 - X2*X3");
    auto r3 = conics::modular_mirror({three, std::nullopt}, 998244353ULL);
    EXPECT_TRUE(r3.agrees());
    EXPECT_EQ(r3.modular.cls, std::string("ThreePoints"));
}

TEST(Oracle, ModularMirrorBadPrime) {
    // base points (1:0:0), (0:1:0), (0:0:1), (5:5:1); the last two collide mod 5
    auto p = pencil("X1*X2 - 5*X1*X3", "X1*X3 - X2*X3");
    EXPECT_EQ(conics::classify(p), conics::PencilClass::FourPoints);
    EXPECT_TRUE(conics::modular_mirror({p, std::nullopt}, 7).agrees());
    bool flagged = false;
    try {
        flagged = !conics::modular_mirror({p, std::nullopt}, 5).agrees();
    } catch (const conics::Error& e) {
        flagged = e.code() == conics::ErrorCode::BadPrime || e.code() == conics::ErrorCode::Degenerate ||
                  e.code() == conics::ErrorCode::Internal;
    }
    EXPECT_TRUE(flagged);
}
