#include <gtest/gtest.h>

#include "../tests/support.hpp"

using namespace testing_support;
using QM = conics::QuadraticMap<Rational>;

namespace {

// a_i b_j == a_j b_i for all pairs, and neither map is zero
bool same_map(const std::array<TF, 3>& a, const std::array<TF, 3>& b) {
    bool nonzero = false;
    for (std::size_t i = 0; i < 3; ++i) {
        nonzero = nonzero || !a[i].is_zero();
        for (std::size_t j = 0; j < 3; ++j)
            if (!(a[i] * b[j] == a[j] * b[i])) return false;
    }
    return nonzero;
}

std::array<TF, 3> forms(const char* a, const char* b, const char* c) { return {tern(a), tern(b), tern(c)}; }

}  // namespace

TEST(QuadMap, CremonaIsInvolution) {
    auto c = conics::standard_cremona<Rational>();
    auto w = conics::witness_cremona<Rational>();
    EXPECT_TRUE(conics::check_witness(c, w));
    EXPECT_EQ(w.W, tern("X1*X2*X3"));
    auto inv = conics::invert(c);
    EXPECT_TRUE(same_map(inv.inverse.q, c.q));
    EXPECT_TRUE(conics::check_witness(c, inv));
}

TEST(QuadMap, PrintedInversesOfCanonicalCases) {
    struct Case {
        const char *f1, *f2;
        std::array<TF, 3> expected_map, expected_inverse;
    };
    std::vector<Case> cases{
        {"X1^2", "X2*X3", forms("X1^2", "X2*X3", "X1*X2"), forms("X1*X3", "X3^2", "X1*X2")},
        {"X1^2 - X2*X3", "X1*X2", forms("X1^2 - X2*X3", "X1*X2", "X2*X3"),
         forms("X2*(X1 + X3)", "X2^2", "X3*(X1 + X3)")},
        {"X1^2", "X2^2 - X1*X3", forms("X1^2", "X2^2 - X1*X3", "X1*X2"), forms("X1^2", "X1*X3", "X3^2 - X1*X2")},
    };
    for (const auto& c : cases) {
        auto ext = conics::extend_pencil(pencil(c.f1, c.f2));
        EXPECT_TRUE(same_map(ext.map.q, c.expected_map)) << c.f1;
        EXPECT_TRUE(same_map(ext.witness.inverse.q, c.expected_inverse)) << c.f1;
        EXPECT_TRUE(conics::check_witness(ext.map, ext.witness));
        EXPECT_TRUE(conics::reverse_factor(ext.map, ext.witness).has_value());
    }
}

TEST(QuadMap, ThreeBasePointCasesAreCremonaUpToLinearChange) {
    for (auto [f1, f2] : {std::pair{"X1*X2 - X2*X3", "X1*X3 - X2*X3"}, std::pair{"X1*X2", "X1*X3 - X2*X3"}}) {
        auto ext = conics::extend_pencil(pencil(f1, f2));
        EXPECT_EQ(ext.map.q[2], tern("X2*X3"));
        // map o cremona = (linear form) * X1 X2 X3 in each slot
        for (const auto& g : conics::apply_map(ext.map, conics::standard_cremona<Rational>())) {
            auto l = g.divide_exact(tern("X1*X2*X3"));
            ASSERT_TRUE(l.has_value());
            EXPECT_EQ(l->degree(), 1);
        }
        EXPECT_TRUE(conics::check_witness(ext.map, ext.witness));
    }
}

TEST(QuadMap, RejectsBadMaps) {
    EXPECT_THROW(conics::make_quadratic_map(tern("X1^2"), tern("X1*X2"), tern("X1*X3")), conics::Error);
    EXPECT_THROW(conics::make_quadratic_map(tern("X1"), tern("X1*X2"), tern("X1*X3")), conics::Error);
    // linear dependence: no inverse
    QM dep{{tern("X1^2"), tern("X2^2"), tern("X1^2 + X2^2")}};
    EXPECT_THROW(conics::invert(dep), conics::Error);
    EXPECT_TRUE(conics::common_factor(std::array<TF, 3>{tern("X1^2"), tern("X1*X2"), tern("X1*X3")}).has_value());
    EXPECT_FALSE(conics::common_factor(conics::standard_cremona<Rational>().q).has_value());
}

TEST(QuadMap, RandomExtensionsAreBirational) {
    Rng rng(41);
    for (auto cls : all_classes())
        for (int i = 0; i < 3; ++i) {
            auto p = random_pencil(cls, rng, false);
            auto ext = conics::extend_pencil(p, 1);
            EXPECT_EQ(ext.map.q[0], p.f1);
            EXPECT_EQ(ext.map.q[1], p.f2);
            EXPECT_TRUE(conics::check_witness(ext.map, ext.witness)) << conics::class_name(cls);
            EXPECT_TRUE(conics::reverse_factor(ext.map, ext.witness).has_value());
        }
}

TEST(QuadMap, CremonaDropsMonoidDegree) {
    // (T1 alpha, T2 alpha, T1 T2 beta) goes to (T2 beta, T1 beta, alpha)
    for (int d0 = 3; d0 <= 6; ++d0) {
        Rng rng(static_cast<std::uint64_t>(d0));
        BF alpha, beta;
        while (true) {
            std::tie(alpha, beta) = rng.coprime_pair(d0 - 1, d0 - 2);
            if (alpha.coeff(0).is_zero() || alpha.coeff(d0 - 1).is_zero()) continue;
            if (d0 > 2 && (beta.coeff(0).is_zero() || beta.coeff(d0 - 2).is_zero())) continue;
            break;
        }
        auto u = conics::monoid_param(alpha, BF::monomial(1, 1) * beta);
        auto img = conics::image_of_curve(conics::standard_cremona<Rational>(), u, conics::witness_cremona<Rational>());
        EXPECT_EQ(img.v.degree(), d0 - 1);
        auto expect = std::array<BF, 3>{conics::T2<Rational>() * beta, conics::T1<Rational>() * beta, alpha};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(img.v.u[i] * expect[j], img.v.u[j] * expect[i]);
        EXPECT_TRUE(conics::degree_bounds_check(d0, img.v.degree()));
        EXPECT_TRUE(conics::evaluate_on_param(img.E, img.v.u).is_zero());
    }
}

TEST(QuadMap, GenericMapDoublesDegree) {
    Rng rng(8);
    auto ext = conics::extend_pencil(random_pencil(conics::PencilClass::FourPoints, rng, false));
    for (int d0 = 2; d0 <= 5; ++d0) {
        auto [a, b] = rng.coprime_pair(d0 - 1, d0);
        auto u = conics::monoid_param(a, b);
        auto img = conics::image_of_curve(ext.map, u, ext.witness);
        EXPECT_EQ(img.v.degree(), 2 * d0);
        EXPECT_TRUE(conics::proportional(img.E, conics::nullspace_implicitize(img.v, 2 * d0)));
    }
}

TEST(QuadMap, ContractedLine) {
    conics::Parameterization<Rational> line{{bin("T1"), bin("T2"), BF(1)}, true, std::nullopt};
    EXPECT_THROW(conics::image_of_curve(conics::standard_cremona<Rational>(), line), conics::Error);
}

TEST(QuadMap, DegreeBounds) {
    EXPECT_TRUE(conics::degree_bounds_check(3, 6));
    EXPECT_TRUE(conics::degree_bounds_check(3, 2));
    EXPECT_FALSE(conics::degree_bounds_check(3, 7));
    EXPECT_FALSE(conics::degree_bounds_check(4, 2));
}

TEST(QuadMap, ConicCurvesMapToLineParameterizable) {
    Rng rng(13);
    for (auto cls : all_classes()) {
        auto p = random_pencil(cls, rng, true);
        auto ext = conics::extend_pencil(p);
        auto [a, b] = rng.coprime_pair(3, 3);
        auto red = conics::build_from_pencil(p, a, b).reduced;
        auto img = conics::image_of_curve(ext.map, red, ext.witness);
        EXPECT_TRUE(conics::check_inverse_forms(img.v.u, tern("X1"), tern("X2"))) << conics::class_name(cls);
    }
}

TEST(QuadMap, MonoidsPulledBackAreConicParameterizable) {
    Rng rng(14);
    for (auto cls : all_classes()) {
        auto p = random_pencil(cls, rng, false);
        auto ext = conics::extend_pencil(p);
        auto back = conics::reverse_factor(ext.map, ext.witness);
        ASSERT_TRUE(back.has_value());
        conics::BirationalWitness<Rational> w{ext.map, *back};
        auto [a, b] = rng.coprime_pair(2, 3);
        auto img = conics::image_of_curve(ext.witness.inverse, conics::monoid_param(a, b), w);
        EXPECT_TRUE(conics::check_inverse(img.v, p)) << conics::class_name(cls);
    }
}
