#include <gtest/gtest.h>

#include "../tests/support.hpp"

using namespace testing_support;

TEST(Implicitize, ExtraneousExample) {
    auto p = pencil("X1*X2 - X1*X3", "X1*X2 - X2*X3");
    auto raw = conics::compose_with_pair(bin("T2^2"), p.f1, p.f2) * X(1) -
               conics::compose_with_pair(bin("T1^2"), p.f1, p.f2) * X(2);
    // expanded by hand: the product comes out with the opposite sign
    EXPECT_EQ(raw, tern("X1*X2*(X1 - X2)*(X1*X2 - X3^2)"));
    EXPECT_TRUE(conics::proportional(raw, tern("X1*X2*(X1 - X2)*(X3^2 - X1*X2)")));
    auto r = conics::implicit_from_pencil(p, bin("T1^2"), bin("T2^2"));
    EXPECT_TRUE(conics::proportional(r.E, tern("X3^2 - X1*X2")));
    EXPECT_TRUE(conics::proportional(r.H, tern("X1*X2*(X1 - X2)")));
    EXPECT_EQ(r.nu, 1);
    EXPECT_TRUE(conics::factorization_holds(r));
    EXPECT_FALSE(r.E.eval({Rational(0), Rational(0), Rational(1)}).is_zero());
}

TEST(Implicitize, ReferenceFamilies) {
    for (const auto& fam : families())
        for (int d0 = 2; d0 <= 4; ++d0) {
            auto r = conics::implicit_from_pencil(pencil(fam.f1, fam.f2), t_power(1, d0), t_power(2, d0));
            EXPECT_TRUE(conics::proportional(r.E, fam.equation(d0))) << fam.f1 << " d0=" << d0;
            EXPECT_TRUE(conics::proportional(r.H, tern(fam.extraneous))) << fam.f1 << " d0=" << d0;
            EXPECT_EQ(r.nu, 1);
            EXPECT_TRUE(conics::factorization_holds(r));
        }
}

TEST(Implicitize, Monoid) {
    EXPECT_EQ(conics::monoid_implicit(bin("T1*T2"), bin("T1^3 + T2^3")), tern("X1^3 + X2^3 - X1*X2*X3"));
    EXPECT_THROW(conics::monoid_implicit(bin("T1"), bin("T1^2")), conics::Error);
    EXPECT_THROW(conics::monoid_implicit(bin("T1^2"), bin("T1^2")), conics::Error);
    Rng rng(4);
    for (int d = 2; d <= 7; ++d) {
        auto [a, b] = rng.coprime_pair(d - 1, d);
        auto E = conics::monoid_implicit(a, b);
        EXPECT_TRUE(conics::evaluate_on_param(E, conics::monoid_param(a, b).u).is_zero());
    }
}

TEST(Implicitize, ResultantMatchesNullspaceOracle) {
    Rng rng(9);
    for (int d = 2; d <= 6; ++d) {
        conics::BinTriple<Rational> u{rng.binary(d), rng.binary(d), rng.binary(d)};
        auto par = conics::make_param(u);
        if (!par.reduced) continue;
        auto E = conics::implicit_from_mu_basis(par);
        EXPECT_TRUE(conics::evaluate_on_param(E, u).is_zero());
        EXPECT_TRUE(conics::proportional(E, conics::nullspace_implicitize(par, E.degree())));
    }
}

TEST(Implicitize, SexticExample) {
    conics::BinTriple<Rational> u{bin("T1^6 + T1^5*T2"), bin("T1^3*T2^3"), bin("T2^6")};
    auto E = conics::implicit_from_mu_basis(conics::make_param(u));
    EXPECT_TRUE(conics::proportional(E, tern("X2^5*X3 - (X1*X3 - X2^2)^3")));
    auto p = pencil("X2^2", "X1*X3 - X2^2");
    EXPECT_TRUE(conics::is_multiple_of_E(conics::inverse_form(p), p, E));
    EXPECT_FALSE(conics::is_multiple_of_E(bi("X1"), p, E));
}

TEST(Implicitize, RandomPencilsFactorize) {
    Rng rng(17);
    for (auto cls : all_classes())
        for (int i = 0; i < 3; ++i) {
            auto p = random_pencil(cls, rng, true);
            auto [a, b] = rng.coprime_pair(2 + i, 2 + i);
            auto r = conics::implicit_from_pencil(p, a, b);
            EXPECT_TRUE(conics::factorization_holds(r));
            auto red = conics::build_from_pencil(p, a, b).reduced;
            EXPECT_EQ(r.E.degree() * r.nu, red.degree() * r.nu);
            EXPECT_TRUE(conics::evaluate_on_param(r.E, red.u).is_zero());
        }
}
