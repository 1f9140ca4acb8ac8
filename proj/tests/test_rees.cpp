#include <gtest/gtest.h>

#include "../tests/support.hpp"

using namespace testing_support;

TEST(Rees, SplitT) {
    auto [A, B] = conics::split_T(bi("T1*X2 - T2*X1"));
    EXPECT_EQ(A, bi("X2").normalized());
    EXPECT_EQ(B, bi("-X1"));
    auto [A5, B5] = conics::split_T(bi(quintic_p()));
    EXPECT_EQ(A5, bi("2*T1*X2 + T2*X2"));
    EXPECT_EQ(B5, bi("-T2*X1 - T2*X3"));
    auto [Aq, Bq] = conics::split_T(bi("T1^2*X2*X3 - T2^2*X1*X3 + T2^2*X2^2"));
    EXPECT_EQ(Aq, bi("T1*X2*X3"));
    EXPECT_EQ(Bq, bi("-T2*X1*X3 + T2*X2^2"));
    EXPECT_THROW(conics::split_T(bi("X1")), conics::Error);
}

TEST(Rees, QuinticDescent) {
    auto ex = quintic_example();
    auto par = conics::make_param(ex.u);
    auto P1 = conics::descend(bi(quintic_p()), ex.pencil, &par);
    EXPECT_EQ(P1, bi(quintic_P1()));
    auto P0 = conics::descend(P1, ex.pencil, &par);
    EXPECT_EQ(P0.tdeg(), 0);
    EXPECT_TRUE(conics::proportional(P0.t_coeff(0, 0), tern(quintic_P0())));
    EXPECT_TRUE(conics::proportional(P0.t_coeff(0, 0), conics::nullspace_implicitize(par, 5)));
    EXPECT_THROW(conics::descend(bi("T1*X1"), ex.pencil, &par), conics::Error);
}

TEST(Rees, QuinticGenerators) {
    auto ex = quintic_example();
    auto par = conics::make_param(ex.u);
    auto g = conics::generators(par, ex.pencil);
    EXPECT_TRUE(g.odd);
    EXPECT_EQ(g.k, 2);
    auto all = g.list();
    ASSERT_EQ(all.size(), 5u);
    EXPECT_TRUE(equivalent_mod_inverse(g.descent[1], bi(quintic_P1()), ex.pencil));
    EXPECT_TRUE(conics::proportional(g.descent[2].t_coeff(0, 0), tern(quintic_P0())));
    EXPECT_TRUE(conics::verify(g, par, ex.pencil).ok());
    EXPECT_TRUE(conics::descent_invariant(g, ex.pencil));
    EXPECT_TRUE(conics::degree_bound_holds(g, 5));
    EXPECT_TRUE(conics::minimality_smoke_test(g));
}

TEST(Rees, SexticMovingConic) {
    auto ex = sextic_example();
    auto par = conics::make_param(ex.u);
    auto dims = conics::moving_conic_dimensions(par, ex.pencil);
    EXPECT_EQ(dims.kernel, 3u);
    EXPECT_EQ(dims.inverse_multiples, 2u);
    auto Q = conics::moving_conic(par, ex.pencil);
    auto printed = bi("T1^2*X2*X3 - T2^2*X1*X3 + T2^2*X2^2");
    EXPECT_TRUE(equivalent_mod_inverse(Q, printed, ex.pencil));
    EXPECT_TRUE(conics::proportional(Q, printed));
    EXPECT_FALSE(equivalent_mod_inverse(conics::BiForm<Rational>::from_bin(bin("T1^2")) *
                                            conics::BiForm<Rational>::from_tern(tern("X1^2")),
                                        printed, ex.pencil));
}

TEST(Rees, SexticGenerators) {
    auto ex = sextic_example();
    auto par = conics::make_param(ex.u);
    auto g = conics::generators(par, ex.pencil);
    EXPECT_FALSE(g.odd);
    ASSERT_EQ(g.list().size(), 6u);
    ASSERT_EQ(g.descent.size(), 3u);
    EXPECT_TRUE(equivalent_mod_inverse(g.descent[1], bi("X2^3*X3*T1 - (X1*X3 - X2^2)^2*T2"), ex.pencil));
    EXPECT_TRUE(conics::proportional(g.descent[2].t_coeff(0, 0), tern("X2^5*X3 - (X1*X3 - X2^2)^3")));
    EXPECT_TRUE(conics::verify(g, par, ex.pencil).ok());
    EXPECT_TRUE(conics::minimality_smoke_test(g));
}

TEST(Rees, Errors) {
    auto ex = sextic_example();
    auto par = conics::make_param(ex.u);
    EXPECT_THROW(conics::generators(par, pencil("X1^2", "X1*X3 - X2^2")), conics::Error);
    EXPECT_THROW(conics::moving_conic(conics::make_param(quintic_example().u), quintic_example().pencil), conics::Error);
}

TEST(Rees, LowBidegreeMembership) {
    auto ex = sextic_example();
    auto inv = conics::inverse_form(ex.pencil);
    auto r = conics::BiForm<Rational>::from_bin(bin("T1 - 3*T2"));
    EXPECT_TRUE(conics::low_bidegree_membership_check(inv, ex.pencil, 6));
    EXPECT_TRUE(conics::low_bidegree_membership_check(r * inv, ex.pencil, 7));
    EXPECT_FALSE(conics::low_bidegree_membership_check(bi("T1*X1^2"), ex.pencil, 6));
    EXPECT_THROW(conics::low_bidegree_membership_check(r * inv, ex.pencil, 6), conics::Error);
}

TEST(Rees, SaturationOfInverseForm) {
    auto ex = sextic_example();
    auto par = conics::make_param(ex.u);
    auto mb = conics::compute_mu_basis(par);
    EXPECT_TRUE(conics::saturation_check(conics::inverse_form(ex.pencil), mb, 6));
}

TEST(Rees, RandomInstancesCountAndInvariants) {
    Rng rng(77);
    int checked = 0;
    for (auto cls : all_classes())
        for (int i = 0; i < 4; ++i) {
            auto p = random_pencil(cls, rng, true);
            auto [a, b] = rng.coprime_pair(2 + i % 3, 2 + i % 3);
            auto red = conics::build_from_pencil(p, a, b).reduced;
            const int d = red.degree();
            auto mb = conics::compute_mu_basis(red);
            if (mb.mu == 1) continue;
            EXPECT_EQ(mb.mu, d / 2);
            auto g = conics::generators(red, p);
            EXPECT_EQ(static_cast<int>(g.list().size()), d / 2 + 3);
            EXPECT_TRUE(conics::verify(g, red, p).ok());
            ++checked;
        }
    EXPECT_GT(checked, 5);
}
