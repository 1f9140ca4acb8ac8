#pragma once

#include <array>
#include <functional>
#include <string>
#include <cstdint>
#include <random>
#include <vector>

#include "conics/conics.hpp"

namespace testing_support {

using conics::BinForm;
using conics::ConicPencil;
using conics::Matrix;
using conics::PencilClass;
using conics::Rational;
using conics::TernForm;
using TF = TernForm<Rational>;
using BF = BinForm<Rational>;

inline TF tern(const char* s) { return conics::parse_tern(s); }
inline BF bin(const char* s) { return conics::parse_bin(s); }
inline conics::BiForm<Rational> bi(const char* s) { return conics::parse_bi(s); }
inline ConicPencil<Rational> pencil(const char* f1, const char* f2) { return conics::new_pencil(tern(f1), tern(f2)); }

inline const std::array<PencilClass, 5>& all_classes() {
    static const std::array<PencilClass, 5> c{PencilClass::FourPoints, PencilClass::ThreePoints,
                                              PencilClass::TwoPointsBothDouble, PencilClass::TwoPointsOneTriple,
                                              PencilClass::OnePoint};
    return c;
}

// Base points of the canonical pencils.
inline std::vector<std::array<int, 3>> canonical_points(PencilClass c) {
    switch (c) {
        case PencilClass::FourPoints: return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
        case PencilClass::ThreePoints: return {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
        case PencilClass::TwoPointsBothDouble: return {{0, 1, 0}, {0, 0, 1}};
        case PencilClass::TwoPointsOneTriple: return {{0, 0, 1}, {0, 1, 0}};
        default: return {{0, 0, 1}};
    }
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
    Rational small() { return Rational(integer(-9, 9)) / Rational(integer(1, 9)); }
    Rational nonzero() {
        while (true) {
            auto r = small();
            if (!r.is_zero()) return r;
        }
    }
    BF binary(int deg) {
        BF f(deg);
        for (int k = 0; k <= deg; ++k) f.coeff(k) = Rational(integer(-5, 5));
        return f;
    }
    // a and b of degree deg, coprime, both nonzero
    std::pair<BF, BF> coprime_pair(int deg, int deg_b) {
        while (true) {
            auto a = binary(deg), b = binary(deg_b);
            if (a.is_zero() || b.is_zero()) continue;
            if (conics::bin_gcd(a, b).degree() == 0) return {a, b};
        }
    }
    Matrix<Rational> invertible() {
        while (true) {
            Matrix<Rational> m(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) = small();
            if (!conics::determinant(m).is_zero()) return m;
        }
    }
    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

// A * C(M X) for the canonical pair C of the class, random A and M.
// With through_origin set, M sends (0:0:1) to a base point of C so that (0:0:1) is a base point.
inline ConicPencil<Rational> random_pencil(PencilClass c, Rng& rng, bool through_origin) {
    auto canon = conics::canonical_pencil<Rational>(c);
    while (true) {
        auto m = rng.invertible();
        if (through_origin) {
            auto pts = canonical_points(c);
            auto pt = pts[static_cast<std::size_t>(rng.integer(0, static_cast<int>(pts.size()) - 1))];
            auto s = rng.nonzero();
            for (std::size_t i = 0; i < 3; ++i) m(i, 2) = s * Rational(pt[i]);
            if (conics::determinant(m).is_zero()) continue;
        }
        conics::LinearChange<Rational> lc(m);
        auto g1 = conics::apply_linear_change(canon.f1, lc), g2 = conics::apply_linear_change(canon.f2, lc);
        Rational a = rng.small(), b = rng.small(), cc = rng.small(), d = rng.small();
        if ((a * d - b * cc).is_zero()) continue;
        return {a * g1 + b * g2, cc * g1 + d * g2};
    }
}

// Both members split into products of linear forms in X1, X2 only.
inline ConicPencil<Rational> random_degenerate_pencil(Rng& rng) {
    while (true) {
        auto lin = [&] { return TF::linear(rng.small(), rng.small(), Rational(0)); };
        auto f1 = lin() * lin(), f2 = lin() * lin();
        if (f1.is_zero() || f2.is_zero() || conics::quadratics_share_factor(f1, f2)) continue;
        auto m = rng.invertible();
        conics::LinearChange<Rational> lc(m);
        if (rng.integer(0, 1) == 0) return {f1, f2};
        return {conics::apply_linear_change(f1, lc), conics::apply_linear_change(f2, lc)};
    }
}

// Multiplicity by partial derivatives: the least order with a nonvanishing derivative at the point.
inline int multiplicity_by_derivatives(const TF& E, const std::array<Rational, 3>& pt) {
    std::vector<TF> layer{E};
    for (int order = 0; order <= E.degree(); ++order) {
        for (const auto& f : layer)
            if (!f.eval(pt).is_zero()) return order;
        std::vector<TF> next;
        for (const auto& f : layer)
            for (int i = 0; i < 3; ++i) next.push_back(f.derivative(i));
        layer = std::move(next);
    }
    return E.degree();
}

// Five reference families with a = T1^d0, b = T2^d0: pencil, gcd of the raw triple, extraneous factor and E by d0.
struct Family {
    const char* f1;
    const char* f2;
    const char* gcd;
    const char* extraneous;
    std::function<TF(int)> equation;
};

inline TF X(int i) { return TF::var(i - 1); }

inline const std::vector<Family>& families() {
    static const std::vector<Family> f{
        {"X1*X2 - X2*X3", "X1*X3 - X2*X3", "1", "1",
         [](int d0) { return X(2).pow(d0 + 1) * (X(1) - X(3)).pow(d0) - X(1) * X(3).pow(d0) * (X(1) - X(2)).pow(d0); }},
        {"X1*X2", "X1*X3 - X2*X3", "T1", "X1",
         [](int d0) { return X(1).pow(d0 - 1) * X(2).pow(d0 + 1) - X(3).pow(d0) * (X(1) - X(2)).pow(d0); }},
        {"X1^2", "X2*X3", "T1*T2", "X1*X2",
         [](int d0) { return X(1).pow(2 * d0 - 1) - X(2).pow(d0 - 1) * X(3).pow(d0); }},
        {"X1^2 - X2*X3", "X1*X2", "T2", "X2",
         [](int d0) { return (X(1) * X(1) - X(2) * X(3)).pow(d0) - X(1).pow(d0 + 1) * X(2).pow(d0 - 1); }},
        {"X1^2", "X2^2 - X1*X3", "T1", "X1",
         [](int d0) { return X(1).pow(2 * d0 - 1) * X(2) - (X(2) * X(2) - X(1) * X(3)).pow(d0); }},
    };
    return f;
}

inline BF t_power(int i, int e) { return i == 1 ? BF::monomial(e, 0) : BF::monomial(0, e); }

// The degree-5 and degree-6 reference examples.
struct Example {
    conics::BinTriple<Rational> u;
    ConicPencil<Rational> pencil;
};

inline Example quintic_example() {
    return {{bin("T1^5 + T2^5 + T1^4*T2"), bin("T1^3*T2^2"), bin("T1^5 - T2^5")},
            pencil("4*X1^2 + X2*X1 + 4*X1*X3 + 16*X2^2 + X2*X3", "4*X1^2 + 6*X1*X2 + X2^2 + 2*X2*X3 - 4*X3^2")};
}

inline Example sextic_example() {
    return {{bin("T1^6 + T1^5*T2"), bin("T1^3*T2^3"), bin("T2^6")}, pencil("X2^2", "X1*X3 - X2^2")};
}

inline const char* quintic_p() { return "2*T1^2*X2 + T2*T1*X2 - T2^2*X1 - T2^2*X3"; }
inline const char* quintic_q() {
    return "8*T1^3*X1 - 8*T1^3*X3 - 4*T1^2*T2*X1 - 4*T1^2*T2*X3 + 2*T1*T2^2*X1 + T2^2*T1*X2 + 2*T1*T2^2*X3"
           " - T2^3*X1 - 16*T2^3*X2 - T2^3*X3";
}
inline const char* quintic_P1() {
    return "32*T1*X2^3 + 8*T1*X1^2*X2 + 2*T1*X1*X2^2 + 8*T1*X1*X2*X3 + 2*T1*X2^2*X3 + 16*T2*X2^3 - 2*T2*X1^2*X2"
           " - 4*T2*X1*X2*X3 - 4*T2*X1^3 + 4*T2*X1*X3^2 - 4*T2*X1^2*X3 - 2*T2*X2*X3^2 + 4*T2*X3^3";
}
inline const char* quintic_P0() {
    return "16*(-X1^5 + 33*X2^5 - X1^4*X3 + 3*X1^2*X2*X3^2 + 16*X1*X2^3*X3 + X1^3*X2*X3 - X3^5 - 4*X2^3*X3^2"
           " - X1*X3^4 + 2*X1^3*X3^2 + 2*X1^2*X3^3 + 20*X1^2*X2^3 + 6*X2^4*X3 + 10*X1*X2^4 + X2*X3^4"
           " + 3*X1*X2*X3^3)";
}

// A = c*B + (multiple of the inverse form) for some c != 0, decided by ranks.
inline bool equivalent_mod_inverse(const conics::BiForm<Rational>& A, const conics::BiForm<Rational>& B,
                                   const ConicPencil<Rational>& p) {
    if (A.tdeg() != B.tdeg() || A.xdeg() != B.xdeg()) return false;
    const int i = A.tdeg(), j = A.xdeg();
    auto mons = conics::bi_monomials(i, j);
    std::vector<std::vector<Rational>> cols;
    if (i >= 1 && j >= 2) {
        auto inv = conics::inverse_form(p);
        for (const auto& e : conics::bi_monomials(i - 1, j - 2)) {
            conics::BiForm<Rational>::Poly m;
            m.add_term(e, Rational(1));
            cols.push_back(conics::detail::vector_from_form(mons, conics::BiForm<Rational>(i - 1, j - 2, m) * inv));
        }
    }
    auto rank_with = [&](std::vector<std::vector<Rational>> extra) {
        auto all = cols;
        for (auto& v : extra) all.push_back(std::move(v));
        if (all.empty()) return std::size_t{0};
        Matrix<Rational> m(mons.size(), all.size());
        for (std::size_t c = 0; c < all.size(); ++c)
            for (std::size_t r = 0; r < mons.size(); ++r) m(r, c) = all[c][r];
        return conics::rank(m);
    };
    auto va = conics::detail::vector_from_form(mons, A), vb = conics::detail::vector_from_form(mons, B);
    const auto base = rank_with({});
    const auto ra = rank_with({va}), rb = rank_with({vb}), rab = rank_with({va, vb});
    return ra == base + 1 && rb == base + 1 && rab == base + 1;
}

}  // namespace testing_support
