#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conics/errors.hpp"
#include "conics/factor.hpp"
#include "conics/field.hpp"
#include "conics/linalg.hpp"
#include "conics/polycore.hpp"

namespace conics {

enum class PencilClass { FourPoints, ThreePoints, TwoPointsBothDouble, TwoPointsOneTriple, OnePoint, Degenerate };

inline const char* class_name(PencilClass c) {
    switch (c) {
        case PencilClass::FourPoints: return "FourPoints";
        case PencilClass::ThreePoints: return "ThreePoints";
        case PencilClass::TwoPointsBothDouble: return "TwoPointsBothDouble";
        case PencilClass::TwoPointsOneTriple: return "TwoPointsOneTriple";
        case PencilClass::OnePoint: return "OnePoint";
        case PencilClass::Degenerate: return "Degenerate";
    }
    return "?";
}

// Base point multiplicities implied by a nondegenerate class, in decreasing order.
inline std::vector<int> class_pattern(PencilClass c) {
    switch (c) {
        case PencilClass::FourPoints: return {1, 1, 1, 1};
        case PencilClass::ThreePoints: return {2, 1, 1};
        case PencilClass::TwoPointsBothDouble: return {2, 2};
        case PencilClass::TwoPointsOneTriple: return {3, 1};
        case PencilClass::OnePoint: return {4};
        case PencilClass::Degenerate: return {};
    }
    return {};
}

// 3x3 symmetric matrix of a quadratic form (off-diagonal entries halved).
template <class F>
Matrix<F> symmetric_matrix(const TernForm<F>& q) {
    if (q.degree() != 2) throw Error(ErrorCode::WrongDegree, "conic must have degree 2");
    Matrix<F> m(3, 3);
    for (const auto& [e, c] : q.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k) idx.push_back(i);
        if (idx[0] == idx[1]) {
            m(idx[0], idx[0]) += c;
        } else {
            m(idx[0], idx[1]) += c / F(2);
            m(idx[1], idx[0]) += c / F(2);
        }
    }
    return m;
}

// Two quadratics share a factor iff the six cubics X_i*Q1, X_i*Q2 are linearly dependent.
template <class F>
bool quadratics_share_factor(const TernForm<F>& q1, const TernForm<F>& q2) {
    auto mons = monomials_of_degree<3>(3);
    Matrix<F> m(6, mons.size());
    for (int i = 0; i < 3; ++i) {
        auto a = TernForm<F>::var(i) * q1;
        auto b = TernForm<F>::var(i) * q2;
        for (std::size_t j = 0; j < mons.size(); ++j) {
            m(static_cast<std::size_t>(i), j) = a.coeff(mons[j]);
            m(static_cast<std::size_t>(i + 3), j) = b.coeff(mons[j]);
        }
    }
    return rank(m) < 6;
}

template <class F>
struct ConicPencil {
    TernForm<F> f1, f2;
};

template <class F>
ConicPencil<F> new_pencil(const TernForm<F>& f1, const TernForm<F>& f2) {
    if (f1.degree() != 2 || f2.degree() != 2) throw Error(ErrorCode::WrongDegree, "pencil members must be quadratic");
    if (f1.is_zero() || f2.is_zero()) throw Error(ErrorCode::CommonFactor, "zero pencil member");
    if (quadratics_share_factor(f1, f2)) throw Error(ErrorCode::CommonFactor, "pencil members share a factor");
    return {f1, f2};
}

template <class F>
using LForms = std::array<BinForm<F>, 5>;

// The inverse form T1*F2 - T2*F1 of bidegree (1,2).
template <class F>
BiForm<F> inverse_form(const ConicPencil<F>& p) {
    return BiForm<F>::from_bin(T1<F>()) * BiForm<F>::from_tern(p.f2) -
           BiForm<F>::from_bin(T2<F>()) * BiForm<F>::from_tern(p.f1);
}

template <class F>
bool has_origin_base_point(const ConicPencil<F>& p) {
    return p.f1.coeff(0, 0, 2).is_zero() && p.f2.coeff(0, 0, 2).is_zero();
}

// l1..l5 with T1F2 - T2F1 = l1 X1X2 + l2 X1X3 + l3 X2X3 + l4 X1^2 + l5 X2^2.
template <class F>
LForms<F> extract_l_forms(const ConicPencil<F>& p) {
    if (!has_origin_base_point(p)) throw Error(ErrorCode::BasePointMissing, "(0:0:1) is not a base point");
    const std::array<Exponent<3>, 5> mon{{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {2, 0, 0}, {0, 2, 0}}};
    LForms<F> l;
    for (std::size_t i = 0; i < 5; ++i) l[i] = BinForm<F>(1, {p.f2.coeff(mon[i]), -p.f1.coeff(mon[i])});
    return l;
}

template <class F>
BiForm<F> rebuild_from_l_forms(const LForms<F>& l) {
    const std::array<Exponent<3>, 5> mon{{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {2, 0, 0}, {0, 2, 0}}};
    BiForm<F> r(1, 2);
    for (std::size_t i = 0; i < 5; ++i)
        r += BiForm<F>::from_bin(l[i]) *
             BiForm<F>::from_tern(TernForm<F>::monomial(mon[i][0], mon[i][1], mon[i][2]));
    return r;
}

// Matrix of T1*M2 - T2*M1 with binary linear form entries.
template <class F>
std::vector<std::vector<BinForm<F>>> pencil_matrix(const ConicPencil<F>& p) {
    auto m1 = symmetric_matrix(p.f1), m2 = symmetric_matrix(p.f2);
    std::vector<std::vector<BinForm<F>>> m(3, std::vector<BinForm<F>>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = BinForm<F>(1, {m2(i, j), -m1(i, j)});
    return m;
}

// The binary cubic det(T1*M2 - T2*M1).
template <class F>
BinForm<F> delta(const ConicPencil<F>& p) {
    auto m = pencil_matrix(p);
    auto d = bareiss_determinant(m, BinForm<F>::constant(F(1)), [](const BinForm<F>& a, const BinForm<F>& b) {
        if (a.is_zero()) return BinForm<F>(a.degree() >= b.degree() ? a.degree() - b.degree() : 0);
        auto q = a.divide_exact(b);
        if (!q) throw Error(ErrorCode::Internal, "inexact division in determinant");
        return *q;
    });
    if (d.is_zero()) return BinForm<F>(3);
    return d;
}

template <class F>
bool is_degenerate(const ConicPencil<F>& p) {
    return delta(p).is_zero();
}

// Structural test: the members share a singular point (a common kernel vector of
// their matrices). When (0:0:1) is a base point this means both forms are X3-free.
template <class F>
bool structurally_degenerate(const ConicPencil<F>& p) {
    if (has_origin_base_point(p)) {
        for (const auto* f : {&p.f1, &p.f2})
            for (const auto& [e, c] : f->terms())
                if (e[2] != 0) return false;
        return true;
    }
    auto m1 = symmetric_matrix(p.f1), m2 = symmetric_matrix(p.f2);
    Matrix<F> st(6, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            st(i, j) = m1(i, j);
            st(i + 3, j) = m2(i, j);
        }
    return rank(st) < 3;
}

// True iff every 2x2 minor of the pencil matrix is divisible by the linear form l.
template <class F>
bool rank_one_at(const ConicPencil<F>& p, const BinForm<F>& l) {
    auto m = pencil_matrix(p);
    for (std::size_t r1 = 0; r1 < 3; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < 3; ++r2)
            for (std::size_t c1 = 0; c1 < 3; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < 3; ++c2) {
                    auto minor = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
                    if (minor.is_zero()) continue;
                    if (!minor.divide_exact(l)) return false;
                }
    return true;
}

template <class F>
PencilClass classify(const ConicPencil<F>& p) {
    auto d = delta(p);
    if (d.is_zero()) return PencilClass::Degenerate;
    auto parts = bin_squarefree(d);
    int top = 0;
    BinForm<F> repeated;
    for (const auto& fp : parts) {
        if (fp.multiplicity > top) {
            top = fp.multiplicity;
            repeated = fp.factor;
        }
    }
    if (top == 1) return PencilClass::FourPoints;
    if (repeated.degree() != 1) throw Error(ErrorCode::Internal, "repeated factor of the determinant cubic is not linear");
    bool r1 = rank_one_at(p, repeated);
    if (top == 2) return r1 ? PencilClass::TwoPointsBothDouble : PencilClass::ThreePoints;
    return r1 ? PencilClass::OnePoint : PencilClass::TwoPointsOneTriple;
}

template <class F>
ConicPencil<F> canonical_pencil(PencilClass c) {
    auto X = [](int a, int b, int e) { return TernForm<F>::monomial(a, b, e); };
    switch (c) {
        case PencilClass::FourPoints: return {X(1, 1, 0) - X(0, 1, 1), X(1, 0, 1) - X(0, 1, 1)};
        case PencilClass::ThreePoints: return {X(1, 1, 0), X(1, 0, 1) - X(0, 1, 1)};
        case PencilClass::TwoPointsBothDouble: return {X(2, 0, 0), X(0, 1, 1)};
        case PencilClass::TwoPointsOneTriple: return {X(2, 0, 0) - X(0, 1, 1), X(1, 1, 0)};
        case PencilClass::OnePoint: return {X(2, 0, 0), X(0, 2, 0) - X(1, 0, 1)};
        case PencilClass::Degenerate: break;
    }
    throw Error(ErrorCode::Degenerate, "degenerate pencils have no canonical form");
}

// ---------------------------------------------------------------------------
// Base locus over the rationals

struct BasePoint {
    ProjPoint<Rational> point;
    int multiplicity = 0;
};
using BaseLocus = std::vector<BasePoint>;

namespace detail {

inline Matrix<Rational> random_change(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    while (true) {
        Matrix<Rational> m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(num(rng)) / Rational(den(rng));
        if (!determinant(m).is_zero()) return m;
    }
}

// For G = a X3^2 + b X3 + c with a scalar, b linear and c quadratic in (X1, X2).
template <class F>
struct X3Parts {
    F a;
    BinForm<F> b, c;
};

template <class F>
X3Parts<F> split_x3(const TernForm<F>& g) {
    X3Parts<F> r{g.coeff(0, 0, 2), BinForm<F>(1), BinForm<F>(2)};
    for (const auto& [e, c] : g.terms()) {
        if (e[2] == 1) r.b.coeff(e[1]) += c;
        if (e[2] == 0) r.c.coeff(e[1]) += c;
    }
    return r;
}

// Resultant with respect to X3 of two quadratics with nonzero X3^2 coefficients: a binary quartic.
template <class F>
BinForm<F> x3_resultant(const TernForm<F>& g1, const TernForm<F>& g2) {
    auto s1 = split_x3(g1), s2 = split_x3(g2);
    auto ac = s1.a * s2.c - s2.a * s1.c;
    auto ab = s1.a * s2.b - s2.a * s1.b;
    auto bc = s1.b * s2.c - s2.b * s1.c;
    return ac * ac - ab * bc;
}

// Changed pencil G_i = F_i(M X) with nonzero X3^2 coefficients, together with M.
template <class F>
struct Projection {
    Matrix<F> m;
    TernForm<F> g1, g2;
};

template <class F>
Projection<F> project(const ConicPencil<F>& p, const Matrix<F>& m) {
    LinearChange<F> lc(m);
    return {m, apply_linear_change(p.f1, lc), apply_linear_change(p.f2, lc)};
}

}  // namespace detail

// Base points with intersection multiplicities; requires all of them rational.
inline BaseLocus base_locus(const ConicPencil<Rational>& p, std::uint64_t seed = 1) {
    if (is_degenerate(p)) throw Error(ErrorCode::Degenerate, "base locus of a degenerate pencil");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto pr = detail::project(p, detail::random_change(rng));
        if (pr.g1.coeff(0, 0, 2).is_zero() || pr.g2.coeff(0, 0, 2).is_zero()) continue;
        auto quartic = detail::x3_resultant(pr.g1, pr.g2);
        BaseLocus out;
        int total = 0;
        bool bad = false;
        for (const auto& [root, mult] : bin_rational_roots(quartic)) {
            auto s1 = detail::split_x3(pr.g1), s2 = detail::split_x3(pr.g2);
            // univariate quadratics in X3 over the projection line
            uni::Poly<Rational> q1{s1.c.eval(root[0], root[1]), s1.b.eval(root[0], root[1]), s1.a};
            uni::Poly<Rational> q2{s2.c.eval(root[0], root[1]), s2.b.eval(root[0], root[1]), s2.a};
            auto g = uni::gcd(q1, q2);
            if (uni::degree(g) != 1) {
                bad = true;
                break;
            }
            ProjPoint<Rational> local(root[0], root[1], -g[0]);
            out.push_back({LinearChange<Rational>(pr.m).map_point(local), mult});
            total += mult;
        }
        if (bad) continue;
        if (total < 4) throw Error(ErrorCode::IrrationalBasePoint, "base locus is not fully rational");
        std::sort(out.begin(), out.end(), [](const BasePoint& a, const BasePoint& b) {
            if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
            return a.point.coords() < b.point.coords();
        });
        return out;
    }
    throw Error(ErrorCode::Internal, "no generic projection found");
}

// ---------------------------------------------------------------------------
// Canonical forms

struct Canonicalization {
    LinearChange<Rational> m;
    Matrix<Rational> a;  // 2x2
    ConicPencil<Rational> canonical;
    PencilClass cls;
};

namespace detail {

inline TernForm<Rational> line_through(const ProjPoint<Rational>& p, const ProjPoint<Rational>& q) {
    return TernForm<Rational>::linear(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                                      p[0] * q[1] - p[1] * q[0]);
}

inline std::array<Rational, 3> linear_coeffs(const TernForm<Rational>& l) {
    return {l.coeff(1, 0, 0), l.coeff(0, 1, 0), l.coeff(0, 0, 1)};
}

// Tangent line at a base point, from a pencil member smooth there.
inline TernForm<Rational> tangent_at(const ConicPencil<Rational>& p, const ProjPoint<Rational>& q) {
    for (const auto* f : {&p.f1, &p.f2}) {
        std::array<Rational, 3> g{f->derivative(0).eval(q.coords()), f->derivative(1).eval(q.coords()),
                                  f->derivative(2).eval(q.coords())};
        if (!g[0].is_zero() || !g[1].is_zero() || !g[2].is_zero()) return TernForm<Rational>::linear(g[0], g[1], g[2]);
    }
    throw Error(ErrorCode::Degenerate, "every member is singular at a base point");
}

// The line L with L^2 proportional to the rank-one member at the repeated root of delta.
inline TernForm<Rational> double_line(const ConicPencil<Rational>& p) {
    auto d = delta(p);
    for (const auto& fp : bin_squarefree(d)) {
        if (fp.multiplicity < 2) continue;
        // c0 T1 + c1 T2 vanishes at (t1 : t2) = (c1 : -c0)
        Rational t1 = fp.factor.coeff(1), t2 = -fp.factor.coeff(0);
        auto member = t1 * p.f2 - t2 * p.f1;
        auto sm = symmetric_matrix(member);
        for (std::size_t i = 0; i < 3; ++i)
            if (!sm(i, 0).is_zero() || !sm(i, 1).is_zero() || !sm(i, 2).is_zero())
                return TernForm<Rational>::linear(sm(i, 0), sm(i, 1), sm(i, 2));
    }
    throw Error(ErrorCode::Internal, "no rank-one member");
}

// Rows of N are linear forms Z_i(X); the coordinate change is X = N^{-1} Z.
inline Matrix<Rational> rows_matrix(const std::array<TernForm<Rational>, 3>& rows) {
    Matrix<Rational> n(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        auto c = linear_coeffs(rows[i]);
        for (std::size_t j = 0; j < 3; ++j) n(i, j) = c[j];
    }
    return n;
}

// Solve A * (G1, G2)^T = (C1, C2)^T for a 2x2 matrix A.
inline std::optional<Matrix<Rational>> solve_mixing(const ConicPencil<Rational>& g, const ConicPencil<Rational>& c) {
    auto mons = monomials_of_degree<3>(2);
    Matrix<Rational> sys(mons.size(), 2);
    for (std::size_t j = 0; j < mons.size(); ++j) {
        sys(j, 0) = g.f1.coeff(mons[j]);
        sys(j, 1) = g.f2.coeff(mons[j]);
    }
    Matrix<Rational> a(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
        const auto& target = r == 0 ? c.f1 : c.f2;
        std::vector<Rational> rhs;
        for (const auto& m : mons) rhs.push_back(target.coeff(m));
        auto x = solve(sys, rhs);
        if (!x) return std::nullopt;
        a(r, 0) = (*x)[0];
        a(r, 1) = (*x)[1];
    }
    if (determinant(a).is_zero()) return std::nullopt;
    return a;
}

inline ConicPencil<Rational> apply_change(const ConicPencil<Rational>& p, const LinearChange<Rational>& m) {
    return {apply_linear_change(p.f1, m), apply_linear_change(p.f2, m)};
}

}  // namespace detail

// Does A * (F o M) reproduce the canonical pair exactly?
inline bool verify_canonicalization(const ConicPencil<Rational>& p, const Canonicalization& c) {
    auto g = detail::apply_change(p, c.m);
    auto r1 = c.a(0, 0) * g.f1 + c.a(0, 1) * g.f2;
    auto r2 = c.a(1, 0) * g.f1 + c.a(1, 1) * g.f2;
    return r1 == c.canonical.f1 && r2 == c.canonical.f2;
}

inline Canonicalization canonicalize(const ConicPencil<Rational>& p, std::uint64_t seed = 1) {
    auto cls = classify(p);
    if (cls == PencilClass::Degenerate) throw Error(ErrorCode::Degenerate, "degenerate pencil");
    auto target = canonical_pencil<Rational>(cls);
    if (p.f1 == target.f1 && p.f2 == target.f2)
        return {LinearChange<Rational>(), Matrix<Rational>::identity(2), target, cls};

    auto locus = base_locus(p, seed);
    using TF = TernForm<Rational>;
    Matrix<Rational> m(3, 3);
    auto set_columns = [&m](const std::array<std::array<Rational, 3>, 3>& cols) {
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 3; ++i) m(i, j) = cols[j][i];
    };
    switch (cls) {
        case PencilClass::FourPoints: {
            // columns scaled so that M (1,1,1) is the fourth point
            Matrix<Rational> b(3, 3);
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t i = 0; i < 3; ++i) b(i, j) = locus[j].point[i];
            auto lam = solve(b, std::vector<Rational>(locus[3].point.coords().begin(), locus[3].point.coords().end()));
            if (!lam) throw Error(ErrorCode::Internal, "base points not in general position");
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t i = 0; i < 3; ++i) m(i, j) = b(i, j) * (*lam)[j];
            break;
        }
        case PencilClass::ThreePoints: {
            const auto& q = locus[0].point;  // the double point
            const auto& r1 = locus[1].point;
            const auto& r2 = locus[2].point;
            auto t = detail::tangent_at(p, q);
            Rational lam = -t.eval(r1.coords()) / t.eval(r2.coords());
            set_columns({r1.coords(), {lam * r2[0], lam * r2[1], lam * r2[2]}, q.coords()});
            break;
        }
        case PencilClass::TwoPointsBothDouble: {
            const auto& qa = locus[0].point;
            const auto& qb = locus[1].point;
            auto n = detail::rows_matrix({detail::line_through(qa, qb), detail::tangent_at(p, qa), detail::tangent_at(p, qb)});
            m = *inverse(n);
            break;
        }
        case PencilClass::TwoPointsOneTriple: {
            const auto& q = locus[0].point;
            const auto& r = locus[1].point;
            auto y1 = detail::line_through(q, r);
            auto y2 = detail::tangent_at(p, q);
            TF y3;
            for (int i = 0; i < 3; ++i) {
                // a line through r missing q
                auto cand = detail::line_through(r, ProjPoint<Rational>(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0));
                if (cand.is_zero() || cand.eval(q.coords()).is_zero()) continue;
                y3 = cand;
                break;
            }
            auto n = detail::rows_matrix({y1, y2, y3});
            auto g = detail::apply_change(p, LinearChange<Rational>(*inverse(n)));
            // the member with a nonzero Y1^2 term reads a Y1^2 + b Y1Y2 + e Y2Y3
            const auto& h = g.f1.coeff(2, 0, 0).is_zero() ? g.f2 : g.f1;
            Rational a = h.coeff(2, 0, 0), b = h.coeff(1, 1, 0), e = h.coeff(0, 1, 1);
            auto z3 = (Rational(-1) / a) * (b * y1 + e * y3);
            m = *inverse(detail::rows_matrix({y1, y2, z3}));
            break;
        }
        case PencilClass::OnePoint: {
            const auto& q = locus[0].point;
            auto y1 = detail::double_line(p);
            TF y2, y3;
            // a second line through q
            for (int i = 0; i < 3; ++i) {
                auto cand = detail::line_through(q, ProjPoint<Rational>(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0));
                if (cand.is_zero() || proportional(cand, y1)) continue;
                y2 = cand;
                break;
            }
            for (int i = 0; i < 3; ++i) {
                if (!determinant(detail::rows_matrix({y1, y2, TF::var(i)})).is_zero()) {
                    y3 = TF::var(i);
                    break;
                }
            }
            auto n = detail::rows_matrix({y1, y2, y3});
            auto g = detail::apply_change(p, LinearChange<Rational>(*inverse(n)));
            // the member with a nonzero Y2^2 term reads a Y1^2 + b Y1Y2 + c Y2^2 + f Y1Y3
            const auto& h = g.f1.coeff(0, 2, 0).is_zero() ? g.f2 : g.f1;
            Rational a = h.coeff(2, 0, 0), b = h.coeff(1, 1, 0), c = h.coeff(0, 2, 0), f = h.coeff(1, 0, 1);
            auto z3 = (Rational(-1) / c) * (a * y1 + b * y2 + f * y3);
            m = *inverse(detail::rows_matrix({y1, y2, z3}));
            break;
        }
        case PencilClass::Degenerate: break;
    }
    LinearChange<Rational> lc(m);
    auto a = detail::solve_mixing(detail::apply_change(p, lc), target);
    if (!a) throw Error(ErrorCode::Internal, "canonical pair not reached");
    Canonicalization out{lc, *a, target, cls};
    if (!verify_canonicalization(p, out)) throw Error(ErrorCode::Internal, "canonicalization identity fails");
    return out;
}

}  // namespace conics
