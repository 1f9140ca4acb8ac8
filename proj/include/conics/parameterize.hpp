#pragma once

#include <array>
#include <optional>

#include "conics/errors.hpp"
#include "conics/pencil.hpp"
#include "conics/polycore.hpp"

namespace conics {

template <class F>
struct PencilSource {
    BinForm<F> a, b;
    ConicPencil<F> pencil;
};

template <class F>
struct Parameterization {
    BinTriple<F> u;
    bool reduced = false;
    std::optional<PencilSource<F>> source;

    int degree() const { return u[0].degree(); }
};

template <class F>
Parameterization<F> make_param(const BinTriple<F>& u) {
    const int d = u[0].degree();
    if (u[1].degree() != d || u[2].degree() != d)
        throw Error(ErrorCode::WrongDegree, "components must share a degree");
    if (u[0].is_zero() && u[1].is_zero() && u[2].is_zero())
        throw Error(ErrorCode::DegenerateInput, "zero parameterization");
    Parameterization<F> p{u, false, std::nullopt};
    p.reduced = gcd_triple(u).degree() == 0;
    return p;
}

// Divide out the gcd of the components.
template <class F>
Parameterization<F> reduce(const Parameterization<F>& p) {
    auto g = gcd_triple(p.u);
    BinTriple<F> r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = *p.u[i].divide_exact(g);
    return {r, true, p.source};
}

template <class F>
struct PencilParameterization {
    Parameterization<F> raw;
    BinForm<F> g;
    Parameterization<F> reduced;
};

template <class F>
PencilParameterization<F> build_from_pencil(const ConicPencil<F>& p, const BinForm<F>& a, const BinForm<F>& b) {
    if (a.degree() != b.degree()) throw Error(ErrorCode::WrongDegree, "a and b must share a degree");
    if (a.degree() <= 1) throw Error(ErrorCode::DegreeTooSmall, "degree of a and b must exceed 1");
    if (a.is_zero() || b.is_zero() || bin_gcd(a, b).degree() != 0)
        throw Error(ErrorCode::NotCoprime, "a and b must be coprime");
    if (is_degenerate(p)) throw Error(ErrorCode::Degenerate, "degenerate pencil");
    auto l = extract_l_forms(p);
    auto s = a * l[1] + b * l[2];
    BinTriple<F> u{-(a * s), -(b * s), a * b * l[0] + a * a * l[3] + b * b * l[4]};
    PencilSource<F> src{a, b, p};
    Parameterization<F> raw{u, false, src};
    auto g = gcd_triple(u);
    raw.reduced = g.degree() == 0;
    auto red = reduce(raw);
    return {raw, g, red};
}

// T1*G2(u) - T2*G1(u) == 0 for an arbitrary pair of forms of equal degree.
template <class F>
bool check_inverse_forms(const BinTriple<F>& u, const TernForm<F>& g1, const TernForm<F>& g2) {
    if (g1.degree() != g2.degree()) throw Error(ErrorCode::WrongDegree, "inverse forms must share a degree");
    auto lhs = T1<F>() * evaluate_on_param(g2, u) - T2<F>() * evaluate_on_param(g1, u);
    return lhs.is_zero();
}

template <class F>
bool check_inverse(const Parameterization<F>& u, const ConicPencil<F>& p) {
    if (p.f1.degree() != 2 || p.f2.degree() != 2) throw Error(ErrorCode::WrongDegree, "inverse must be quadratic");
    return substitute_param(inverse_form(p), u.u).is_zero();
}

// (T1 a, T2 a, b) for deg a = d - 1, deg b = d.
template <class F>
Parameterization<F> monoid_param(const BinForm<F>& a, const BinForm<F>& b) {
    const int d = b.degree();
    if (a.degree() != d - 1) throw Error(ErrorCode::WrongDegree, "deg a must be deg b - 1");
    if (d < 2) throw Error(ErrorCode::DegreeTooSmall, "monoid degree must exceed 1");
    if (a.is_zero() || b.is_zero() || bin_gcd(a, b).degree() != 0)
        throw Error(ErrorCode::NotCoprime, "a and b must be coprime");
    return {{T1<F>() * a, T2<F>() * a, b}, true, std::nullopt};
}

template <class F>
int curve_degree(const Parameterization<F>& u) {
    if (gcd_triple(u.u).degree() != 0) throw Error(ErrorCode::NotReduced, "parameterization is not reduced");
    return u.degree();
}

// Whether the first two components share a root, i.e. the curve passes through (0:0:1).
template <class F>
bool hits_origin(const Parameterization<F>& u) {
    return bin_gcd(u.u[0], u.u[1]).degree() > 0;
}

}  // namespace conics
