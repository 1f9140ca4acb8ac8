#pragma once

#include <optional>
#include <vector>

#include "conics/errors.hpp"
#include "conics/factor.hpp"
#include "conics/pencil.hpp"
#include "conics/polycore.hpp"

namespace conics {

// Multiplicity of the curve E = 0 at pt; 0 when pt is off the curve.
template <class F>
int multiplicity_at(const TernForm<F>& E, const ProjPoint<F>& pt) {
    if (E.is_zero()) throw Error(ErrorCode::PreconditionViolated, "zero curve equation");
    // columns e_i, e_j, pt with pt[k] != 0 send (0:0:1) to pt
    std::size_t k = 2;
    while (pt[k].is_zero()) --k;
    Matrix<F> m(3, 3);
    std::size_t col = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == k) continue;
        m(i, col++) = F(1);
    }
    for (std::size_t i = 0; i < 3; ++i) m(i, 2) = pt[i];
    auto moved = apply_linear_change(E, LinearChange<F>(m));
    int top = 0;
    for (const auto& [e, c] : moved.terms()) top = std::max(top, e[2]);
    return E.degree() - top;
}

template <class F>
bool gradient_vanishes(const TernForm<F>& E, const ProjPoint<F>& pt) {
    for (int i = 0; i < 3; ++i)
        if (!E.derivative(i).eval(pt.coords()).is_zero()) return false;
    return true;
}

// Candidates that are singular points of E. Both the gradient and the multiplicity test are applied.
template <class F>
std::vector<ProjPoint<F>> singular_points_among(const TernForm<F>& E, const std::vector<ProjPoint<F>>& candidates) {
    std::vector<ProjPoint<F>> out;
    for (const auto& pt : candidates) {
        const bool on = E.eval(pt.coords()).is_zero();
        const bool grad = on && gradient_vanishes(E, pt);
        const bool mult = multiplicity_at(E, pt) >= 2;
        if (grad != mult) throw Error(ErrorCode::Internal, "gradient and multiplicity tests disagree");
        if (grad) out.push_back(pt);
    }
    return out;
}

inline int base_multiplicity_sum(const TernForm<Rational>& E, const ConicPencil<Rational>& p) {
    int sum = 0;
    for (const auto& bp : base_locus(p)) {
        const int m = multiplicity_at(E, bp.point);
        sum += m * (m - 1);
    }
    return sum;
}

// sum m(m-1) over the four base points equals (d-1)(d-2).
inline bool genus_identity_check(const TernForm<Rational>& E, const ConicPencil<Rational>& p) {
    if (classify(p) != PencilClass::FourPoints) throw Error(ErrorCode::PreconditionViolated, "pencil must have four base points");
    const int d = E.degree();
    return base_multiplicity_sum(E, p) == (d - 1) * (d - 2);
}

// A strict defect in the base point sum forces singularities infinitely near the base points.
inline bool infinitely_near_indicator(const TernForm<Rational>& E, const ConicPencil<Rational>& p) {
    auto cls = classify(p);
    if (cls == PencilClass::Degenerate) throw Error(ErrorCode::Degenerate, "degenerate pencil");
    if (cls == PencilClass::FourPoints) throw Error(ErrorCode::PreconditionViolated, "pencil has four base points");
    const int d = E.degree();
    if (d <= 6) throw Error(ErrorCode::PreconditionViolated, "curve degree must exceed 6");
    return base_multiplicity_sum(E, p) < (d - 1) * (d - 2);
}

struct Branch {
    BinForm<Rational> factor;
    int multiplicity = 0;
    // only for rational linear factors
    std::optional<TernForm<Rational>> tangent;
    int contact = 0;
    // irreducibility over Q is known for linear factors and for blocks of degree at most 3
    bool irreducible = false;
};

struct BranchData {
    std::vector<Branch> branches;
};

// Branches through (0:0:1) of the monoid b - a X3, read off the factorization of a.
inline BranchData monoid_branches(const BinForm<Rational>& a) {
    if (a.is_zero()) throw Error(ErrorCode::PreconditionViolated, "zero form");
    BranchData out;
    if (a.degree() == 0) return out;
    auto split = bin_linear_factors(a);
    for (const auto& fp : split.linear) {
        Branch b;
        b.factor = fp.factor;
        b.multiplicity = fp.multiplicity;
        b.tangent = TernForm<Rational>::linear(fp.factor.coeff(0), fp.factor.coeff(1), Rational(0));
        b.contact = fp.multiplicity + 1;
        b.irreducible = true;
        out.branches.push_back(b);
    }
    if (split.rest.degree() > 0)
        for (const auto& fp : bin_squarefree(split.rest)) {
            Branch b;
            b.factor = fp.factor;
            b.multiplicity = fp.multiplicity;
            b.irreducible = fp.factor.degree() <= 3;
            out.branches.push_back(b);
        }
    return out;
}

}  // namespace conics
