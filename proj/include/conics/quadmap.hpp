#pragma once

#include <array>
#include <optional>
#include <utility>

#include "conics/errors.hpp"
#include "conics/factor.hpp"
#include "conics/implicitize.hpp"
#include "conics/linalg.hpp"
#include "conics/parameterize.hpp"
#include "conics/pencil.hpp"
#include "conics/polycore.hpp"

namespace conics {

template <class F>
struct QuadraticMap {
    std::array<TernForm<F>, 3> q;
};

template <class F>
struct BirationalWitness {
    QuadraticMap<F> inverse;
    TernForm<F> W;
};

// gcd of two quadratics, from a linear relation A*q1 = B*q2 between them.
template <class F>
TernForm<F> quadratic_gcd(const TernForm<F>& q1, const TernForm<F>& q2) {
    auto mons = monomials_of_degree<3>(3);
    Matrix<F> m(mons.size(), 6);
    for (int i = 0; i < 3; ++i) {
        auto a = TernForm<F>::var(i) * q1;
        auto b = TernForm<F>::var(i) * q2;
        for (std::size_t r = 0; r < mons.size(); ++r) {
            m(r, static_cast<std::size_t>(i)) = a.coeff(mons[r]);
            m(r, static_cast<std::size_t>(i + 3)) = -b.coeff(mons[r]);
        }
    }
    auto ns = nullspace(m);
    if (ns.empty()) return TernForm<F>::constant(F(1));
    const auto& v = ns.front();
    auto A = TernForm<F>::linear(v[0], v[1], v[2]);
    auto B = TernForm<F>::linear(v[3], v[4], v[5]);
    if (proportional(A, B)) return q1.normalized();
    return q1.divide_or_throw(B).normalized();
}

// Common factor of three quadratics, or nullopt when they are coprime.
template <class F>
std::optional<TernForm<F>> common_factor(const std::array<TernForm<F>, 3>& q) {
    auto g = quadratic_gcd(q[0], q[1]);
    if (g.degree() == 0) return std::nullopt;
    if (g.degree() == 1) {
        if (q[2].divide_exact(g)) return g;
        return std::nullopt;
    }
    auto h = quadratic_gcd(q[0], q[2]);
    if (h.degree() == 0) return std::nullopt;
    return h;
}

template <class F>
QuadraticMap<F> make_quadratic_map(const TernForm<F>& q1, const TernForm<F>& q2, const TernForm<F>& q3) {
    for (const auto* f : {&q1, &q2, &q3}) {
        if (f->degree() != 2) throw Error(ErrorCode::WrongDegree, "map components must be quadratic");
        if (f->is_zero()) throw Error(ErrorCode::DegenerateInput, "zero map component");
    }
    QuadraticMap<F> m{{q1, q2, q3}};
    if (common_factor(m.q)) throw Error(ErrorCode::CommonFactor, "map components share a factor");
    return m;
}

template <class F>
QuadraticMap<F> standard_cremona() {
    using TF = TernForm<F>;
    return {{TF::monomial(0, 1, 1), TF::monomial(1, 0, 1), TF::monomial(1, 1, 0)}};
}

template <class F>
std::array<TernForm<F>, 3> apply_map(const QuadraticMap<F>& outer, const QuadraticMap<F>& inner) {
    return {compose_forms(outer.q[0], inner.q), compose_forms(outer.q[1], inner.q), compose_forms(outer.q[2], inner.q)};
}

// inverse(map(X)) == (X1 W, X2 W, X3 W) with W nonzero.
template <class F>
bool check_witness(const QuadraticMap<F>& m, const BirationalWitness<F>& w) {
    if (w.W.is_zero()) return false;
    auto c = apply_map(w.inverse, m);
    for (int i = 0; i < 3; ++i)
        if (!(c[static_cast<std::size_t>(i)] == TernForm<F>::var(i) * w.W)) return false;
    return true;
}

// The common factor W' with map(inverse(Y)) == Y W', or nullopt.
template <class F>
std::optional<TernForm<F>> reverse_factor(const QuadraticMap<F>& m, const BirationalWitness<F>& w) {
    auto c = apply_map(m, w.inverse);
    for (int i = 0; i < 3; ++i) {
        auto q = c[static_cast<std::size_t>(i)].divide_exact(TernForm<F>::var(i));
        if (!q || q->is_zero()) continue;
        for (int j = 0; j < 3; ++j)
            if (!(c[static_cast<std::size_t>(j)] == TernForm<F>::var(j) * *q)) return std::nullopt;
        return *q;
    }
    return std::nullopt;
}

template <class F>
BirationalWitness<F> witness_cremona() {
    return {standard_cremona<F>(), TernForm<F>::monomial(1, 1, 1)};
}

// Solve G_i(Q(X)) = X_i W(X) for quadratics G_i and a cubic W.
template <class F>
BirationalWitness<F> invert(const QuadraticMap<F>& m) {
    for (const auto& f : m.q)
        if (f.degree() != 2 || f.is_zero()) throw Error(ErrorCode::NotBirational, "components must be nonzero quadratics");
    if (common_factor(m.q)) throw Error(ErrorCode::NotBirational, "components share a factor");
    auto quad = monomials_of_degree<3>(2);
    auto cubic = monomials_of_degree<3>(3);
    auto quartic = monomials_of_degree<3>(4);
    const std::size_t ng = quad.size(), nw = cubic.size(), nq = quartic.size();
    Matrix<F> sys(3 * nq, 3 * ng + nw);
    std::vector<TernForm<F>> images;
    for (const auto& e : quad) images.push_back(compose_forms(TernForm<F>::monomial(e[0], e[1], e[2]), m.q));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t r = 0; r < nq; ++r) sys(i * nq + r, i * ng + g) = images[g].coeff(quartic[r]);
        for (std::size_t w = 0; w < nw; ++w) {
            auto xw = TernForm<F>::var(static_cast<int>(i)) * TernForm<F>::monomial(cubic[w][0], cubic[w][1], cubic[w][2]);
            for (std::size_t r = 0; r < nq; ++r) sys(i * nq + r, 3 * ng + w) = -xw.coeff(quartic[r]);
        }
    }
    for (const auto& v : nullspace(sys)) {
        BirationalWitness<F> out;
        typename TernForm<F>::Poly wp;
        for (std::size_t w = 0; w < nw; ++w) wp.add_term(cubic[w], v[3 * ng + w]);
        if (wp.is_zero()) continue;
        for (std::size_t i = 0; i < 3; ++i) {
            typename TernForm<F>::Poly gp;
            for (std::size_t g = 0; g < ng; ++g) gp.add_term(quad[g], v[i * ng + g]);
            out.inverse.q[i] = TernForm<F>(2, std::move(gp));
        }
        out.W = TernForm<F>(3, std::move(wp));
        // scale so the first nonzero inverse coefficient is 1
        F lead(0);
        for (const auto& g : out.inverse.q)
            if (!g.is_zero()) {
                lead = g.terms().begin()->second;
                break;
            }
        if (lead.is_zero()) continue;
        const F s = F(1) / lead;
        for (auto& g : out.inverse.q) g = s * g;
        out.W = s * out.W;
        if (!check_witness(m, out) || !reverse_factor(m, out)) continue;
        return out;
    }
    throw Error(ErrorCode::NotBirational, "no quadratic inverse exists");
}

struct ExtendedPencil {
    QuadraticMap<Rational> map;
    BirationalWitness<Rational> witness;
    Canonicalization canon;
};

// (F1, F2, F3) with F3 the canonical third form pulled back through the canonicalizing change.
inline ExtendedPencil extend_pencil(const ConicPencil<Rational>& p, std::uint64_t seed = 1) {
    using TF = TernForm<Rational>;
    if (is_degenerate(p)) throw Error(ErrorCode::Degenerate, "degenerate pencil");
    auto canon = canonicalize(p, seed);
    TF c3 = (canon.cls == PencilClass::TwoPointsBothDouble || canon.cls == PencilClass::OnePoint) ? TF::monomial(1, 1, 0)
                                                                                                   : TF::monomial(0, 1, 1);
    auto f3 = apply_linear_change(c3, canon.m.inverse());
    auto map = make_quadratic_map(p.f1, p.f2, f3);
    auto w = invert(map);
    return {map, w, canon};
}

struct CurveImage {
    Parameterization<Rational> v;
    TernForm<Rational> E;
};

// Image of a curve under a quadratic map, through its parameterization.
inline CurveImage image_of_curve(const QuadraticMap<Rational>& m, const Parameterization<Rational>& u,
                                 const std::optional<BirationalWitness<Rational>>& witness = std::nullopt,
                                 const std::optional<TernForm<Rational>>& source_equation = std::nullopt) {
    using R = Rational;
    if (gcd_triple(u.u).degree() != 0) throw Error(ErrorCode::NotReduced, "source parameterization is not reduced");
    auto composed = compose_map_param(m.q, u.u);
    if (composed[0].is_zero() && composed[1].is_zero() && composed[2].is_zero())
        throw Error(ErrorCode::Contracted, "the curve lies in the exceptional locus");
    Parameterization<R> raw{composed, false, std::nullopt};
    auto v = reduce(raw);
    if (v.degree() == 0) throw Error(ErrorCode::Contracted, "the curve is contracted to a point");
    {
        std::optional<std::size_t> ref;
        bool all_prop = true;
        for (std::size_t i = 0; i < 3; ++i) {
            if (v.u[i].is_zero()) continue;
            if (!ref) {
                ref = i;
                continue;
            }
            if (!proportional(v.u[i], v.u[*ref])) all_prop = false;
        }
        if (all_prop) throw Error(ErrorCode::Contracted, "the curve is contracted to a point");
    }
    const int D = v.degree();
    auto w = witness ? *witness : invert(m);
    TernForm<R> E0;
    if (source_equation) {
        E0 = *source_equation;
    } else if (u.u[2].degree() >= 2 && !u.u[0].is_zero() && u.u[0].divide_exact(T1<R>()) &&
               u.u[1].divide_exact(T2<R>()) &&
               *u.u[0].divide_exact(T1<R>()) == *u.u[1].divide_exact(T2<R>())) {
        E0 = monoid_implicit(*u.u[0].divide_exact(T1<R>()), u.u[2]);
    } else {
        E0 = implicit_from_mu_basis(u);
    }
    auto E = compose_forms(E0, w.inverse.q);
    if (E.degree() > D) {
        for (const auto& fp : tern_linear_factors(E).linear) {
            if (evaluate_on_param(fp.factor, v.u).is_zero()) continue;
            for (int k = 0; k < fp.multiplicity && E.degree() > D; ++k) E = E.divide_or_throw(fp.factor);
        }
    }
    if (E.degree() != D) {
        // the pulled-back equation carries a repeated or nonlinear extra factor
        E = implicit_from_mu_basis(v);
    }
    if (!evaluate_on_param(E, v.u).is_zero()) throw Error(ErrorCode::Internal, "image equation does not vanish on the image");
    return {v, E.normalized()};
}

inline bool degree_bounds_check(int d0, int D0) {
    return d0 - 1 <= D0 && D0 <= 2 * d0;
}

}  // namespace conics
