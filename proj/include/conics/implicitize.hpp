#pragma once

#include <vector>

#include "conics/errors.hpp"
#include "conics/factor.hpp"
#include "conics/linalg.hpp"
#include "conics/mubasis.hpp"
#include "conics/parameterize.hpp"
#include "conics/pencil.hpp"
#include "conics/polycore.hpp"

namespace conics {

template <class F>
struct ImplicitResult {
    TernForm<F> E;
    TernForm<F> H;
    int nu = 1;
    TernForm<F> raw;
};

// b(X1,X2) - a(X1,X2) X3.
template <class F>
TernForm<F> monoid_implicit(const BinForm<F>& a, const BinForm<F>& b) {
    const int d = b.degree();
    if (a.degree() != d - 1) throw Error(ErrorCode::WrongDegree, "deg a must be deg b - 1");
    if (d < 2) throw Error(ErrorCode::DegreeTooSmall, "monoid degree must exceed 1");
    if (a.is_zero() || b.is_zero() || bin_gcd(a, b).degree() != 0)
        throw Error(ErrorCode::NotCoprime, "a and b must be coprime");
    TernForm<F> r(d);
    for (int k = 0; k <= d; ++k) r += TernForm<F>::monomial(d - k, k, 0, b.coeff(k));
    for (int k = 0; k < d; ++k) r -= TernForm<F>::monomial(d - 1 - k, k, 1, a.coeff(k));
    return r;
}

// Resultant in T of two forms linear in X, via the Sylvester matrix.
template <class F>
TernForm<F> resultant_t(const BiForm<F>& p, const BiForm<F>& q) {
    const int m = p.tdeg(), n = q.tdeg();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<TernForm<F>>> syl(size, std::vector<TernForm<F>>(size, TernForm<F>(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.t_coeff(m - k, k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.t_coeff(n - k, k);
    auto det = bareiss_determinant(std::move(syl), TernForm<F>::constant(F(1)),
                                   [](const TernForm<F>& a, const TernForm<F>& b) {
                                       return a.is_zero() ? TernForm<F>(0) : a.divide_or_throw(b);
                                   });
    if (det.is_zero()) return det;
    return TernForm<F>(p.xdeg() * n + q.xdeg() * m, det.poly());
}

// Implicit equation of a reduced parameterization as Res_T(p, q) of its syzygy basis.
template <class F>
TernForm<F> implicit_from_mu_basis(const Parameterization<F>& u) {
    auto mb = compute_mu_basis(u);
    auto r = resultant_t(mb.p, mb.q);
    if (r.is_zero()) throw Error(ErrorCode::Internal, "vanishing resultant");
    return r.normalized();
}

inline ImplicitResult<Rational> implicit_from_pencil(const ConicPencil<Rational>& p, const BinForm<Rational>& a,
                                                     const BinForm<Rational>& b) {
    using R = Rational;
    auto built = build_from_pencil(p, a, b);
    const auto& ured = built.reduced;
    const int d = ured.degree();
    auto raw = compose_with_pair(b, p.f1, p.f2) * TernForm<R>::var(0) - compose_with_pair(a, p.f1, p.f2) * TernForm<R>::var(1);
    auto l = extract_l_forms(p);
    auto C = TernForm<R>::var(0) * compose_with_pair(l[1], p.f1, p.f2) +
             TernForm<R>::var(1) * compose_with_pair(l[2], p.f1, p.f2);
    std::vector<TernForm<R>> candidates;
    if (!C.is_zero())
        for (const auto& fp : tern_linear_factors(C).linear)
            if (!evaluate_on_param(fp.factor, ured.u).is_zero()) candidates.push_back(fp.factor);

    TernForm<R> E = raw;
    TernForm<R> H = TernForm<R>::constant(R(1));
    while (E.degree() > d) {
        bool progress = false;
        for (const auto& L : candidates) {
            if (auto q = E.divide_exact(L)) {
                E = *q;
                H = H * L;
                progress = true;
                break;
            }
        }
        if (!progress) break;
    }
    int nu = 1;
    if (E.degree() != d) {
        // E may be a proper power of the curve equation
        if (E.degree() % d != 0) throw Error(ErrorCode::DegreeMismatch, "peeling did not reach the curve degree");
        nu = E.degree() / d;
        auto base = implicit_from_mu_basis(ured);
        if (!proportional(E, base.pow(nu))) throw Error(ErrorCode::DegreeMismatch, "remaining factor is not a power of the curve");
        E = base;
    }
    if (!evaluate_on_param(E, ured.u).is_zero()) throw Error(ErrorCode::Internal, "implicit equation does not vanish on the curve");
    return {E.normalized(), H.normalized(), nu, raw};
}

// Whether raw = c * E^nu * H exactly.
template <class F>
bool factorization_holds(const ImplicitResult<F>& r) {
    return proportional(r.raw, r.E.pow(r.nu) * r.H);
}

template <class F>
bool is_multiple_of_E(const BiForm<F>& P, const ConicPencil<F>& p, const TernForm<F>& E) {
    auto s = substitute_pair(P, p.f1, p.f2);
    if (s.is_zero()) return true;
    return s.divide_exact(E).has_value();
}

}  // namespace conics
