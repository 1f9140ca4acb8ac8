#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "conics/errors.hpp"
#include "conics/implicitize.hpp"
#include "conics/linalg.hpp"
#include "conics/mubasis.hpp"
#include "conics/parameterize.hpp"
#include "conics/pencil.hpp"
#include "conics/polycore.hpp"

namespace conics {

// All bihomogeneous monomials of bidegree (i, j), T-part outermost, both in lex-descending order.
inline std::vector<Exponent<5>> bi_monomials(int i, int j) {
    std::vector<Exponent<5>> out;
    for (const auto& t : monomials_of_degree<2>(i))
        for (const auto& x : monomials_of_degree<3>(j)) out.push_back({t[0], t[1], x[0], x[1], x[2]});
    return out;
}

template <class F>
struct ReesGenerators {
    BiForm<F> inverse_form;
    MuBasis<F> mu_basis;
    // P_k..P_0 when d is odd, P_{k-1}..P_0 (starting with the moving conic) when d is even
    std::vector<BiForm<F>> descent;
    bool odd = true;
    int k = 0;

    // Odd: F, q, P_k..P_0. Even: F, p, q, P_{k-1}..P_0.
    std::vector<BiForm<F>> list() const {
        std::vector<BiForm<F>> out{inverse_form};
        if (!odd) out.push_back(mu_basis.p);
        out.push_back(mu_basis.q);
        out.insert(out.end(), descent.begin(), descent.end());
        return out;
    }
};

namespace detail {

// Coefficient matrix of P -> P(T, u(T)) on the given monomials of bidegree (i, j).
template <class F>
Matrix<F> substitution_matrix(const std::vector<Exponent<5>>& mons, const BinTriple<F>& u, int i, int j) {
    const int d = u[0].degree();
    const int out_deg = i + j * d;
    std::array<std::vector<BinForm<F>>, 3> pw;
    for (std::size_t c = 0; c < 3; ++c) pw[c] = powers(u[c], j, BinForm<F>::constant(F(1)));
    Matrix<F> m(static_cast<std::size_t>(out_deg + 1), mons.size());
    for (std::size_t col = 0; col < mons.size(); ++col) {
        const auto& e = mons[col];
        auto img = BinForm<F>::monomial(e[0], e[1]) * pw[0][static_cast<std::size_t>(e[2])] *
                   pw[1][static_cast<std::size_t>(e[3])] * pw[2][static_cast<std::size_t>(e[4])];
        for (int r = 0; r <= out_deg; ++r) m(static_cast<std::size_t>(r), col) = img.coeff(r);
    }
    return m;
}

template <class F>
BiForm<F> form_from_vector(const std::vector<Exponent<5>>& mons, const std::vector<F>& v, int i, int j) {
    typename BiForm<F>::Poly p;
    for (std::size_t c = 0; c < mons.size(); ++c) p.add_term(mons[c], v[c]);
    return BiForm<F>(i, j, std::move(p));
}

template <class F>
std::vector<F> vector_from_form(const std::vector<Exponent<5>>& mons, const BiForm<F>& f) {
    std::vector<F> v;
    v.reserve(mons.size());
    for (const auto& e : mons) v.push_back(f.coeff(e));
    return v;
}

// r(T) * P for every monomial r of degree e.
template <class F>
std::vector<BiForm<F>> t_multiples(const BiForm<F>& P, int e) {
    std::vector<BiForm<F>> out;
    if (e < 0) return out;
    for (int s = 0; s <= e; ++s) out.push_back(BiForm<F>::from_bin(BinForm<F>::monomial(e - s, s)) * P);
    return out;
}

}  // namespace detail

// Basis of the bidegree-(i, j) part of the kernel.
template <class F>
std::vector<BiForm<F>> kernel_slice(const Parameterization<F>& u, int i, int j) {
    auto mons = bi_monomials(i, j);
    auto ns = nullspace(detail::substitution_matrix(mons, u.u, i, j));
    std::vector<BiForm<F>> out;
    for (const auto& v : ns) out.push_back(detail::form_from_vector(mons, v, i, j));
    return out;
}

struct MovingConicDims {
    std::size_t kernel = 0;
    std::size_t inverse_multiples = 0;
};

template <class F>
MovingConicDims moving_conic_dimensions(const Parameterization<F>& u, const ConicPencil<F>& p) {
    const int d = u.degree();
    if (d % 2 != 0) throw Error(ErrorCode::OddDegree, "moving conic needs even degree");
    const int k = d / 2;
    auto ker = kernel_slice(u, k - 1, 2);
    auto mons = bi_monomials(k - 1, 2);
    auto mult = detail::t_multiples(inverse_form(p), k - 2);
    Matrix<F> s(mult.size(), mons.size());
    for (std::size_t r = 0; r < mult.size(); ++r) {
        auto v = detail::vector_from_form(mons, mult[r]);
        for (std::size_t c = 0; c < mons.size(); ++c) s(r, c) = v[c];
    }
    return {ker.size(), rank(s)};
}

template <class F>
BiForm<F> moving_conic(const Parameterization<F>& u, const ConicPencil<F>& p) {
    const int d = u.degree();
    if (d % 2 != 0) throw Error(ErrorCode::OddDegree, "moving conic needs even degree");
    const int k = d / 2;
    if (mu_value(u) < k) throw Error(ErrorCode::NoLinearSyzygyViolated, "a moving line of degree below k exists");
    if (!check_inverse(u, p)) throw Error(ErrorCode::InverseMismatch, "pencil does not invert the parameterization");
    auto mons = bi_monomials(k - 1, 2);
    auto ns = nullspace(detail::substitution_matrix(mons, u.u, k - 1, 2));
    // reduce against the multiples of the inverse form
    auto mult = detail::t_multiples(inverse_form(p), k - 2);
    Matrix<F> s(mult.size(), mons.size());
    for (std::size_t r = 0; r < mult.size(); ++r) {
        auto v = detail::vector_from_form(mons, mult[r]);
        for (std::size_t c = 0; c < mons.size(); ++c) s(r, c) = v[c];
    }
    auto piv = rref(s);
    for (auto v : ns) {
        for (std::size_t r = 0; r < piv.size(); ++r) {
            F c = v[piv[r]];
            if (c.is_zero()) continue;
            for (std::size_t col = 0; col < mons.size(); ++col) v[col] -= c * s(r, col);
        }
        auto Q = detail::form_from_vector(mons, v, k - 1, 2);
        if (!Q.is_zero()) return Q.normalized();
    }
    throw Error(ErrorCode::Internal, "moving conic not found outside the inverse-form multiples");
}

// P = A*T1 + B*T2: monomials with T1 go to A, pure T2 monomials to B.
template <class F>
std::pair<BiForm<F>, BiForm<F>> split_T(const BiForm<F>& P) {
    if (P.tdeg() < 1) throw Error(ErrorCode::PreconditionViolated, "split_T needs positive T-degree");
    typename BiForm<F>::Poly a, b;
    for (const auto& [e, c] : P.terms()) {
        if (e[0] > 0)
            a.add_term({e[0] - 1, e[1], e[2], e[3], e[4]}, c);
        else
            b.add_term({e[0], e[1] - 1, e[2], e[3], e[4]}, c);
    }
    return {BiForm<F>(P.tdeg() - 1, P.xdeg(), std::move(a)), BiForm<F>(P.tdeg() - 1, P.xdeg(), std::move(b))};
}

template <class F>
BiForm<F> descend(const BiForm<F>& P, const ConicPencil<F>& p, const Parameterization<F>* u = nullptr) {
    if (u && !substitute_param(P, u->u).is_zero()) throw Error(ErrorCode::NotInKernel, "form does not vanish on the curve");
    auto [A, B] = split_T(P);
    return A * BiForm<F>::from_tern(p.f1) + B * BiForm<F>::from_tern(p.f2);
}

template <class F>
ReesGenerators<F> generators(const Parameterization<F>& u, const ConicPencil<F>& p) {
    if (gcd_triple(u.u).degree() != 0) throw Error(ErrorCode::NotReduced, "parameterization is not reduced");
    if (!check_inverse(u, p)) throw Error(ErrorCode::InverseMismatch, "pencil does not invert the parameterization");
    auto mb = compute_mu_basis(u);
    if (mb.mu == 1) throw Error(ErrorCode::CurveParameterizableByLines, "the curve has a moving line of degree 1");
    const int d = u.degree();
    ReesGenerators<F> g;
    g.inverse_form = inverse_form(p);
    g.mu_basis = mb;
    g.odd = d % 2 != 0;
    g.k = d / 2;
    if (mb.mu != g.k) throw Error(ErrorCode::Internal, "syzygy degree differs from floor(d/2)");
    BiForm<F> cur = g.odd ? mb.p : moving_conic(u, p);
    g.descent.push_back(cur);
    const int steps = g.odd ? g.k : g.k - 1;
    for (int s = 0; s < steps; ++s) {
        cur = descend(cur, p, &u);
        g.descent.push_back(cur);
    }
    for (const auto& P : g.list())
        if (!substitute_param(P, u.u).is_zero()) throw Error(ErrorCode::Internal, "generator does not vanish on the curve");
    if (static_cast<int>(g.list().size()) != g.k + 3) throw Error(ErrorCode::Internal, "unexpected generator count");
    return g;
}

// For 2i + j < d every kernel element is a multiple of the inverse form.
template <class F>
bool low_bidegree_membership_check(const BiForm<F>& P, const ConicPencil<F>& p, int d) {
    if (2 * P.tdeg() + P.xdeg() >= d) throw Error(ErrorCode::PreconditionViolated, "bidegree is not below the curve degree");
    if (P.is_zero()) return true;
    return P.divide_exact(inverse_form(p)).has_value();
}

// P(F1, F2, X) is the same form for every member of the chain.
template <class F>
bool descent_invariant(const ReesGenerators<F>& g, const ConicPencil<F>& p) {
    auto ref = substitute_pair(g.descent.back(), p.f1, p.f2);
    for (const auto& P : g.descent)
        if (!(substitute_pair(P, p.f1, p.f2) == ref)) return false;
    return true;
}

// T-degree below d - mu, except moving lines of T-degree exactly d - mu.
template <class F>
bool degree_bound_holds(const ReesGenerators<F>& g, int d) {
    const int bound = d - g.mu_basis.mu;
    for (const auto& P : g.list()) {
        if (P.tdeg() < bound) continue;
        if (P.tdeg() == bound && P.xdeg() == 1) continue;
        return false;
    }
    return true;
}

// No generator lies in the span of monomial multiples of the others in its own bidegree.
template <class F>
bool minimality_smoke_test(const ReesGenerators<F>& g) {
    auto all = g.list();
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const auto& target = all[idx];
        const int i = target.tdeg(), j = target.xdeg();
        auto mons = bi_monomials(i, j);
        std::vector<std::vector<F>> rows;
        for (std::size_t o = 0; o < all.size(); ++o) {
            if (o == idx) continue;
            const auto& h = all[o];
            if (h.tdeg() > i || h.xdeg() > j) continue;
            for (const auto& m : bi_monomials(i - h.tdeg(), j - h.xdeg()))
                rows.push_back(detail::vector_from_form(mons, BiForm<F>(i - h.tdeg(), j - h.xdeg(),
                                                                        BiForm<F>::Poly::monomial(m)) * h));
        }
        if (rows.empty()) continue;
        Matrix<F> m(rows.size() + 1, mons.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < mons.size(); ++c) m(r, c) = rows[r][c];
        const std::size_t base = rank(m);
        auto tv = detail::vector_from_form(mons, target);
        for (std::size_t c = 0; c < mons.size(); ++c) m(rows.size(), c) = tv[c];
        if (rank(m) == base) return false;
    }
    return true;
}

// Some T2^N * P with N <= max_power lies in the ideal generated by the two syzygies.
template <class F>
bool saturation_check(const BiForm<F>& P, const MuBasis<F>& mb, int max_power) {
    const int j = P.xdeg();
    if (j < 1) return P.is_zero();
    for (int N = 0; N <= max_power; ++N) {
        const int i = P.tdeg() + N;
        auto target = BiForm<F>::from_bin(BinForm<F>::monomial(0, N)) * P;
        auto mons = bi_monomials(i, j);
        std::vector<BiForm<F>> cols;
        for (const auto* b : {&mb.p, &mb.q}) {
            if (b->tdeg() > i) continue;
            for (const auto& m : bi_monomials(i - b->tdeg(), j - 1))
                cols.push_back(BiForm<F>(i - b->tdeg(), j - 1, BiForm<F>::Poly::monomial(m)) * *b);
        }
        if (cols.empty()) continue;
        std::map<Exponent<5>, std::size_t> index;
        for (std::size_t r = 0; r < mons.size(); ++r) index[mons[r]] = r;
        Matrix<F> sys(mons.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [e, v] : cols[c].terms()) sys(index.at(e), c) = v;
        if (solve(sys, detail::vector_from_form(mons, target))) return true;
    }
    return false;
}

struct ReesCertificates {
    bool all_in_kernel = false;
    bool count = false;
    bool descent_invariant = false;
    bool p0_is_equation = false;
    bool degree_bound = false;
    bool ok() const { return all_in_kernel && count && descent_invariant && p0_is_equation && degree_bound; }
};

template <class F>
ReesCertificates verify(const ReesGenerators<F>& g, const Parameterization<F>& u, const ConicPencil<F>& p,
                        const std::optional<TernForm<F>>& E = std::nullopt) {
    ReesCertificates c;
    c.all_in_kernel = true;
    for (const auto& P : g.list())
        if (!substitute_param(P, u.u).is_zero()) c.all_in_kernel = false;
    c.count = static_cast<int>(g.list().size()) == g.k + 3;
    c.descent_invariant = descent_invariant(g, p);
    const auto& p0 = g.descent.back();
    auto eq = E ? *E : implicit_from_mu_basis(u);
    c.p0_is_equation = p0.tdeg() == 0 && proportional(p0.t_coeff(0, 0), eq);
    c.degree_bound = degree_bound_holds(g, u.degree());
    return c;
}

}  // namespace conics
