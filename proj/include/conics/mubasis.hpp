#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "conics/errors.hpp"
#include "conics/linalg.hpp"
#include "conics/parameterize.hpp"
#include "conics/polycore.hpp"

namespace conics {

// A vector of three binary forms of a common degree; represents sum v_i X_i.
template <class F>
using MovingLine = std::array<BinForm<F>, 3>;

template <class F>
struct MuBasis {
    BiForm<F> p, q;
    int mu = 0;
};

namespace detail {

template <class F>
std::array<F, 3> leading_vector(const MovingLine<F>& v) {
    return {v[0].coeff(0), v[1].coeff(0), v[2].coeff(0)};
}

template <class F>
bool is_zero_vec(const MovingLine<F>& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

// Strip factors of T2 while the T1^k coefficients all vanish.
template <class F>
void strip_t2(MovingLine<F>& v) {
    while (v[0].degree() > 0 && !is_zero_vec(v)) {
        auto lv = leading_vector(v);
        if (!lv[0].is_zero() || !lv[1].is_zero() || !lv[2].is_zero()) return;
        const int n = v[0].degree();
        for (auto& c : v) {
            std::vector<F> nc(c.coeffs().begin() + 1, c.coeffs().end());
            c = BinForm<F>(n - 1, std::move(nc));
        }
    }
}

template <class F>
MovingLine<F> scale_shift(const MovingLine<F>& v, const F& c, int shift) {
    auto m = BinForm<F>::monomial(shift, 0, c);
    return {m * v[0], m * v[1], m * v[2]};
}

template <class F>
MovingLine<F> add(const MovingLine<F>& a, const MovingLine<F>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

// Index of the first nonzero entry.
template <class F>
int pivot(const std::array<F, 3>& v) {
    for (int i = 0; i < 3; ++i)
        if (!v[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

template <class F>
MovingLine<F> scaled(const MovingLine<F>& v, const F& c) {
    return {c * v[0], c * v[1], c * v[2]};
}

}  // namespace detail

template <class F>
MovingLine<F> to_moving_line(const BiForm<F>& p) {
    return p.x_coeffs();
}

template <class F>
BiForm<F> from_moving_line(const MovingLine<F>& v) {
    return BiForm<F>::from_x_coeffs(v);
}

// Reduce the three Koszul syzygies by cancelling leading coefficient vectors
// until two members with independent leading vectors remain.
template <class F>
MuBasis<F> compute_mu_basis(const Parameterization<F>& param) {
    const auto& u = param.u;
    const int d = u[0].degree();
    if (gcd_triple(u).degree() != 0) throw Error(ErrorCode::NotReduced, "parameterization has a common factor");
    if (d < 1) throw Error(ErrorCode::DegreeTooSmall, "parameterization of degree 0");
    const BinForm<F> zero(d);
    std::vector<MovingLine<F>> gens{{u[1], -u[0], zero}, {u[2], zero, -u[0]}, {zero, u[2], -u[1]}};
    for (auto& g : gens) detail::strip_t2(g);
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const auto& g) { return detail::is_zero_vec(g); }),
               gens.end());

    while (true) {
        // find a dependency among the leading vectors
        std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a[0].degree() > b[0].degree(); });
        const std::size_t n = gens.size();
        Matrix<F> lv(3, n);
        for (std::size_t j = 0; j < n; ++j) {
            auto v = detail::leading_vector(gens[j]);
            for (std::size_t i = 0; i < 3; ++i) lv(i, j) = v[i];
        }
        auto ns = nullspace(lv);
        if (ns.empty()) break;
        // the relation with support on the highest-degree member available
        const auto& rel = ns.front();
        std::size_t top = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!rel[j].is_zero()) {
                top = j;
                break;
            }
        const int k = gens[top][0].degree();
        MovingLine<F> comb{BinForm<F>(k), BinForm<F>(k), BinForm<F>(k)};
        for (std::size_t j = 0; j < n; ++j) {
            if (rel[j].is_zero()) continue;
            comb = detail::add(comb, detail::scale_shift(gens[j], rel[j], k - gens[j][0].degree()));
        }
        detail::strip_t2(comb);
        if (detail::is_zero_vec(comb))
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(top));
        else
            gens[top] = comb;
    }
    if (gens.size() != 2) throw Error(ErrorCode::Internal, "syzygy reduction did not leave two generators");
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a[0].degree() < b[0].degree(); });
    MovingLine<F> p = gens[0], q = gens[1];
    const int mu = p[0].degree(), e = q[0].degree();
    if (mu + e != d) throw Error(ErrorCode::Internal, "degrees of the syzygy basis do not add up");

    if (mu == e) {
        // row-reduce the two leading vectors
        auto lp = detail::leading_vector(p), lq = detail::leading_vector(q);
        Matrix<F> m(2, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            m(0, i) = lp[i];
            m(1, i) = lq[i];
        }
        // coefficients c with c * (p; q) giving the reduced rows
        Matrix<F> aug(2, 5);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t i = 0; i < 3; ++i) aug(r, i) = m(r, i);
            aug(r, 3 + r) = F(1);
        }
        rref(aug);
        MovingLine<F> np = detail::add(detail::scaled(p, aug(0, 3)), detail::scaled(q, aug(0, 4)));
        MovingLine<F> nq = detail::add(detail::scaled(p, aug(1, 3)), detail::scaled(q, aug(1, 4)));
        p = np;
        q = nq;
    } else {
        auto lp = detail::leading_vector(p);
        p = detail::scaled(p, F(1) / lp[static_cast<std::size_t>(detail::pivot(lp))]);
    }
    // reduce q by p at p's pivot column
    const auto piv = static_cast<std::size_t>(detail::pivot(detail::leading_vector(p)));
    for (int s = 0; s <= e - mu; ++s) {
        F c = q[piv].coeff(s);
        if (c.is_zero()) continue;
        auto m = BinForm<F>::monomial(e - mu - s, s, c);
        q = {q[0] - m * p[0], q[1] - m * p[1], q[2] - m * p[2]};
    }
    auto lq = detail::leading_vector(q);
    q = detail::scaled(q, F(1) / lq[static_cast<std::size_t>(detail::pivot(lq))]);
    return {from_moving_line(p), from_moving_line(q), mu};
}

template <class F>
int mu_value(const Parameterization<F>& u) {
    return compute_mu_basis(u).mu;
}

// The 2x2 minors of the 3x2 matrix (p | q), as a triple of binary forms.
template <class F>
BinTriple<F> cross_product(const BiForm<F>& p, const BiForm<F>& q) {
    auto a = p.x_coeffs(), b = q.x_coeffs();
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Minors equal c * u with c a nonzero scalar.
template <class F>
bool cross_product_check(const MuBasis<F>& m, const Parameterization<F>& u) {
    auto c = cross_product(m.p, m.q);
    std::optional<F> ratio;
    for (std::size_t i = 0; i < 3; ++i) {
        if (c[i].degree() != u.u[i].degree() && !(c[i].is_zero() && u.u[i].is_zero())) return false;
        for (int k = 0; k <= u.u[i].degree(); ++k) {
            const F& x = c[i].coeff(k);
            const F& y = u.u[i].coeff(k);
            if (y.is_zero()) {
                if (!x.is_zero()) return false;
                continue;
            }
            F r = x / y;
            if (r.is_zero()) return false;
            if (ratio && !(*ratio == r)) return false;
            ratio = r;
        }
    }
    return ratio.has_value();
}

// Whether target = r1 * b1 + r2 * b2 for binary forms r1, r2 of the forced degrees.
template <class F>
bool in_span(const BiForm<F>& target, const BiForm<F>& b1, const BiForm<F>& b2) {
    const int n = target.tdeg();
    auto tv = target.x_coeffs();
    auto v1 = b1.x_coeffs(), v2 = b2.x_coeffs();
    const int e1 = n - b1.tdeg(), e2 = n - b2.tdeg();
    const int n1 = e1 >= 0 ? e1 + 1 : 0, n2 = e2 >= 0 ? e2 + 1 : 0;
    Matrix<F> sys(static_cast<std::size_t>(3 * (n + 1)), static_cast<std::size_t>(n1 + n2));
    std::vector<F> rhs;
    for (std::size_t i = 0; i < 3; ++i)
        for (int k = 0; k <= n; ++k) rhs.push_back(tv[i].coeff(k));
    auto fill = [&](const MovingLine<F>& v, int e, int count, int offset) {
        for (int s = 0; s < count; ++s) {
            // unknown: coefficient of T1^(e-s) T2^s
            for (std::size_t i = 0; i < 3; ++i) {
                auto prod = BinForm<F>::monomial(e - s, s) * v[i];
                for (int k = 0; k <= n; ++k)
                    sys(i * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(k), static_cast<std::size_t>(offset + s)) =
                        prod.coeff(k);
            }
        }
    };
    fill(v1, e1, n1, 0);
    fill(v2, e2, n2, n1);
    if (n1 + n2 == 0) return target.is_zero();
    return solve(sys, rhs).has_value();
}

// Two syzygy bases span the same K[T]-module (each member is a combination of the other pair).
template <class F>
bool equivalent_bases(const BiForm<F>& p1, const BiForm<F>& q1, const BiForm<F>& p2, const BiForm<F>& q2) {
    return in_span(p2, p1, q1) && in_span(q2, p1, q1) && in_span(p1, p2, q2) && in_span(q1, p2, q2);
}

}  // namespace conics
