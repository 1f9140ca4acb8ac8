#pragma once

#include <utility>
#include <vector>

#include "conics/field.hpp"
#include "conics/polycore.hpp"
#include "conics/univariate.hpp"

namespace conics {

template <class Form>
struct FactorPower {
    Form factor;
    int multiplicity = 0;
};

// Squarefree decomposition of a binary form into (factor, multiplicity) pairs.
// Factors are normalized; their product with multiplicities equals f up to a scalar.
template <class F>
std::vector<FactorPower<BinForm<F>>> bin_squarefree(const BinForm<F>& f) {
    std::vector<FactorPower<BinForm<F>>> out;
    if (f.is_zero()) return out;
    int m = f.t1_multiplicity();
    if (m > 0) out.push_back({BinForm<F>::monomial(1, 0), m});
    auto parts = uni::squarefree(f.to_uni());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (uni::degree(parts[i]) < 1) continue;
        out.push_back({BinForm<F>::from_uni(parts[i], uni::degree(parts[i])).normalized(), static_cast<int>(i + 1)});
    }
    return out;
}

// Rational linear factors with multiplicity, and the cofactor left over.
struct BinLinearSplit {
    std::vector<FactorPower<BinForm<Rational>>> linear;
    BinForm<Rational> rest;
};

inline BinLinearSplit bin_linear_factors(const BinForm<Rational>& f) {
    BinLinearSplit out;
    out.rest = f;
    if (f.is_zero()) return out;
    int m = f.t1_multiplicity();
    if (m > 0) {
        auto t1 = BinForm<Rational>::monomial(1, 0);
        out.linear.push_back({t1, m});
        out.rest = *out.rest.divide_exact(t1.pow(m));
    }
    auto pu = f.to_uni();
    for (const auto& r : uni::rational_roots(pu)) {
        int mult = uni::root_multiplicity(pu, r);
        // s - r with s = T2/T1 homogenizes to T2 - r*T1
        BinForm<Rational> lin(1, {-r, Rational(1)});
        out.linear.push_back({lin.normalized(), mult});
        out.rest = *out.rest.divide_exact(lin.pow(mult));
    }
    return out;
}

// Rational roots (t1:t2) of a binary form with multiplicities.
inline std::vector<std::pair<std::array<Rational, 2>, int>> bin_rational_roots(const BinForm<Rational>& f) {
    std::vector<std::pair<std::array<Rational, 2>, int>> out;
    for (const auto& fp : bin_linear_factors(f).linear) {
        // c0*T1 + c1*T2 vanishes at (c1 : -c0)
        const auto& c0 = fp.factor.coeff(0);
        const auto& c1 = fp.factor.coeff(1);
        out.push_back({{c1, -c0}, fp.multiplicity});
    }
    return out;
}

namespace detail {

// f restricted to the coordinate plane X_{skip} = 0, as a binary form in the remaining two variables.
inline BinForm<Rational> restrict_to_line(const TernForm<Rational>& f, int skip) {
    const int n = f.degree();
    BinForm<Rational> r(n);
    // the second remaining variable plays the role of T2
    int j = skip == 2 ? 1 : 2;
    for (const auto& [e, c] : f.terms())
        if (e[static_cast<std::size_t>(skip)] == 0) r.coeff(e[static_cast<std::size_t>(j)]) += c;
    return r;
}

// Second coefficients c of normalized linear factors T1 + c*T2 of a binary form.
inline std::vector<Rational> leading_one_factors(const BinForm<Rational>& b) {
    std::vector<Rational> out;
    for (const auto& fp : bin_linear_factors(b).linear)
        if (fp.factor.coeff(0).is_one()) out.push_back(fp.factor.coeff(1));
    return out;
}

}  // namespace detail

struct TernLinearSplit {
    std::vector<FactorPower<TernForm<Rational>>> linear;
    TernForm<Rational> rest;
};

// All rational linear factors of a ternary form, each normalized, with multiplicities.
inline TernLinearSplit tern_linear_factors(const TernForm<Rational>& f) {
    TernLinearSplit out;
    out.rest = f;
    if (f.is_zero() || f.degree() == 0) return out;
    auto peel = [&](const TernForm<Rational>& L) {
        int mult = 0;
        while (out.rest.degree() > 0) {
            auto q = out.rest.divide_exact(L);
            if (!q) break;
            out.rest = std::move(*q);
            ++mult;
        }
        if (mult > 0) out.linear.push_back({L.normalized(), mult});
        return mult > 0;
    };
    for (int i = 0; i < 3; ++i) peel(TernForm<Rational>::var(i));
    bool progress = true;
    while (progress && out.rest.degree() > 0) {
        progress = false;
        // L = X1 + b X2 + c X3: X1 + b X2 divides rest(X1,X2,0), X1 + c X3 divides rest(X1,0,X3)
        auto bs = detail::leading_one_factors(detail::restrict_to_line(out.rest, 2));
        auto cs = detail::leading_one_factors(detail::restrict_to_line(out.rest, 1));
        for (const auto& b : bs) {
            for (const auto& c : cs) {
                if (peel(TernForm<Rational>::linear(Rational(1), b, c))) {
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
        if (progress) continue;
        // L = X2 + c X3
        for (const auto& c : detail::leading_one_factors(detail::restrict_to_line(out.rest, 0))) {
            if (peel(TernForm<Rational>::linear(Rational(0), Rational(1), c))) {
                progress = true;
                break;
            }
        }
    }
    return out;
}

}  // namespace conics
