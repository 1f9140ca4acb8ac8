#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <cstddef>
#include <utility>
#include <vector>

#include "conics/errors.hpp"
#include "conics/field.hpp"

namespace conics::uni {

// Dense univariate polynomial, coefficient of t^i at index i; the zero polynomial is empty.
template <class F>
using Poly = std::vector<F>;

template <class F>
void trim(Poly<F>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
int degree(const Poly<F>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class F>
Poly<F> sub(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), F(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

template <class F>
Poly<F> mul(const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, F(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(Poly<F> a, const Poly<F>& b) {
    if (b.empty()) throw Error(ErrorCode::PreconditionViolated, "polynomial division by zero");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    Poly<F> q(a.size() - b.size() + 1, F(0));
    F inv = F(1) / b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        F c = a[k + b.size() - 1] * inv;
        q[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

template <class F>
Poly<F> monic(Poly<F> p) {
    trim(p);
    if (p.empty()) return p;
    F inv = F(1) / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class F>
Poly<F> derivative(const Poly<F>& p) {
    Poly<F> r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * F(static_cast<long>(i)));
    trim(r);
    return r;
}

template <class F>
F eval(const Poly<F>& p, const F& x) {
    F acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Yun's algorithm: returns squarefree monic factors s_1, s_2, ... with p = c * prod s_i^i.
// Over F_p the decomposition is only meaningful when p exceeds the degree.
template <class F>
std::vector<Poly<F>> squarefree(Poly<F> p) {
    trim(p);
    if constexpr (!is_rational_v<F>) {
        if (!p.empty()) {
            auto m = p.back().modulus();
            if (m != 0 && m <= static_cast<std::uint64_t>(p.size()))
                throw Error(ErrorCode::BadPrime, "prime too small for squarefree decomposition");
        }
    }
    std::vector<Poly<F>> out;
    if (degree(p) < 1) return out;
    auto dp = derivative(p);
    auto a = gcd(p, dp);
    auto b = divmod(p, a).first;
    auto c = divmod(dp, a).first;
    auto d = sub(c, derivative(b));
    while (degree(b) >= 1) {
        auto g = gcd(b, d);
        out.push_back(g);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = sub(c, derivative(b));
    }
    while (!out.empty() && degree(out.back()) == 0) out.pop_back();
    return out;
}

namespace detail {

// Number of sign changes of the Sturm sequence evaluated at x.
inline int sturm_changes(const std::vector<Poly<Rational>>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& s : seq) {
        int sg = eval(s, x).sign();
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

// Primitive integer polynomial proportional to p.
inline Poly<Rational> primitive(const Poly<Rational>& p) {
    mpz_class den = 1, g = 0;
    for (auto& c : p) den = lcm(den, c.den());
    std::vector<mpz_class> ic;
    for (auto& c : p) {
        mpq_class v = c.raw() * den;
        ic.push_back(v.get_num());
        g = gcd(g, ic.back());
    }
    Poly<Rational> out;
    for (auto& c : ic) out.emplace_back(mpz_class(c / g), mpz_class(1));
    if (!out.empty() && out.back().sign() < 0)
        for (auto& c : out) c = -c;
    return out;
}

// One pass of root isolation. Returns a rational root hit exactly at a bisection point, if any.
// Every rational root of a primitive integer polynomial with leading coefficient L has the form k/L.
inline std::optional<Rational> isolate(const Poly<Rational>& zp, std::vector<Rational>& found) {
    std::vector<Poly<Rational>> seq{zp, derivative(zp)};
    while (degree(seq.back()) > 0) {
        auto r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(r);
    }
    const mpz_class lead = zp.back().num();
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < zp.size(); ++i) {
        Rational q = zp[i] / zp.back();
        if (q.sign() < 0) q = -q;
        if (bound < q + Rational(1)) bound = q + Rational(1);
    }
    const Rational width(mpz_class(1), lead);
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = sturm_changes(seq, lo) - sturm_changes(seq, hi);
        if (n == 0) continue;
        if (n == 1 && hi - lo < width) {
            mpq_class a = lo.raw() * lead, b = hi.raw() * lead;
            mpz_class k, kmax;
            mpz_fdiv_q(k.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
            mpz_fdiv_q(kmax.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
            for (k += 1; k <= kmax; ++k) {
                Rational x(k, lead);
                if (eval(zp, x).is_zero()) found.push_back(x);
            }
            continue;
        }
        Rational mid = (lo + hi) / Rational(2);
        if (eval(zp, mid).is_zero()) return mid;
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }
    return std::nullopt;
}

}  // namespace detail

// Distinct rational roots of p, in increasing order.
inline std::vector<Rational> rational_roots(Poly<Rational> p) {
    trim(p);
    std::vector<Rational> roots;
    if (degree(p) < 1) return roots;
    std::size_t low = 0;
    while (p[low].is_zero()) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (degree(p) >= 1) {
        Poly<Rational> s{Rational(1)};
        for (auto& f : squarefree(p)) s = mul(s, f);
        auto zp = detail::primitive(s);
        while (degree(zp) >= 1) {
            std::vector<Rational> found;
            auto hit = detail::isolate(zp, found);
            if (!hit) {
                roots.insert(roots.end(), found.begin(), found.end());
                break;
            }
            roots.push_back(*hit);
            zp = detail::primitive(divmod(zp, Poly<Rational>{-*hit, Rational(1)}).first);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Multiplicity of x as a root of p.
template <class F>
int root_multiplicity(Poly<F> p, const F& x) {
    trim(p);
    int m = 0;
    const Poly<F> lin{-x, F(1)};
    while (!p.empty()) {
        auto [q, r] = divmod(p, lin);
        if (!r.empty()) break;
        p = std::move(q);
        ++m;
    }
    return m;
}

}  // namespace conics::uni
