#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "conics/errors.hpp"
#include "conics/factor.hpp"
#include "conics/field.hpp"
#include "conics/linalg.hpp"
#include "conics/mubasis.hpp"
#include "conics/parameterize.hpp"
#include "conics/pencil.hpp"
#include "conics/polycore.hpp"
#include "conics/rees.hpp"

namespace conics {

namespace detail {

// Kernel basis by fraction-free elimination after scaling each row to integers.
inline std::vector<std::vector<Rational>> integer_nullspace(const Matrix<Rational>& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).raw().get_num() * (l / m(i, j).raw().get_den());
    }
    std::vector<std::size_t> piv;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(C, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> x(C, Rational(0));
        x[f] = Rational(1);
        for (std::size_t i = piv.size(); i-- > 0;) {
            mpq_class s = 0;
            for (std::size_t j = piv[i] + 1; j < C; ++j)
                if (!x[j].is_zero()) s += mpq_class(a[i][j]) * x[j].raw();
            x[piv[i]] = Rational(mpq_class(-s / a[i][piv[i]]));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace detail

// Brute force: the degree-d forms vanishing on u, by linear algebra on coefficients.
template <class F>
TernForm<F> nullspace_implicitize(const Parameterization<F>& u, int d) {
    auto mons = monomials_of_degree<3>(d);
    const int out_deg = d * u.degree();
    std::array<std::vector<BinForm<F>>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i) pw[i] = detail::powers(u.u[i], d, BinForm<F>::constant(F(1)));
    Matrix<F> m(static_cast<std::size_t>(out_deg + 1), mons.size());
    for (std::size_t c = 0; c < mons.size(); ++c) {
        auto img = pw[0][static_cast<std::size_t>(mons[c][0])] * pw[1][static_cast<std::size_t>(mons[c][1])] *
                   pw[2][static_cast<std::size_t>(mons[c][2])];
        for (int r = 0; r <= out_deg; ++r) m(static_cast<std::size_t>(r), c) = img.coeff(r);
    }
    std::vector<std::vector<F>> ns;
    if constexpr (std::is_same_v<F, Rational>)
        ns = detail::integer_nullspace(m);
    else
        ns = nullspace(m);
    if (ns.empty()) throw Error(ErrorCode::NoCurve, "no form of this degree vanishes on the curve");
    if (ns.size() > 1) throw Error(ErrorCode::NotProperOrWrongDegree, "more than one form vanishes on the curve");
    typename TernForm<F>::Poly p;
    for (std::size_t c = 0; c < mons.size(); ++c) p.add_term(mons[c], ns[0][c]);
    return TernForm<F>(d, std::move(p)).normalized();
}

struct SampleSet {
    std::vector<std::array<Rational, 2>> parameters;
    std::vector<ProjPoint<Rational>> points;
};

inline SampleSet sample_points(const Parameterization<Rational>& u, int n, std::uint64_t seed) {
    SampleSet out;
    std::mt19937_64 rng(seed);
    std::set<Rational> seen;
    int attempts = 0;
    while (static_cast<int>(out.points.size()) < n) {
        const int bound = 9 + attempts / 64;
        std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
        ++attempts;
        Rational t = Rational(num(rng)) / Rational(den(rng));
        if (!seen.insert(t).second) continue;
        std::array<Rational, 3> v{u.u[0].eval(Rational(1), t), u.u[1].eval(Rational(1), t), u.u[2].eval(Rational(1), t)};
        if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
        out.parameters.push_back({Rational(1), t});
        out.points.emplace_back(v);
    }
    return out;
}

namespace detail {

// Multiplicity multiset from the squarefree decomposition: a factor of degree k and multiplicity m gives k copies of m.
template <class F>
std::vector<int> pattern_of(const BinForm<F>& quartic) {
    std::vector<int> out;
    for (const auto& fp : bin_squarefree(quartic))
        for (int i = 0; i < fp.factor.degree(); ++i) out.push_back(fp.multiplicity);
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline const std::array<std::uint64_t, 6>& mirror_primes() {
    static const std::array<std::uint64_t, 6> p{1000000007ULL, 998244353ULL, 1000000009ULL,
                                                2147483647ULL, 1000003ULL,   65537ULL};
    return p;
}

template <class Form>
auto reduce_form(const Form& f, std::uint64_t p) {
    return f.template map_coeffs<ModP>([p](const Rational& c) { return reduce_mod(c, p); });
}

}  // namespace detail

struct PatternReport {
    std::vector<int> pattern;
    std::vector<int> modular_pattern;
    std::uint64_t prime = 0;
    bool agrees = false;
};

// Base point multiplicities through projection resultants, independent of classification.
inline PatternReport base_locus_report(const ConicPencil<Rational>& p, std::uint64_t seed) {
    if (is_degenerate(p)) throw Error(ErrorCode::Degenerate, "degenerate pencil");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    PatternReport rep;
    std::optional<BinForm<Rational>> finest;
    int found = 0;
    for (int attempt = 0; attempt < 64 && found < 2; ++attempt) {
        auto pr = detail::project(p, detail::random_change(rng));
        if (pr.g1.coeff(0, 0, 2).is_zero() || pr.g2.coeff(0, 0, 2).is_zero()) continue;
        auto quartic = detail::x3_resultant(pr.g1, pr.g2);
        auto pat = detail::pattern_of(quartic);
        ++found;
        if (!finest || pat.size() > rep.pattern.size()) {
            rep.pattern = pat;
            finest = quartic;
        }
    }
    if (!finest) throw Error(ErrorCode::Internal, "no generic projection found");
    const auto& primes = detail::mirror_primes();
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto prime = primes[(seed + i) % primes.size()];
        try {
            auto mp = detail::pattern_of(detail::reduce_form(*finest, prime));
            rep.prime = prime;
            rep.modular_pattern = mp;
            rep.agrees = mp == rep.pattern;
            if (rep.agrees) break;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BadPrime) throw;
        }
    }
    return rep;
}

inline std::vector<int> base_locus_pattern(const ConicPencil<Rational>& p, std::uint64_t seed) {
    return base_locus_report(p, seed).pattern;
}

struct MirrorInput {
    std::optional<ConicPencil<Rational>> pencil;
    std::optional<BinTriple<Rational>> u;
};

struct StructuralData {
    std::optional<std::string> cls;
    std::optional<int> mu;
    std::optional<int> reduced_degree;
    std::optional<int> generator_count;
    friend bool operator==(const StructuralData&, const StructuralData&) = default;
};

struct MirrorReport {
    std::uint64_t prime = 0;
    StructuralData rational, modular;
    bool agrees() const { return rational == modular; }
};

namespace detail {

template <class F>
StructuralData structural(const std::optional<ConicPencil<F>>& pencil, const std::optional<BinTriple<F>>& u) {
    StructuralData s;
    if (pencil) s.cls = class_name(classify(*pencil));
    if (u) {
        auto param = reduce(Parameterization<F>{*u, false, std::nullopt});
        s.reduced_degree = param.degree();
        if (param.degree() >= 1) s.mu = compute_mu_basis(param).mu;
        if (pencil && s.mu && *s.mu > 1 && check_inverse(param, *pencil))
            s.generator_count = static_cast<int>(generators(param, *pencil).list().size());
    }
    return s;
}

}  // namespace detail

// Rerun the structural computations over F_p and compare with the rational run.
inline MirrorReport modular_mirror(const MirrorInput& in, std::uint64_t prime) {
    MirrorReport rep;
    rep.prime = prime;
    rep.rational = detail::structural(in.pencil, in.u);
    std::optional<ConicPencil<ModP>> mp;
    std::optional<BinTriple<ModP>> mu;
    if (in.pencil) mp = ConicPencil<ModP>{detail::reduce_form(in.pencil->f1, prime), detail::reduce_form(in.pencil->f2, prime)};
    if (in.u)
        mu = BinTriple<ModP>{detail::reduce_form((*in.u)[0], prime), detail::reduce_form((*in.u)[1], prime),
                             detail::reduce_form((*in.u)[2], prime)};
    rep.modular = detail::structural(mp, mu);
    return rep;
}

}  // namespace conics
