#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conics/errors.hpp"
#include "conics/field.hpp"
#include "conics/linalg.hpp"
#include "conics/univariate.hpp"

namespace conics {

template <std::size_t N>
using Exponent = std::array<int, N>;

// Sparse polynomial in N variables. Terms are kept in descending lex order,
// so the first stored term is the lex-first monomial.
template <class F, std::size_t N>
class SparsePoly {
public:
    using Exp = Exponent<N>;
    using Map = std::map<Exp, F, std::greater<Exp>>;

    SparsePoly() = default;

    static SparsePoly constant(const F& c) {
        SparsePoly p;
        p.add_term(Exp{}, c);
        return p;
    }
    static SparsePoly monomial(const Exp& e, const F& c = F(1)) {
        SparsePoly p;
        p.add_term(e, c);
        return p;
    }

    void add_term(const Exp& e, const F& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    F coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0) : it->second;
    }
    // lex-first term; requires nonzero
    const std::pair<const Exp, F>& lead() const { return *terms_.begin(); }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator-(const SparsePoly& a) {
        SparsePoly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e;
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend SparsePoly operator*(const F& s, const SparsePoly& a) {
        SparsePoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
        return r;
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

    // Exact quotient a / g, or nullopt when g does not divide a.
    std::optional<SparsePoly> divide_exact(const SparsePoly& g) const {
        if (g.is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by zero polynomial");
        SparsePoly r = *this, q;
        const auto& [ge, gc] = g.lead();
        const F ginv = F(1) / gc;
        while (!r.is_zero()) {
            auto [re, rc] = r.lead();
            Exp m;
            for (std::size_t i = 0; i < N; ++i) {
                m[i] = re[i] - ge[i];
                if (m[i] < 0) return std::nullopt;
            }
            F c = rc * ginv;
            q.add_term(m, c);
            for (const auto& [e, gcoef] : g.terms_) {
                Exp t;
                for (std::size_t i = 0; i < N; ++i) t[i] = e[i] + m[i];
                r.add_term(t, -(c * gcoef));
            }
        }
        return q;
    }

    // Apply f to every coefficient (e.g. reduction modulo a prime).
    template <class G, class Fn>
    SparsePoly<G, N> map_coeffs(Fn fn) const {
        SparsePoly<G, N> r;
        for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

private:
    Map terms_;
};

// All exponent vectors of N variables with total degree deg, in descending lex order.
template <std::size_t N>
std::vector<Exponent<N>> monomials_of_degree(int deg) {
    std::vector<Exponent<N>> out;
    if (deg < 0) return out;
    Exponent<N> e{};
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == N) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, deg);
    return out;
}

// ---------------------------------------------------------------------------
// Binary forms

template <class F>
class BinForm {
public:
    BinForm() = default;
    explicit BinForm(int degree) : deg_(degree), c_(static_cast<std::size_t>(degree + 1), F(0)) {
        if (degree < 0) throw Error(ErrorCode::WrongDegree, "negative degree");
    }
    BinForm(int degree, std::vector<F> coeffs) : deg_(degree), c_(std::move(coeffs)) {
        if (degree < 0 || c_.size() != static_cast<std::size_t>(degree + 1))
            throw Error(ErrorCode::WrongDegree, "coefficient vector length must be degree + 1");
    }
    // c * T1^a * T2^b
    static BinForm monomial(int a, int b, const F& c = F(1)) {
        BinForm f(a + b);
        f.c_[static_cast<std::size_t>(b)] = c;
        return f;
    }
    static BinForm constant(const F& c) { return BinForm(0, {c}); }

    int degree() const { return deg_; }
    // coefficient of T1^(n-k) T2^k
    const F& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    F& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<F>& coeffs() const { return c_; }
    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    // index of the first nonzero coefficient, -1 for zero
    int lead_index() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero()) return static_cast<int>(k);
        return -1;
    }

    BinForm& operator+=(const BinForm& o) {
        if (o.deg_ != deg_) {
            if (o.is_zero()) return *this;
            if (!is_zero()) throw Error(ErrorCode::WrongDegree, "adding binary forms of different degree");
            return *this = o;
        }
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    BinForm& operator-=(const BinForm& o) { return *this += -o; }
    friend BinForm operator+(BinForm a, const BinForm& b) { return a += b; }
    friend BinForm operator-(BinForm a, const BinForm& b) { return a -= b; }
    friend BinForm operator-(BinForm a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend BinForm operator*(const BinForm& a, const BinForm& b) {
        BinForm r(a.deg_ + b.deg_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend BinForm operator*(const F& s, BinForm a) {
        for (auto& c : a.c_) c *= s;
        return a;
    }
    friend bool operator==(const BinForm& a, const BinForm& b) { return a.deg_ == b.deg_ && a.c_ == b.c_; }

    BinForm pow(int e) const {
        BinForm r = constant(F(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    F eval(const F& t1, const F& t2) const {
        F acc(0), p2(1);
        std::vector<F> p1(c_.size(), F(1));
        for (std::size_t k = 1; k < c_.size(); ++k) p1[k] = p1[k - 1] * t1;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            acc += c_[k] * p1[c_.size() - 1 - k] * p2;
            p2 *= t2;
        }
        return acc;
    }

    // Dehomogenization f(1, s) as a univariate polynomial in s.
    uni::Poly<F> to_uni() const {
        uni::Poly<F> p(c_);
        uni::trim(p);
        return p;
    }
    static BinForm from_uni(const uni::Poly<F>& p, int degree) {
        if (uni::degree(p) > degree) throw Error(ErrorCode::WrongDegree, "polynomial exceeds declared degree");
        BinForm f(degree);
        for (std::size_t k = 0; k < p.size(); ++k) f.c_[k] = p[k];
        return f;
    }
    // exponent of T1 dividing f (meaningful for nonzero f)
    int t1_multiplicity() const { return deg_ - uni::degree(to_uni()); }

    std::optional<BinForm> divide_exact(const BinForm& g) const {
        if (g.is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by zero form");
        if (g.deg_ > deg_) {
            if (is_zero()) return BinForm(0);
            return std::nullopt;
        }
        auto [q, r] = uni::divmod(to_uni(), g.to_uni());
        if (!r.empty() || uni::degree(q) > deg_ - g.deg_) return std::nullopt;
        return from_uni(q, deg_ - g.deg_);
    }

    // divided by the first nonzero coefficient
    BinForm normalized() const {
        int k = lead_index();
        if (k < 0) return *this;
        return (F(1) / c_[static_cast<std::size_t>(k)]) * *this;
    }

    template <class G, class Fn>
    BinForm<G> map_coeffs(Fn fn) const {
        std::vector<G> v;
        for (const auto& c : c_) v.push_back(fn(c));
        return BinForm<G>(deg_, std::move(v));
    }

private:
    int deg_ = 0;
    std::vector<F> c_{F(0)};
};

template <class F>
BinForm<F> T1() {
    return BinForm<F>::monomial(1, 0);
}
template <class F>
BinForm<F> T2() {
    return BinForm<F>::monomial(0, 1);
}

// Monic greatest common divisor; the first nonzero coefficient of the result is 1.
template <class F>
BinForm<F> bin_gcd(const BinForm<F>& f, const BinForm<F>& g) {
    const bool fz = f.is_zero(), gz = g.is_zero();
    if (fz && gz) throw Error(ErrorCode::DegenerateInput, "gcd of two zero forms");
    if (fz) return g.normalized();
    if (gz) return f.normalized();
    int m = std::min(f.t1_multiplicity(), g.t1_multiplicity());
    auto h = uni::gcd(f.to_uni(), g.to_uni());
    auto r = BinForm<F>::from_uni(h, uni::degree(h)) * BinForm<F>::monomial(m, 0);
    return r.normalized();
}

// ---------------------------------------------------------------------------
// Homogeneous forms in several variables with declared degrees

template <class F>
class TernForm {
public:
    using Poly = SparsePoly<F, 3>;
    using Exp = Exponent<3>;

    TernForm() = default;
    explicit TernForm(int degree) : deg_(degree) {
        if (degree < 0) throw Error(ErrorCode::WrongDegree, "negative degree");
    }
    TernForm(int degree, Poly p) : deg_(degree), p_(std::move(p)) {
        for (const auto& [e, c] : p_.terms())
            if (e[0] + e[1] + e[2] != degree) throw Error(ErrorCode::WrongDegree, "non-homogeneous ternary form");
    }
    static TernForm monomial(int e1, int e2, int e3, const F& c = F(1)) {
        return TernForm(e1 + e2 + e3, Poly::monomial({e1, e2, e3}, c));
    }
    static TernForm constant(const F& c) { return TernForm(0, Poly::constant(c)); }
    // X_i for i in {0,1,2}
    static TernForm var(int i) {
        Exp e{0, 0, 0};
        e[static_cast<std::size_t>(i)] = 1;
        return TernForm(1, Poly::monomial(e));
    }
    static TernForm linear(const F& a, const F& b, const F& c) {
        Poly p;
        p.add_term({1, 0, 0}, a);
        p.add_term({0, 1, 0}, b);
        p.add_term({0, 0, 1}, c);
        return TernForm(1, std::move(p));
    }

    int degree() const { return deg_; }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    F coeff(int e1, int e2, int e3) const { return p_.coeff({e1, e2, e3}); }
    F coeff(const Exp& e) const { return p_.coeff(e); }
    const typename Poly::Map& terms() const { return p_.terms(); }

    TernForm& operator+=(const TernForm& o) {
        if (o.deg_ != deg_) {
            if (o.is_zero()) return *this;
            if (!is_zero()) throw Error(ErrorCode::WrongDegree, "adding ternary forms of different degree");
            return *this = o;
        }
        p_ += o.p_;
        return *this;
    }
    TernForm& operator-=(const TernForm& o) { return *this += -o; }
    friend TernForm operator+(TernForm a, const TernForm& b) { return a += b; }
    friend TernForm operator-(TernForm a, const TernForm& b) { return a -= b; }
    friend TernForm operator-(const TernForm& a) { return TernForm(a.deg_, -a.p_); }
    friend TernForm operator*(const TernForm& a, const TernForm& b) {
        TernForm r(a.deg_ + b.deg_);
        r.p_ = a.p_ * b.p_;
        return r;
    }
    friend TernForm operator*(const F& s, const TernForm& a) {
        TernForm r(a.deg_);
        r.p_ = s * a.p_;
        return r;
    }
    friend bool operator==(const TernForm& a, const TernForm& b) { return a.deg_ == b.deg_ && a.p_ == b.p_; }

    TernForm pow(int e) const {
        TernForm r = constant(F(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    std::optional<TernForm> divide_exact(const TernForm& g) const {
        if (g.deg_ > deg_) {
            if (is_zero()) return TernForm(0);
            return std::nullopt;
        }
        auto q = p_.divide_exact(g.p_);
        if (!q) return std::nullopt;
        return TernForm(deg_ - g.deg_, std::move(*q));
    }
    TernForm divide_or_throw(const TernForm& g) const {
        auto q = divide_exact(g);
        if (!q) throw Error(ErrorCode::NotDivisible, "ternary form is not divisible");
        return *q;
    }

    F eval(const std::array<F, 3>& x) const {
        F acc(0);
        for (const auto& [e, c] : p_.terms()) {
            F t = c;
            for (std::size_t i = 0; i < 3; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    // divided by the coefficient of the lex-first monomial
    TernForm normalized() const {
        if (is_zero()) return *this;
        return (F(1) / p_.lead().second) * *this;
    }

    // partial derivative with respect to X_{i+1}
    TernForm derivative(int i) const {
        TernForm r(deg_ > 0 ? deg_ - 1 : 0);
        Poly p;
        for (const auto& [e, c] : p_.terms()) {
            int k = e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            Exp f = e;
            f[static_cast<std::size_t>(i)] -= 1;
            p.add_term(f, c * F(k));
        }
        r.p_ = std::move(p);
        return r;
    }

    template <class G, class Fn>
    TernForm<G> map_coeffs(Fn fn) const {
        return TernForm<G>(deg_, p_.template map_coeffs<G>(fn));
    }

private:
    int deg_ = 0;
    Poly p_;
};

// Bihomogeneous form in (T1,T2 ; X1,X2,X3). Exponent layout: (t1, t2, x1, x2, x3).
template <class F>
class BiForm {
public:
    using Poly = SparsePoly<F, 5>;
    using Exp = Exponent<5>;

    BiForm() = default;
    BiForm(int tdeg, int xdeg) : tdeg_(tdeg), xdeg_(xdeg) {
        if (tdeg < 0 || xdeg < 0) throw Error(ErrorCode::WrongDegree, "negative bidegree");
    }
    BiForm(int tdeg, int xdeg, Poly p) : tdeg_(tdeg), xdeg_(xdeg), p_(std::move(p)) {
        for (const auto& [e, c] : p_.terms())
            if (e[0] + e[1] != tdeg || e[2] + e[3] + e[4] != xdeg)
                throw Error(ErrorCode::WrongDegree, "form is not of the declared bidegree");
    }
    static BiForm from_bin(const BinForm<F>& b) {
        Poly p;
        const int n = b.degree();
        for (int k = 0; k <= n; ++k) p.add_term({n - k, k, 0, 0, 0}, b.coeff(k));
        return BiForm(n, 0, std::move(p));
    }
    static BiForm from_tern(const TernForm<F>& t) {
        Poly p;
        for (const auto& [e, c] : t.terms()) p.add_term({0, 0, e[0], e[1], e[2]}, c);
        return BiForm(0, t.degree(), std::move(p));
    }
    // sum of coeffs[i] * X_{i+1}
    static BiForm from_x_coeffs(const std::array<BinForm<F>, 3>& v) {
        const int n = v[0].degree();
        BiForm r(n, 1);
        for (std::size_t i = 0; i < 3; ++i) {
            Exponent<3> x{0, 0, 0};
            x[i] = 1;
            r += from_bin(v[i]) * from_tern(TernForm<F>::monomial(x[0], x[1], x[2]));
        }
        return r;
    }

    int tdeg() const { return tdeg_; }
    int xdeg() const { return xdeg_; }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    const typename Poly::Map& terms() const { return p_.terms(); }
    F coeff(const Exp& e) const { return p_.coeff(e); }

    BiForm& operator+=(const BiForm& o) {
        if (o.tdeg_ != tdeg_ || o.xdeg_ != xdeg_) {
            if (o.is_zero()) return *this;
            if (!is_zero()) throw Error(ErrorCode::WrongDegree, "adding forms of different bidegree");
            return *this = o;
        }
        p_ += o.p_;
        return *this;
    }
    BiForm& operator-=(const BiForm& o) { return *this += -o; }
    friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
    friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
    friend BiForm operator-(const BiForm& a) { return BiForm(a.tdeg_, a.xdeg_, -a.p_); }
    friend BiForm operator*(const BiForm& a, const BiForm& b) {
        BiForm r(a.tdeg_ + b.tdeg_, a.xdeg_ + b.xdeg_);
        r.p_ = a.p_ * b.p_;
        return r;
    }
    friend BiForm operator*(const F& s, const BiForm& a) {
        BiForm r(a.tdeg_, a.xdeg_);
        r.p_ = s * a.p_;
        return r;
    }
    friend bool operator==(const BiForm& a, const BiForm& b) {
        return a.tdeg_ == b.tdeg_ && a.xdeg_ == b.xdeg_ && a.p_ == b.p_;
    }

    std::optional<BiForm> divide_exact(const BiForm& g) const {
        if (g.tdeg_ > tdeg_ || g.xdeg_ > xdeg_) {
            if (is_zero()) return BiForm(0, 0);
            return std::nullopt;
        }
        auto q = p_.divide_exact(g.p_);
        if (!q) return std::nullopt;
        return BiForm(tdeg_ - g.tdeg_, xdeg_ - g.xdeg_, std::move(*q));
    }

    BiForm normalized() const {
        if (is_zero()) return *this;
        return (F(1) / p_.lead().second) * *this;
    }

    // Coefficients of X1, X2, X3 as binary forms; requires X-degree 1.
    std::array<BinForm<F>, 3> x_coeffs() const {
        if (xdeg_ != 1) throw Error(ErrorCode::WrongDegree, "x_coeffs needs X-degree 1");
        std::array<BinForm<F>, 3> v{BinForm<F>(tdeg_), BinForm<F>(tdeg_), BinForm<F>(tdeg_)};
        for (const auto& [e, c] : p_.terms())
            for (std::size_t i = 0; i < 3; ++i)
                if (e[2 + i] == 1) v[i].coeff(e[1]) += c;
        return v;
    }

    // Coefficient of T1^a T2^b as a ternary form of degree xdeg.
    TernForm<F> t_coeff(int a, int b) const {
        typename TernForm<F>::Poly p;
        for (const auto& [e, c] : p_.terms())
            if (e[0] == a && e[1] == b) p.add_term({e[2], e[3], e[4]}, c);
        return TernForm<F>(xdeg_, std::move(p));
    }

    template <class G, class Fn>
    BiForm<G> map_coeffs(Fn fn) const {
        return BiForm<G>(tdeg_, xdeg_, p_.template map_coeffs<G>(fn));
    }

private:
    int tdeg_ = 0, xdeg_ = 0;
    Poly p_;
};

// ---------------------------------------------------------------------------
// Points and coordinate changes

template <class F>
class ProjPoint {
public:
    ProjPoint() : c_{F(0), F(0), F(1)} {}
    ProjPoint(F x1, F x2, F x3) : c_{std::move(x1), std::move(x2), std::move(x3)} {
        int k = 2;
        while (k >= 0 && c_[static_cast<std::size_t>(k)].is_zero()) --k;
        if (k < 0) throw Error(ErrorCode::DegenerateInput, "the zero vector is not a projective point");
        F inv = F(1) / c_[static_cast<std::size_t>(k)];
        for (auto& c : c_) c *= inv;
    }
    explicit ProjPoint(const std::array<F, 3>& v) : ProjPoint(v[0], v[1], v[2]) {}
    const std::array<F, 3>& coords() const { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    std::string str() const { return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")"; }

private:
    std::array<F, 3> c_;
};

// Invertible 3x3 matrix acting by X_i -> sum_j M(i,j) X_j.
template <class F>
class LinearChange {
public:
    LinearChange() : m_(Matrix<F>::identity(3)) {}
    explicit LinearChange(Matrix<F> m) : m_(std::move(m)) {
        if (m_.rows() != 3 || m_.cols() != 3) throw Error(ErrorCode::PreconditionViolated, "linear change must be 3x3");
        if (determinant(m_).is_zero()) throw Error(ErrorCode::DegenerateInput, "singular linear change");
    }
    const Matrix<F>& matrix() const { return m_; }
    LinearChange inverse() const { return LinearChange(*conics::inverse(m_)); }
    // image of a point under the matrix: P -> M P
    ProjPoint<F> map_point(const ProjPoint<F>& p) const {
        std::array<F, 3> v{F(0), F(0), F(0)};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) v[i] += m_(i, j) * p[j];
        return ProjPoint<F>(v);
    }
    // the linear form sum_j M(i,j) X_j
    TernForm<F> row_form(std::size_t i) const { return TernForm<F>::linear(m_(i, 0), m_(i, 1), m_(i, 2)); }

private:
    Matrix<F> m_;
};

namespace detail {

template <class T>
std::vector<T> powers(const T& base, int n, const T& one) {
    std::vector<T> p{one};
    for (int i = 1; i <= n; ++i) p.push_back(p.back() * base);
    return p;
}

}  // namespace detail

// f(M X): substitute X_i -> row i of M applied to X.
template <class F>
TernForm<F> apply_linear_change(const TernForm<F>& f, const LinearChange<F>& m) {
    const int n = f.degree();
    std::array<std::vector<TernForm<F>>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i)
        pw[i] = detail::powers(m.row_form(i), n, TernForm<F>::constant(F(1)));
    TernForm<F> r(n);
    for (const auto& [e, c] : f.terms())
        r += c * (pw[0][static_cast<std::size_t>(e[0])] * pw[1][static_cast<std::size_t>(e[1])] *
                  pw[2][static_cast<std::size_t>(e[2])]);
    return r;
}

// g(F1(X), F2(X)) for a binary form g.
template <class F>
TernForm<F> compose_with_pair(const BinForm<F>& g, const TernForm<F>& f1, const TernForm<F>& f2) {
    if (f1.degree() != f2.degree()) throw Error(ErrorCode::WrongDegree, "pair must share a degree");
    const int m = g.degree();
    auto p1 = detail::powers(f1, m, TernForm<F>::constant(F(1)));
    auto p2 = detail::powers(f2, m, TernForm<F>::constant(F(1)));
    TernForm<F> r(m * f1.degree());
    for (int k = 0; k <= m; ++k)
        if (!g.coeff(k).is_zero())
            r += g.coeff(k) * (p1[static_cast<std::size_t>(m - k)] * p2[static_cast<std::size_t>(k)]);
    return r;
}

// P(T, u(T)).
template <class F>
BinForm<F> substitute_param(const BiForm<F>& P, const std::array<BinForm<F>, 3>& u) {
    const int d = u[0].degree();
    if (u[1].degree() != d || u[2].degree() != d)
        throw Error(ErrorCode::WrongDegree, "parameterization components must share a degree");
    const int j = P.xdeg();
    std::array<std::vector<BinForm<F>>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i) pw[i] = detail::powers(u[i], j, BinForm<F>::constant(F(1)));
    BinForm<F> r(P.tdeg() + j * d);
    for (const auto& [e, c] : P.terms()) {
        auto t = BinForm<F>::monomial(e[0], e[1], c) * pw[0][static_cast<std::size_t>(e[2])] *
                 pw[1][static_cast<std::size_t>(e[3])] * pw[2][static_cast<std::size_t>(e[4])];
        r += t;
    }
    return r;
}

// P(F1(X), F2(X), X): substitute T1 -> F1, T2 -> F2.
template <class F>
TernForm<F> substitute_pair(const BiForm<F>& P, const TernForm<F>& f1, const TernForm<F>& f2) {
    if (f1.degree() != f2.degree()) throw Error(ErrorCode::WrongDegree, "pair must share a degree");
    const int i = P.tdeg();
    auto p1 = detail::powers(f1, i, TernForm<F>::constant(F(1)));
    auto p2 = detail::powers(f2, i, TernForm<F>::constant(F(1)));
    TernForm<F> r(i * f1.degree() + P.xdeg());
    for (int a = i; a >= 0; --a) {
        auto x = P.t_coeff(a, i - a);
        if (x.is_zero()) continue;
        r += p1[static_cast<std::size_t>(a)] * p2[static_cast<std::size_t>(i - a)] * x;
    }
    return r;
}

// E(u(T)) for a ternary form E.
template <class F>
BinForm<F> evaluate_on_param(const TernForm<F>& E, const std::array<BinForm<F>, 3>& u) {
    return substitute_param(BiForm<F>::from_tern(E), u);
}

// Composition of a map given by three ternary forms with a parameterization.
template <class F>
std::array<BinForm<F>, 3> compose_map_param(const std::array<TernForm<F>, 3>& q, const std::array<BinForm<F>, 3>& u) {
    return {evaluate_on_param(q[0], u), evaluate_on_param(q[1], u), evaluate_on_param(q[2], u)};
}

// Substitute X_i -> G_i(Y) where the G_i share a degree.
template <class F>
TernForm<F> compose_forms(const TernForm<F>& f, const std::array<TernForm<F>, 3>& g) {
    const int n = f.degree();
    const int e = g[0].degree();
    std::array<std::vector<TernForm<F>>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i) pw[i] = detail::powers(g[i], n, TernForm<F>::constant(F(1)));
    TernForm<F> r(n * e);
    for (const auto& [ex, c] : f.terms())
        r += c * (pw[0][static_cast<std::size_t>(ex[0])] * pw[1][static_cast<std::size_t>(ex[1])] *
                  pw[2][static_cast<std::size_t>(ex[2])]);
    return r;
}

template <class F>
F evaluate(const TernForm<F>& f, const ProjPoint<F>& p) {
    return f.eval(p.coords());
}

template <class F>
bool proportional(const TernForm<F>& a, const TernForm<F>& b) {
    return a.degree() == b.degree() && a.normalized() == b.normalized();
}
template <class F>
bool proportional(const BinForm<F>& a, const BinForm<F>& b) {
    return a.degree() == b.degree() && a.normalized() == b.normalized();
}
template <class F>
bool proportional(const BiForm<F>& a, const BiForm<F>& b) {
    return a.tdeg() == b.tdeg() && a.xdeg() == b.xdeg() && a.normalized() == b.normalized();
}

// Triple of binary forms, as used for parameterizations.
template <class F>
using BinTriple = std::array<BinForm<F>, 3>;

template <class F>
BinForm<F> gcd_triple(const BinTriple<F>& u) {
    return bin_gcd(bin_gcd(u[0], u[1]), u[2]);
}

}  // namespace conics
