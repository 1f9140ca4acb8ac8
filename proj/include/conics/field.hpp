#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "conics/errors.hpp"

namespace conics {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw Error(ErrorCode::PreconditionViolated, "zero denominator");
        v_.canonicalize();
    }

    // Accepts "n" or "n/m" with optional sign.
    static Rational parse(std::string_view s) {
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0 || q.get_den() == 0)
            throw Error(ErrorCode::ParseError, "bad rational: " + std::string(s));
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Rational inverse() const {
        if (is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by zero");
        return Rational(mpq_class(1) / v_);
    }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

// Element of Z/pZ for an odd prime p. A value built from a plain integer has
// no modulus yet and adopts the modulus of whatever it is combined with.
class ModP {
public:
    ModP() = default;
    template <std::integral I>
    ModP(I n) : v_(static_cast<std::int64_t>(n)) {}  // NOLINT(google-explicit-constructor)
    ModP(std::int64_t v, std::uint64_t p) : p_(p) {
        if (p < 3) throw Error(ErrorCode::BadPrime, "modulus must be an odd prime");
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = r;
    }

    std::uint64_t modulus() const { return p_; }
    std::int64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    ModP inverse() const {
        if (is_zero()) throw Error(ErrorCode::BadPrime, "division by zero modulo p");
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw Error(ErrorCode::BadPrime, "cannot invert an integer without a modulus");
        }
        // Fermat: a^(p-2)
        std::uint64_t e = p_ - 2, base = static_cast<std::uint64_t>(v_), acc = 1;
        while (e) {
            if (e & 1) acc = mulmod(acc, base, p_);
            base = mulmod(base, base, p_);
            e >>= 1;
        }
        return ModP(static_cast<std::int64_t>(acc), p_);
    }
    std::string str() const { return std::to_string(v_); }

    friend ModP operator+(const ModP& a, const ModP& b) {
        auto p = common(a, b);
        if (p == 0) return ModP(a.v_ + b.v_);
        return ModP(static_cast<std::int64_t>((a.lift(p) + b.lift(p)) % p), p);
    }
    friend ModP operator-(const ModP& a) {
        if (a.p_ == 0) return ModP(-a.v_);
        return ModP(a.v_ == 0 ? 0 : static_cast<std::int64_t>(a.p_) - a.v_, a.p_);
    }
    friend ModP operator-(const ModP& a, const ModP& b) { return a + (-b); }
    friend ModP operator*(const ModP& a, const ModP& b) {
        auto p = common(a, b);
        if (p == 0) return ModP(a.v_ * b.v_);
        return ModP(static_cast<std::int64_t>(mulmod(a.lift(p), b.lift(p), p)), p);
    }
    friend ModP operator/(const ModP& a, const ModP& b) {
        if (b.is_zero()) throw Error(ErrorCode::BadPrime, "division by zero modulo p");
        auto p = common(a, b);
        if (p == 0) {
            if (b.v_ == 1 || b.v_ == -1) return ModP(a.v_ * b.v_);
            throw Error(ErrorCode::BadPrime, "cannot divide integers without a modulus");
        }
        return a * ModP(b.v_, p).inverse();
    }
    ModP& operator+=(const ModP& o) { return *this = *this + o; }
    ModP& operator-=(const ModP& o) { return *this = *this - o; }
    ModP& operator*=(const ModP& o) { return *this = *this * o; }
    ModP& operator/=(const ModP& o) { return *this = *this / o; }
    friend bool operator==(const ModP& a, const ModP& b) {
        auto p = common(a, b);
        if (p == 0) return a.v_ == b.v_;
        return a.lift(p) == b.lift(p);
    }
    friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.str(); }

private:
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    static std::uint64_t common(const ModP& a, const ModP& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw Error(ErrorCode::BadPrime, "mixed moduli");
        return a.p_ ? a.p_ : b.p_;
    }
    std::uint64_t lift(std::uint64_t p) const {
        std::int64_t r = v_ % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r);
    }

    std::int64_t v_ = 0;
    std::uint64_t p_ = 0;
};

template <class F>
concept FieldLike = requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
    F(0);
    F(1);
};

template <class F>
inline constexpr bool is_rational_v = std::is_same_v<F, Rational>;

// Maps a rational into F_p; throws BadPrime when p divides the denominator.
inline ModP reduce_mod(const Rational& r, std::uint64_t p) {
    mpz_class P(std::to_string(p));
    mpz_class n = r.num() % P, d = r.den() % P;
    if (n < 0) n += P;
    if (d == 0) throw Error(ErrorCode::BadPrime, "prime divides a denominator");
    return ModP(static_cast<std::int64_t>(n.get_si()), p) / ModP(static_cast<std::int64_t>(d.get_si()), p);
}

}  // namespace conics
