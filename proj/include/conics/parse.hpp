#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "conics/errors.hpp"
#include "conics/field.hpp"
#include "conics/polycore.hpp"

namespace conics {

// Variables in the order T1 T2 X1 X2 X3.
using ParsedPoly = SparsePoly<Rational, 5>;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ParsedPoly parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty input");
        auto p = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError, msg + " at column " + std::to_string(pos_ + 1), static_cast<int>(pos_ + 1));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || c == 'T' || c == 'X' || std::isdigit(static_cast<unsigned char>(c));
    }

    ParsedPoly expr() {
        auto acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    ParsedPoly term() {
        auto acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (peek('/')) {
                ++pos_;
                auto start = pos_;
                auto d = unary();
                if (d.is_zero()) {
                    pos_ = start;
                    fail("division by zero");
                }
                if (d.size() != 1 || d.lead().first != Exponent<5>{}) {
                    pos_ = start;
                    fail("division by a non-constant");
                }
                acc = d.lead().second.inverse() * acc;
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    ParsedPoly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    ParsedPoly power() {
        auto base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected a non-negative integer exponent");
            int e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 10000) fail("exponent too large");
                ++pos_;
            }
            auto r = ParsedPoly::constant(Rational(1));
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    ParsedPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ParsedPoly::constant(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (c == 'T' || c == 'X') {
            ++pos_;
            if (pos_ >= s_.size()) fail("expected variable index");
            char d = s_[pos_];
            int idx = -1;
            if (c == 'T' && (d == '1' || d == '2')) idx = d - '1';
            if (c == 'X' && d >= '1' && d <= '3') idx = 2 + (d - '1');
            if (idx < 0) fail(std::string("unknown variable ") + c + d);
            ++pos_;
            Exponent<5> e{};
            e[static_cast<std::size_t>(idx)] = 1;
            return ParsedPoly::monomial(e);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline void bidegree_of(const ParsedPoly& p, std::optional<int>& t, std::optional<int>& x) {
    for (const auto& [e, c] : p.terms()) {
        int et = e[0] + e[1], ex = e[2] + e[3] + e[4];
        if (t && *t != et) throw Error(ErrorCode::WrongDegree, "polynomial is not homogeneous in T");
        if (x && *x != ex) throw Error(ErrorCode::WrongDegree, "polynomial is not homogeneous in X");
        t = et;
        x = ex;
    }
}

}  // namespace detail

inline ParsedPoly parse_poly(std::string_view s) { return detail::Parser(s).parse(); }

inline BinForm<Rational> parse_bin(std::string_view s, std::optional<int> degree = std::nullopt) {
    auto p = parse_poly(s);
    std::optional<int> t, x;
    detail::bidegree_of(p, t, x);
    if (x && *x != 0) throw Error(ErrorCode::WrongDegree, "binary form may only use T1, T2");
    if (t && degree && *t != *degree)
        throw Error(ErrorCode::WrongDegree, "expected degree " + std::to_string(*degree));
    if (!t && !degree) throw Error(ErrorCode::WrongDegree, "degree of the zero form must be given");
    int n = t ? *t : *degree;
    BinForm<Rational> f(n);
    for (const auto& [e, c] : p.terms()) f.coeff(e[1]) = c;
    return f;
}

inline TernForm<Rational> parse_tern(std::string_view s, std::optional<int> degree = std::nullopt) {
    auto p = parse_poly(s);
    std::optional<int> t, x;
    detail::bidegree_of(p, t, x);
    if (t && *t != 0) throw Error(ErrorCode::WrongDegree, "ternary form may only use X1, X2, X3");
    if (x && degree && *x != *degree)
        throw Error(ErrorCode::WrongDegree, "expected degree " + std::to_string(*degree));
    if (!x && !degree) throw Error(ErrorCode::WrongDegree, "degree of the zero form must be given");
    SparsePoly<Rational, 3> q;
    for (const auto& [e, c] : p.terms()) q.add_term({e[2], e[3], e[4]}, c);
    return TernForm<Rational>(x ? *x : *degree, std::move(q));
}

inline BiForm<Rational> parse_bi(std::string_view s, std::optional<int> tdeg = std::nullopt,
                                 std::optional<int> xdeg = std::nullopt) {
    auto p = parse_poly(s);
    std::optional<int> t, x;
    detail::bidegree_of(p, t, x);
    if (t && tdeg && *t != *tdeg) throw Error(ErrorCode::WrongDegree, "unexpected T-degree");
    if (x && xdeg && *x != *xdeg) throw Error(ErrorCode::WrongDegree, "unexpected X-degree");
    if ((!t && !tdeg) || (!x && !xdeg)) throw Error(ErrorCode::WrongDegree, "bidegree of the zero form must be given");
    return BiForm<Rational>(t ? *t : *tdeg, x ? *x : *xdeg, p);
}

namespace detail {

template <class F, std::size_t N>
std::string format_terms(const SparsePoly<F, N>& p, const std::array<const char*, N>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string coef = c.str();
        bool neg = !coef.empty() && coef[0] == '-';
        if (neg) coef.erase(0, 1);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < N; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += coef;
        else if (coef == "1")
            out += mono;
        else
            out += coef + "*" + mono;
    }
    return out;
}

}  // namespace detail

template <class F>
std::string to_string(const BinForm<F>& f) {
    SparsePoly<F, 2> p;
    const int n = f.degree();
    for (int k = 0; k <= n; ++k) p.add_term({n - k, k}, f.coeff(k));
    return detail::format_terms<F, 2>(p, {"T1", "T2"});
}

template <class F>
std::string to_string(const TernForm<F>& f) {
    return detail::format_terms<F, 3>(f.poly(), {"X1", "X2", "X3"});
}

template <class F>
std::string to_string(const BiForm<F>& f) {
    return detail::format_terms<F, 5>(f.poly(), {"T1", "T2", "X1", "X2", "X3"});
}

}  // namespace conics
