#pragma once

// Exact rational arithmetic on 128-bit integers.  Every operation is
// overflow-checked and throws instead of wrapping; there is no floating
// point anywhere in the library.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "brieskorn/errors.hpp"

namespace brieskorn {

using Int128 = __int128;

namespace detail {

inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
    return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

inline Int128 checked_neg(Int128 a) { return checked_sub(0, a); }

inline Int128 abs128(Int128 a) { return a < 0 ? checked_neg(a) : a; }

inline Int128 gcd128(Int128 a, Int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

inline std::string to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

inline std::int64_t to_int64(Int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in 64 bits: " + to_string(v));
    return static_cast<std::int64_t>(v);
}

// Reduced fraction num/den with den > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Int128 n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(Int128 n, Int128 d) : num_(n), den_(d) { normalize(); }

    // Accepts "n" or "n/d".
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    Int128 num() const { return num_; }
    Int128 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }

    Int128 floor() const {
        Int128 q = num_ / den_;
        return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
    }
    Int128 ceil() const {
        Int128 q = num_ / den_;
        return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int128 g = detail::gcd128(a.den_, b.den_);
        Int128 bd = b.den_ / g;
        Int128 num = detail::checked_add(detail::checked_mul(a.num_, bd),
                                         detail::checked_mul(b.num_, a.den_ / g));
        return Rational(num, detail::checked_mul(a.den_, bd));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator-(const Rational& a) { return Rational(detail::checked_neg(a.num_), a.den_); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int128 g1 = detail::gcd128(a.num_, b.den_);
        Int128 g2 = detail::gcd128(b.num_, a.den_);
        return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                        detail::checked_mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Int128 lhs = detail::checked_mul(a.num_, b.den_);
        Int128 rhs = detail::checked_mul(b.num_, a.den_);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (den_ == 1) return brieskorn::to_string(num_);
        return brieskorn::to_string(num_) + "/" + brieskorn::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  private:
    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = detail::checked_neg(num_);
            den_ = detail::checked_neg(den_);
        }
        Int128 g = detail::gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static Int128 parse_int(std::string_view s) {
        if (s.empty()) throw DomainError("empty integer literal");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw DomainError("bad integer literal '" + std::string(s) + "'");
        Int128 v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw DomainError("bad integer literal '" + std::string(s) + "'");
            v = detail::checked_add(detail::checked_mul(v, 10), s[i] - '0');
        }
        return neg ? detail::checked_neg(v) : v;
    }

    Int128 num_;
    Int128 den_;
};

}  // namespace brieskorn
