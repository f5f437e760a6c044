#pragma once

// Brieskorn exponent tuples a = (a_0, ..., a_n) together with the derived
// constants every other module needs: n, L = lcm(a_k) and the exact
// inverse sum s = sum(1/a_k).

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/rational.hpp"

namespace brieskorn {

class ExponentTuple {
  public:
    explicit ExponentTuple(std::vector<std::int64_t> exponents) : exponents_(std::move(exponents)) {
        if (exponents_.size() < 2) throw DomainError("exponent tuple needs at least two entries");
        for (std::int64_t a : exponents_) {
            if (a < 2) throw DomainError("exponent " + std::to_string(a) + " < 2");
        }
        Int128 l = 1;
        Rational s = 0;
        for (std::int64_t a : exponents_) {
            l = detail::checked_mul(l / detail::gcd128(l, a), a);
            s += Rational(1, a);
        }
        big_l_ = to_int64(l);
        inverse_sum_ = s;
    }

    // Accepts comma-separated entries with an optional repetition suffix,
    // e.g. "2,2,2,18x9" for (2,2,2) followed by nine 18's.
    static ExponentTuple parse(std::string_view text) {
        std::vector<std::int64_t> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            std::string_view token = text.substr(pos, comma - pos);
            if (token.empty()) throw DomainError("empty entry in exponent tuple '" + std::string(text) + "'");
            std::size_t x = token.find('x');
            std::int64_t count = 1;
            if (x != std::string_view::npos) {
                count = parse_entry(token.substr(x + 1), text);
                token = token.substr(0, x);
            }
            if (count < 1) throw DomainError("repetition count must be positive in '" + std::string(text) + "'");
            std::int64_t value = parse_entry(token, text);
            out.insert(out.end(), static_cast<std::size_t>(count), value);
            if (comma == text.size()) break;
            pos = comma + 1;
        }
        return ExponentTuple(std::move(out));
    }

    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    std::size_t size() const { return exponents_.size(); }
    int n() const { return static_cast<int>(exponents_.size()) - 1; }
    std::int64_t big_l() const { return big_l_; }
    const Rational& inverse_sum() const { return inverse_sum_; }

    ExponentTuple sorted() const {
        auto e = exponents_;
        std::sort(e.begin(), e.end());
        return ExponentTuple(std::move(e));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(exponents_[i]);
        }
        return s;
    }

    friend bool operator==(const ExponentTuple& a, const ExponentTuple& b) {
        return a.exponents_ == b.exponents_;
    }

  private:
    static std::int64_t parse_entry(std::string_view token, std::string_view whole) {
        if (token.empty()) throw DomainError("bad exponent tuple '" + std::string(whole) + "'");
        std::int64_t v = 0;
        for (char c : token) {
            if (c < '0' || c > '9') throw DomainError("bad exponent tuple '" + std::string(whole) + "'");
            if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, c - '0', &v))
                throw OverflowError("exponent out of range in '" + std::string(whole) + "'");
        }
        return v;
    }

    std::vector<std::int64_t> exponents_;
    std::int64_t big_l_ = 1;
    Rational inverse_sum_;
};

}  // namespace brieskorn
