#pragma once

// Indices (Conley-Zehnder / Robbin-Salamon / lower SFT) are exact
// half-integers.  They are stored doubled so that comparisons like
// "bound > 0" never touch floating point.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "brieskorn/errors.hpp"

namespace brieskorn {

struct HalfInt {
    std::int64_t twice = 0;

    static constexpr HalfInt whole(std::int64_t k) { return HalfInt{2 * k}; }
    static constexpr HalfInt halves(std::int64_t t) { return HalfInt{t}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }

    // Value as a plain integer; throws when the value is a strict half.
    std::int64_t as_integer() const {
        if (!is_integer()) throw DomainError("half-integer " + to_string() + " is not an integer");
        return twice / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    // Renders "k" for integers and "t/2" otherwise, e.g. "9", "15/2", "-3/2".
    std::string to_string() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    friend std::ostream& operator<<(std::ostream& os, HalfInt v) { return os << v.to_string(); }
};

inline HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }

}  // namespace brieskorn
