#pragma once

// Index formulas for Reeb and Hamiltonian orbits, all in exact arithmetic.
//
// The basic building block is the rotation index floor(y) + ceil(y) of the
// path t -> e^{ict} on [0,T] with y = cT/2pi.  For the Brieskorn Reeb flow
// the normalized period x = 2t/pi turns the orbit index into the integer
// valued function
//
//     f_a(x) = sum_k (floor(x/a_k) + ceil(x/a_k)) - (floor(x) + ceil(x)),
//
// whose minimum m(a) over x > 0 exists whenever sum(1/a_k) >= 1.  f_a jumps
// only at positive integers and is constant on the open unit intervals in
// between, so the minimum is found by scanning integers and interval
// midpoints.  The scan is finite: for s = sum(1/a_k) > 1 the lower bound
// f_a(x) > 2(s-1)x - n - 1 rules out large x, and for s = 1 the function is
// periodic with period L = lcm(a_k).

#include <cstdint>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/exponent_tuple.hpp"
#include "brieskorn/half_integer.hpp"
#include "brieskorn/rational.hpp"

namespace brieskorn {

inline std::int64_t floor_plus_ceil(const Rational& x) {
    return to_int64(detail::checked_add(x.floor(), x.ceil()));
}

// Robbin-Salamon index of the rotation t -> e^{ict} over one duration unit
// of 2pi; the index depends only on y = speed * duration.
inline HalfInt rs_index_rotation(const Rational& speed, const Rational& duration) {
    if (speed.is_zero()) throw DomainError("rotation speed must be nonzero");
    if (!duration.is_positive()) throw DomainError("rotation duration must be positive");
    return HalfInt::whole(floor_plus_ceil(speed * duration));
}

// Paths diag(e^{f(t)}, e^{-f(t)}) never cross the identity eigenvalue 1
// transversally with signature, so their index vanishes; the same applies to
// the trivially-framed cylinder factor.
constexpr HalfInt rs_index_hyperbolic() { return HalfInt{0}; }

// Conley-Zehnder index of the (possibly fractional) Brieskorn Reeb orbit of
// normalized period x = 2t/pi, with respect to the standard trivialization.
inline HalfInt cz_brieskorn(const ExponentTuple& a, const Rational& x) {
    if (!x.is_positive()) throw DomainError("normalized period must be positive");
    std::int64_t total = 0;
    for (std::int64_t ak : a.exponents()) total += floor_plus_ceil(x / Rational(ak));
    total -= floor_plus_ceil(x);
    return HalfInt::whole(total);
}

// f_a tabulated over (0, scan_end]: values at the integer breakpoints and on
// the open unit intervals between them (interval_values[j] covers (j, j+1),
// starting with (0, 1)).
struct PiecewiseProfile {
    std::vector<std::int64_t> breakpoints;      // 1, 2, ..., scan_end
    std::vector<std::int64_t> point_values;     // f_a at each breakpoint
    std::vector<std::int64_t> interval_values;  // f_a on each preceding open interval
};

inline PiecewiseProfile piecewise_profile(const ExponentTuple& a, std::int64_t scan_end) {
    if (scan_end < 1) throw DomainError("scan_end must be >= 1");
    PiecewiseProfile prof;
    for (std::int64_t j = 1; j <= scan_end; ++j) {
        prof.breakpoints.push_back(j);
        prof.interval_values.push_back(cz_brieskorn(a, Rational(2 * j - 1, 2)).as_integer());
        prof.point_values.push_back(cz_brieskorn(a, Rational(j)).as_integer());
    }
    return prof;
}

struct MinIndexResult {
    HalfInt value;     // m(a)
    Rational argmin;   // first grid point attaining it (midpoint for intervals)
};

// Minimum of f_a over x > 0.  Throws UnboundedBelow when sum(1/a_k) < 1.
inline MinIndexResult min_index(const ExponentTuple& a) {
    const Rational s = a.inverse_sum();
    if (s < Rational(1))
        throw UnboundedBelow("f_a is unbounded below: sum(1/a_k) = " + s.to_string() + " < 1");
    const Rational growth = (s - Rational(1)) * Rational(2);  // slope of the lower bound
    const std::int64_t L = a.big_l();

    bool have_best = false;
    std::int64_t best = 0;
    Rational witness;
    auto consider = [&](const Rational& x) {
        std::int64_t v = cz_brieskorn(a, x).as_integer();
        if (!have_best || v < best) {
            have_best = true;
            best = v;
            witness = x;
        }
    };

    if (growth.is_zero()) {
        // Periodic case: f_a(x + L) = f_a(x), one period suffices.
        for (std::int64_t j = 1; j <= L; ++j) {
            consider(Rational(2 * j - 1, 2));
            consider(Rational(j));
        }
    } else {
        // Initial pass over (0, L], then extend while the linear lower bound
        // still allows an improvement: stop at x once
        // 2(s-1)x - n - 1 >= best, since f_a(x') > that bound for x' >= x.
        Rational x(1, 2);
        const Rational step(1, 2);
        const Rational offset(a.n() + 1);
        while (true) {
            if (x > Rational(L) && have_best && growth * x - offset >= Rational(best)) break;
            consider(x);
            x += step;
        }
    }
    return MinIndexResult{HalfInt::whole(best), witness};
}

// Lower SFT index lSFT = mu - dim ker / 2 + (n - 3), where n is the complex
// dimension parameter of the ambient contact manifold (which may exceed the
// base by one when the geometry is a product with R x S^1 -- callers pass
// the ambient value).
inline HalfInt lsft_index(int ambient_dim_n, HalfInt mu, int kernel_dim) {
    if (kernel_dim < 0) throw DomainError("kernel dimension must be >= 0");
    return HalfInt::halves(mu.twice - kernel_dim + 2 * (static_cast<std::int64_t>(ambient_dim_n) - 3));
}

// Reduced Conley-Zehnder index |gamma| = mu + n - 3; agrees with the lower
// SFT index exactly when the linearized return map has trivial kernel, and
// the two are never substituted for one another here.
inline HalfInt reduced_cz_index(int ambient_dim_n, HalfInt mu) {
    return lsft_index(ambient_dim_n, mu, 0);
}

// min{m(a) - 3/2, n - 5/2}: a positive value certifies that every short
// Reeb orbit on the smoothed quotient boundary has positive lower SFT index
// (the strong ADC certificate, valid under m(a) >= 2 and n >= 3).
inline HalfInt adc_bound(const ExponentTuple& a) {
    HalfInt m = min_index(a).value;
    return min(HalfInt::halves(m.twice - 3), HalfInt::halves(2 * static_cast<std::int64_t>(a.n()) - 5));
}

// Index shift when a Reeb orbit is realized as a Hamiltonian orbit of
// h(e^r): +1/2 for convex h (h'' > 0), -1/2 for concave, and an overall sign
// flip when h' < 0 reverses the orbit.
inline HalfInt hamiltonian_shift(HalfInt mu, int slope_sign, int convexity_sign) {
    if (slope_sign * slope_sign != 1 || convexity_sign * convexity_sign != 1)
        throw DomainError("signs must be +1 or -1");
    return HalfInt::halves(slope_sign * mu.twice + convexity_sign);
}

// Constant orbit of a C^2-small Hamiltonian at a critical point of Morse
// index Ind: mu_CZ = n - Ind.
inline HalfInt cz_from_morse(int morse_index, int half_dim_n) {
    if (morse_index < 0 || morse_index > 2 * half_dim_n)
        throw DomainError("Morse index outside [0, 2n]");
    return HalfInt::whole(static_cast<std::int64_t>(half_dim_n) - morse_index);
}

// Crossing an orbit family with the trivially-framed circle factor adds the
// boundary half-crossing: mu(MB x S^1) = mu(MB) + 1/2.
constexpr HalfInt cz_cross_circle(HalfInt mu_mb) { return HalfInt{mu_mb.twice + 1}; }

}  // namespace brieskorn
