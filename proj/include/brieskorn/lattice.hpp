#pragma once

// Combinatorics of the Reeb period lattice of a Brieskorn manifold.
//
// Periods are measured in units of pi/2 throughout: the flow returns on the
// k-th coordinate after p such units exactly when a_k divides p, so closed
// orbit families are indexed by plain integer divisibility.  The second half
// of this header is the admissible-tuple search: nondecreasing integer tuples
// (p_1, ..., p_k) with every p_i > k+8 and sum(1/p_i) = 1/2 exactly, returned
// as full tuples (2,2,2,p_1,...,p_k).  The inverse sum of such a tuple is 2,
// an integer, which is what makes the standard equivariant trivialization of
// the ambient tangent bundle available.

#include <cstdint>
#include <optional>
#include <vector>

#include "brieskorn/exponent_tuple.hpp"
#include "brieskorn/rational.hpp"

namespace brieskorn {

// A closed Reeb orbit family of period p*pi/2: the points whose coordinates
// outside `participating` vanish.  Nonempty iff at least 2 indices take part.
struct MorseBottFamily {
    std::int64_t p;                    // period in units of pi/2
    std::vector<int> participating;    // indices k with a_k | p
    ExponentTuple subtuple;            // exponents at the participating indices
    int dim;                           // 2*|participating| - 3, always odd
};

inline std::vector<int> participating_set(const ExponentTuple& a, std::int64_t p) {
    if (p < 1) throw DomainError("period must be >= 1");
    std::vector<int> out;
    const auto& e = a.exponents();
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (p % e[k] == 0) out.push_back(static_cast<int>(k));
    }
    return out;
}

// One family per p in [1, p_max] with at least two participating indices,
// in order of increasing p.
inline std::vector<MorseBottFamily> morse_bott_families(const ExponentTuple& a, std::int64_t p_max) {
    if (p_max < 1) throw DomainError("p_max must be >= 1");
    std::vector<MorseBottFamily> out;
    for (std::int64_t p = 1; p <= p_max; ++p) {
        auto part = participating_set(a, p);
        if (part.size() < 2) continue;
        std::vector<std::int64_t> sub;
        sub.reserve(part.size());
        for (int k : part) sub.push_back(a.exponents()[static_cast<std::size_t>(k)]);
        int dim = 2 * static_cast<int>(part.size()) - 3;
        out.push_back(MorseBottFamily{p, std::move(part), ExponentTuple(std::move(sub)), dim});
    }
    return out;
}

namespace detail {

inline void tuple_search_dfs(int slots, std::int64_t lo, std::int64_t p_bound, const Rational& target,
                             std::vector<std::int64_t>& acc, std::vector<ExponentTuple>& out) {
    if (slots == 0) {
        if (target.is_zero()) {
            std::vector<std::int64_t> full{2, 2, 2};
            full.insert(full.end(), acc.begin(), acc.end());
            out.emplace_back(std::move(full));
        }
        return;
    }
    if (!target.is_positive()) return;
    // 1/p <= target forces p >= 1/target; slots/p >= target forces p <= slots/target.
    Int128 p_lo = (Rational(1) / target).ceil();
    Int128 p_hi = (Rational(slots) / target).floor();
    if (p_lo < lo) p_lo = lo;
    if (p_hi > p_bound) p_hi = p_bound;
    for (Int128 p = p_lo; p <= p_hi; ++p) {
        acc.push_back(to_int64(p));
        tuple_search_dfs(slots - 1, acc.back(), p_bound, target - Rational(1, p), acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// All admissible tails of length k within (k+8, p_bound], canonicalized to
// nondecreasing order; an empty result is a valid answer.  Feasibility needs
// k/(k+9) >= 1/2, so nothing exists below k = 9; the smallest admissible
// family is (2,2,2) with nine 18's.
inline std::vector<ExponentTuple> search_exponent_tuples(int k, std::int64_t p_bound) {
    if (k < 1) throw DomainError("tail length must be >= 1");
    if (p_bound < 1) throw DomainError("p_bound must be >= 1");
    std::vector<ExponentTuple> out;
    std::vector<std::int64_t> acc;
    detail::tuple_search_dfs(k, static_cast<std::int64_t>(k) + 9, p_bound, Rational(1, 2), acc, out);
    return out;
}

// Smallest k whose search is nonempty, scanning upward; nullopt when the
// bound rules every k out (the candidate range (k+8, p_bound] empties once
// k+9 exceeds p_bound).
inline std::optional<int> minimal_feasible_k(std::int64_t p_bound) {
    for (int k = 1; k + 9 <= p_bound; ++k) {
        if (!search_exponent_tuples(k, p_bound).empty()) return k;
    }
    return std::nullopt;
}

}  // namespace brieskorn
