#pragma once

// Finite graded commutative algebras over Z2, given by a basis and a
// multiplication table, and the idempotent bookkeeping on top of them:
//
//     I(R) = { x : x^2 - x is 0 or the unit },
//
// an additive group (char 2 makes x -> x^2 + x linear once the algebra is
// commutative), positive idempotent index |I|/2, and direct products
// modeling boundary connected sums, under which |I| is multiplicative.
// Basis vectors are bitmasks, so everything stays exact and the hard cap on
// enumeration keeps brute force honest and fast.
//
// Algebra text format: a header line
//     dim n; unit <bits>; degrees d0 d1 ...; h1 c0 c1 ...
// (degrees and h1 optional, defaulting to 0 and trivial; each h1 class is a
// comma-separated integer vector), then one line per ordered basis pair
//     i j : <bits>
// with every product vector written little-endian by basis index.

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brieskorn/errors.hpp"

namespace brieskorn {

class GradedAlgebraF2 {
  public:
    GradedAlgebraF2(int dim, std::uint32_t unit, std::vector<std::int64_t> degrees,
                    std::vector<std::vector<std::int64_t>> h1_classes, std::vector<std::uint32_t> table,
                    std::vector<std::string> names = {})
        : dim_(dim),
          unit_(unit),
          degrees_(std::move(degrees)),
          h1_(std::move(h1_classes)),
          table_(std::move(table)),
          names_(std::move(names)) {
        if (dim_ < 1 || dim_ > 30) throw DomainError("algebra dimension must be in [1, 30]");
        std::uint32_t all = mask();
        if (unit_ == 0 || (unit_ & ~all) != 0) throw DomainError("unit vector out of range");
        if (degrees_.size() != static_cast<std::size_t>(dim_)) throw DomainError("need one degree per basis vector");
        if (h1_.size() != static_cast<std::size_t>(dim_)) throw DomainError("need one h1 class per basis vector");
        for (const auto& c : h1_)
            if (c.size() != h1_[0].size()) throw DomainError("h1 classes must have uniform rank");
        if (table_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_))
            throw DomainError("multiplication table must have dim^2 entries");
        for (std::uint32_t v : table_)
            if ((v & ~all) != 0) throw DomainError("product vector out of range");
        if (names_.empty()) {
            for (int i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i));
        }
        if (names_.size() != static_cast<std::size_t>(dim_)) throw DomainError("need one name per basis vector");
    }

    int dim() const { return dim_; }
    std::uint32_t mask() const { return dim_ == 32 ? ~0u : (1u << dim_) - 1; }
    std::uint32_t unit() const { return unit_; }
    std::int64_t degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& h1_class(int i) const { return h1_[static_cast<std::size_t>(i)]; }
    std::size_t h1_rank() const { return h1_[0].size(); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    std::uint32_t basis_product(int i, int j) const {
        return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j)];
    }

    bool h1_trivial(int i) const {
        for (std::int64_t c : h1_[static_cast<std::size_t>(i)])
            if (c != 0) return false;
        return true;
    }

    // Bilinear extension of the basis table.
    std::uint32_t product(std::uint32_t x, std::uint32_t y) const {
        std::uint32_t acc = 0;
        for (std::uint32_t xs = x; xs; xs &= xs - 1) {
            int i = __builtin_ctz(xs);
            for (std::uint32_t ys = y; ys; ys &= ys - 1) acc ^= basis_product(i, __builtin_ctz(ys));
        }
        return acc;
    }

    // Degree of the unit; requires the unit's support to be homogeneous.
    std::int64_t unit_degree() const {
        std::optional<std::int64_t> deg;
        for (std::uint32_t s = unit_; s; s &= s - 1) {
            std::int64_t d = degree(__builtin_ctz(s));
            if (deg && *deg != d) throw GradingViolation("unit is not homogeneous");
            deg = d;
        }
        return *deg;
    }

    std::string bits(std::uint32_t x) const {
        std::string s(static_cast<std::size_t>(dim_), '0');
        for (int i = 0; i < dim_; ++i)
            if (x >> i & 1) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

  private:
    int dim_;
    std::uint32_t unit_;
    std::vector<std::int64_t> degrees_;
    std::vector<std::vector<std::int64_t>> h1_;
    std::vector<std::uint32_t> table_;  // row-major basis products
    std::vector<std::string> names_;
};

namespace detail {

inline std::vector<std::int64_t> h1_sum(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace detail

// Exhaustively checks unitality, commutativity, associativity on the basis,
// and that degrees add (relative to the unit degree) and h1 classes add
// across the table; the unit's support must be homogeneous with trivial h1.
// Returns the unit degree.
inline std::int64_t validate(const GradedAlgebraF2& alg) {
    const int dim = alg.dim();
    std::int64_t ud = alg.unit_degree();
    for (std::uint32_t s = alg.unit(); s; s &= s - 1) {
        int i = __builtin_ctz(s);
        if (!alg.h1_trivial(i))
            throw GradingViolation("unit supported on basis vector " + alg.name(i) + " with nontrivial h1 class");
    }
    for (int i = 0; i < dim; ++i) {
        if (alg.product(alg.unit(), 1u << i) != (1u << i))
            throw BadUnit("unit * " + alg.name(i) + " != " + alg.name(i));
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (alg.basis_product(i, j) != alg.basis_product(j, i))
                throw NotCommutative(alg.name(i) + " * " + alg.name(j) + " != " + alg.name(j) + " * " + alg.name(i));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (alg.product(alg.basis_product(i, j), 1u << k) != alg.product(1u << i, alg.basis_product(j, k)))
                    throw NotAssociative("(" + alg.name(i) + " " + alg.name(j) + ") " + alg.name(k) + " != " +
                                         alg.name(i) + " (" + alg.name(j) + " " + alg.name(k) + ")");
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            std::uint32_t prod = alg.basis_product(i, j);
            auto h1 = detail::h1_sum(alg.h1_class(i), alg.h1_class(j));
            for (std::uint32_t s = prod; s; s &= s - 1) {
                int k = __builtin_ctz(s);
                if (alg.degree(k) != alg.degree(i) + alg.degree(j) - ud)
                    throw GradingViolation("degree of " + alg.name(k) + " in " + alg.name(i) + " * " + alg.name(j) +
                                           " breaks deg(xy) = deg x + deg y - " + std::to_string(ud));
                if (alg.h1_class(k) != h1)
                    throw GradingViolation("h1 class of " + alg.name(k) + " in " + alg.name(i) + " * " + alg.name(j) +
                                           " does not add");
            }
        }
    }
    return ud;
}

struct IdempotentGroup {
    std::vector<std::uint32_t> elements;  // ascending
    std::size_t size() const { return elements.size(); }
};

// Enumerates all 2^dim vectors and keeps those with x^2 + x in {0, unit}.
// Commutativity makes squaring additive over Z2 (cross terms cancel in
// pairs), so x^2 is the XOR of the diagonal table entries over the support
// of x; the enumeration below uses that.  The subgroup structure of the
// result -- closure under addition and power-of-2 size -- is asserted before
// returning.
inline IdempotentGroup idempotent_group(const GradedAlgebraF2& alg, int dim_cap = 24) {
    if (alg.dim() > dim_cap)
        throw DimensionTooLarge("algebra dimension " + std::to_string(alg.dim()) + " exceeds cap " +
                                std::to_string(dim_cap));
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = i + 1; j < alg.dim(); ++j)
            if (alg.basis_product(i, j) != alg.basis_product(j, i))
                throw NotCommutative("idempotent enumeration requires a commutative table");

    std::vector<std::uint32_t> squares(static_cast<std::size_t>(alg.dim()));
    for (int i = 0; i < alg.dim(); ++i) squares[static_cast<std::size_t>(i)] = alg.basis_product(i, i);

    IdempotentGroup group;
    const std::uint64_t count = 1ull << alg.dim();
    for (std::uint64_t x = 0; x < count; ++x) {
        std::uint32_t sq = 0;
        for (std::uint32_t s = static_cast<std::uint32_t>(x); s; s &= s - 1)
            sq ^= squares[static_cast<std::size_t>(__builtin_ctz(s))];
        std::uint32_t defect = sq ^ static_cast<std::uint32_t>(x);
        if (defect == 0 || defect == alg.unit()) group.elements.push_back(static_cast<std::uint32_t>(x));
    }

    // subgroup assertions: 0 and the unit belong, and the distinct elements
    // fill the span of their leading-bit pivot basis exactly
    if (group.elements.empty() || group.elements[0] != 0) throw Error("idempotent group does not contain 0");
    bool has_unit = false;
    std::uint32_t pivot[32] = {};
    std::size_t rank = 0;
    for (std::uint32_t v : group.elements) {
        has_unit = has_unit || v == alg.unit();
        std::uint32_t r = v;
        while (r) {
            int lead = 31 - __builtin_clz(r);
            if (!pivot[lead]) {
                pivot[lead] = r;
                ++rank;
                break;
            }
            r ^= pivot[lead];
        }
    }
    if (!has_unit) throw Error("idempotent group does not contain the unit");
    if ((1ull << rank) != group.elements.size())
        throw Error("idempotent group is not closed under addition");
    return group;
}

// i(W) = |I| / |{0, unit}| = |I| / 2.
inline std::int64_t positive_idempotent_index(const GradedAlgebraF2& alg, int dim_cap = 24) {
    return static_cast<std::int64_t>(idempotent_group(alg, dim_cap).size() / 2);
}

// Direct product with componentwise multiplication, unit (1,1) and scalar
// line the diagonal (the modeled sum is connected, so H^0 stays one line).
// The h1 grading groups concatenate.
inline GradedAlgebraF2 product_ring(const GradedAlgebraF2& r1, const GradedAlgebraF2& r2) {
    if (r1.unit_degree() != r2.unit_degree())
        throw DegreeMismatch("units live in degrees " + std::to_string(r1.unit_degree()) + " and " +
                             std::to_string(r2.unit_degree()));
    int dim = r1.dim() + r2.dim();
    if (dim > 30) throw DimensionTooLarge("product dimension " + std::to_string(dim) + " exceeds 30");
    std::vector<std::int64_t> degrees;
    std::vector<std::vector<std::int64_t>> h1;
    std::vector<std::string> names;
    std::size_t rank = r1.h1_rank() + r2.h1_rank();
    for (int i = 0; i < r1.dim(); ++i) {
        degrees.push_back(r1.degree(i));
        auto c = r1.h1_class(i);
        c.resize(rank, 0);
        h1.push_back(std::move(c));
        names.push_back("l." + r1.name(i));
    }
    for (int i = 0; i < r2.dim(); ++i) {
        degrees.push_back(r2.degree(i));
        std::vector<std::int64_t> c(r1.h1_rank(), 0);
        c.insert(c.end(), r2.h1_class(i).begin(), r2.h1_class(i).end());
        h1.push_back(std::move(c));
        names.push_back("r." + r2.name(i));
    }
    std::vector<std::uint32_t> table(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0);
    auto set = [&](int i, int j, std::uint32_t v) {
        table[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)] = v;
    };
    for (int i = 0; i < r1.dim(); ++i)
        for (int j = 0; j < r1.dim(); ++j) set(i, j, r1.basis_product(i, j));
    for (int i = 0; i < r2.dim(); ++i)
        for (int j = 0; j < r2.dim(); ++j) set(r1.dim() + i, r1.dim() + j, r2.basis_product(i, j) << r1.dim());
    std::uint32_t unit = r1.unit() | (r2.unit() << r1.dim());
    return GradedAlgebraF2(dim, unit, std::move(degrees), std::move(h1), std::move(table), std::move(names));
}

namespace detail {

inline std::uint32_t parse_bits(const std::string& s, int dim, const std::string& source, int line) {
    if (s.size() != static_cast<std::size_t>(dim))
        throw ParseError(source, line, "bit vector '" + s + "' must have exactly " + std::to_string(dim) + " bits");
    std::uint32_t v = 0;
    for (int i = 0; i < dim; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        if (c == '1')
            v |= 1u << i;
        else if (c != '0')
            throw ParseError(source, line, "bit vector '" + s + "' has a character other than 0/1");
    }
    return v;
}

inline std::vector<std::int64_t> parse_h1_entry(const std::string& s, const std::string& source, int line) {
    std::vector<std::int64_t> out;
    std::istringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoll(part));
        } catch (...) {
            throw ParseError(source, line, "bad h1 class '" + s + "'");
        }
    }
    if (out.empty()) throw ParseError(source, line, "empty h1 class");
    return out;
}

}  // namespace detail

inline GradedAlgebraF2 parse_algebra(std::istream& in, const std::string& source) {
    std::string header;
    int lineno = 0;
    while (std::getline(in, header)) {
        ++lineno;
        if (!header.empty() && header[0] != '#' && header.find_first_not_of(" \t") != std::string::npos) break;
    }
    if (header.empty()) throw ParseError(source, lineno, "missing header line");

    int dim = -1;
    std::optional<std::uint32_t> unit;
    std::vector<std::int64_t> degrees;
    std::vector<std::vector<std::int64_t>> h1;
    std::istringstream clauses(header);
    std::string clause;
    while (std::getline(clauses, clause, ';')) {
        std::istringstream cs(clause);
        std::string key;
        cs >> key;
        if (key.empty()) continue;
        if (key == "dim") {
            if (!(cs >> dim) || dim < 1) throw ParseError(source, lineno, "bad dim clause");
        } else if (key == "unit") {
            std::string bits;
            if (!(cs >> bits) || dim < 0) throw ParseError(source, lineno, "unit clause needs dim first");
            unit = detail::parse_bits(bits, dim, source, lineno);
        } else if (key == "degrees") {
            std::int64_t d;
            while (cs >> d) degrees.push_back(d);
        } else if (key == "h1") {
            std::string entry;
            while (cs >> entry) h1.push_back(detail::parse_h1_entry(entry, source, lineno));
        } else {
            throw ParseError(source, lineno, "unknown header clause '" + key + "'");
        }
    }
    if (dim < 1) throw ParseError(source, lineno, "header must declare dim");
    if (!unit) throw ParseError(source, lineno, "header must declare unit");
    if (degrees.empty()) degrees.assign(static_cast<std::size_t>(dim), 0);
    if (degrees.size() != static_cast<std::size_t>(dim)) throw ParseError(source, lineno, "degrees count != dim");
    if (h1.empty()) h1.assign(static_cast<std::size_t>(dim), {0});
    if (h1.size() != static_cast<std::size_t>(dim)) throw ParseError(source, lineno, "h1 count != dim");
    for (const auto& c : h1)
        if (c.size() != h1[0].size()) throw ParseError(source, lineno, "h1 classes must have uniform rank");

    std::vector<std::uint32_t> table(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0);
    std::vector<bool> seen(table.size(), false);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ls(line);
        int i, j;
        std::string colon, bits, extra;
        if (!(ls >> i >> j >> colon >> bits) || colon != ":" || (ls >> extra))
            throw ParseError(source, lineno, "expected 'i j : <bits>'");
        if (i < 0 || i >= dim || j < 0 || j >= dim) throw ParseError(source, lineno, "basis index out of range");
        std::size_t idx = static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j);
        if (seen[idx]) throw ParseError(source, lineno, "duplicate product line for pair");
        seen[idx] = true;
        table[idx] = detail::parse_bits(bits, dim, source, lineno);
    }
    for (std::size_t idx = 0; idx < seen.size(); ++idx) {
        if (!seen[idx])
            throw ParseError(source, lineno,
                             "missing product line for pair " + std::to_string(idx / static_cast<std::size_t>(dim)) +
                                 " " + std::to_string(idx % static_cast<std::size_t>(dim)));
    }
    return GradedAlgebraF2(dim, *unit, std::move(degrees), std::move(h1), std::move(table));
}

}  // namespace brieskorn
