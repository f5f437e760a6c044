#pragma once

// First page of the Morse-Bott spectral sequence computing the contractible
// sector of symplectic homology over Z2 for the quotient domain built from
// Sigma(a).  The contractible orbit families are exactly MB(p) x S^1, so for
// p > 0 the page reads
//
//     E1_{p,q} = H_{p+q-Delta(p)}(MB(p) x S^1; Z2),
//     Delta(p) = f_a(p) - (dim MB(p) - 1)/2,
//
// and the p = 0 column is an explicit input (ZeroColumnSpec): the indexing
// of the relative homology of the filling carries an ambiguous shift, so it
// is never guessed here, only copied.  Differentials are never computed --
// only rank-counting survival bounds, which is all the degree-wise
// lower/upper bounds on SH need.
//
// A page is complete within its degree window when the growth bound
// f_a(x) > 2(s-1)x - n - 1 (s = sum(1/a_k) > 1) proves that every family
// beyond p_max lands above the window; completeness_certificate records
// that.  For s <= 1 the family spectrum repeats forever and no finite scan
// is conclusive: pages are built but left uncertified.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/exponent_tuple.hpp"
#include "brieskorn/graded_dims.hpp"
#include "brieskorn/half_integer.hpp"
#include "brieskorn/homology_catalog.hpp"
#include "brieskorn/index_calc.hpp"
#include "brieskorn/lattice.hpp"

namespace brieskorn {

struct DegreeWindow {
    int lo = 0;
    int hi = 0;
};

// The p = 0 column.  The effective entry at (0, q) is dims[q + shift_convention],
// so a table indexed by absolute degree j together with shift n places j at
// q = j - n.  Defaults to the zero column.
struct ZeroColumnSpec {
    std::map<int, std::int64_t> dims;
    int shift_convention = 0;
};

struct E1Page {
    std::map<std::pair<int, int>, std::int64_t> entries;  // (p, q) -> dim, nonzero only
    std::map<int, std::string> column_provenance;         // p -> origin of the column
    DegreeWindow window;
    std::int64_t p_max = 0;
    bool completeness_certificate = false;

    std::int64_t at(int p, int q) const {
        auto it = entries.find({p, q});
        return it == entries.end() ? 0 : it->second;
    }
};

// Degree shift placing H_*(MB(p) x S^1) on the page:
// Delta = f_a(p) - (dim MB(p) - 1)/2, an integer since dim MB(p) is odd.
inline HalfInt delta_shift(const ExponentTuple& a, const MorseBottFamily& fam) {
    if (fam.participating != participating_set(a, fam.p))
        throw DomainError("family of period " + std::to_string(fam.p) + " does not belong to the tuple");
    std::int64_t f = cz_brieskorn(a, Rational(fam.p)).as_integer();
    return HalfInt::halves(2 * f - (fam.dim - 1));
}

struct ContributingFamilies {
    std::vector<MorseBottFamily> families;  // families whose degree span meets the window
    std::int64_t p_max = 0;                 // scan bound actually used
    bool certified = false;                 // true iff nothing beyond p_max can reach the window
    std::string warning;                    // set when certification is unavailable
};

// All families whose homology span [Delta, Delta + dim + 1] meets
// [d_lo, d_hi].  With s > 1 the bound Delta(p) > 2(s-1)p - 2n picks a p_max
// beyond which every family lies above the window; with s <= 1 one lcm
// period is scanned and the result is flagged uncertified.
inline ContributingFamilies contributing_families(const ExponentTuple& a, int d_lo, int d_hi) {
    if (d_lo > d_hi) throw DomainError("empty degree window");
    ContributingFamilies out;
    const Rational s = a.inverse_sum();
    if (s > Rational(1)) {
        // With c = #exponents: f_a(p) > 2(s-1)p - c - 1 and (dim-1)/2 <= c-2,
        // so Delta(p) > 2(s-1)p - 2c + 1, which exceeds d_hi for all
        // p > (d_hi + 2c - 1) / (2(s-1)).
        Rational threshold = Rational(d_hi + 2 * static_cast<std::int64_t>(a.size()) - 1) /
                             ((s - Rational(1)) * Rational(2));
        out.p_max = to_int64(threshold.ceil());
        if (out.p_max < 1) out.p_max = 1;
        out.certified = true;
    } else {
        out.p_max = a.big_l();
        out.certified = false;
        out.warning = "sum(1/a_k) = " + s.to_string() +
                      " <= 1: family spectrum is unbounded, page is not certified complete";
    }
    for (auto& fam : morse_bott_families(a, out.p_max)) {
        std::int64_t delta = delta_shift(a, fam).as_integer();
        if (delta <= d_hi && delta + fam.dim + 1 >= d_lo) out.families.push_back(std::move(fam));
    }
    return out;
}

inline E1Page build_e1(const ExponentTuple& a, DegreeWindow window, const ZeroColumnSpec& zero_col,
                       const HomologyCatalog& catalog) {
    auto cf = contributing_families(a, window.lo, window.hi);
    E1Page page;
    page.window = window;
    page.p_max = cf.p_max;
    page.completeness_certificate = cf.certified;
    for (const auto& fam : cf.families) {
        HalfInt delta_half = delta_shift(a, fam);
        if (!delta_half.is_integer())
            throw Error("half-integer degree shift for family p=" + std::to_string(fam.p));
        std::int64_t delta = delta_half.as_integer();
        GradedDims dims = kunneth_with_circle(catalog.lookup(CatalogKey::of(fam.subtuple)));
        int p = static_cast<int>(fam.p);
        for (const auto& [j, d] : dims.support()) {
            // entry (p, q) holds H_{p+q-Delta}, so degree j sits at q = Delta + j - p
            page.entries[{p, static_cast<int>(delta) + j - p}] += d;
        }
        page.column_provenance[p] = "family p=" + std::to_string(fam.p) + " subtuple=" + fam.subtuple.to_string();
    }
    for (const auto& [j, d] : zero_col.dims) {
        if (d < 0) throw DomainError("negative dimension in zero column");
        if (d == 0) continue;
        page.entries[{0, j - zero_col.shift_convention}] += d;
        page.column_provenance[0] = "zero-column";
    }
    return page;
}

// Survival lower bound for the entry at (p, q): its dimension minus the
// dimensions of every bidegree a differential d_r (r >= 1) could connect it
// to, clamped at 0.  Those bidegrees all sit at total degree p+q-1 with
// smaller p (targets) or p+q+1 with larger p (sources), so the bound is
// meaningful only when the certified window covers p+q-1 .. p+q+1; outside
// that the answer is Unknown (nullopt).
inline std::optional<std::int64_t> persistence_lower_bound(const E1Page& page, int p, int q) {
    if (p < 0) throw DomainError("page vanishes for p < 0");
    int d = p + q;
    if (!page.completeness_certificate || d - 1 < page.window.lo || d + 1 > page.window.hi)
        return std::nullopt;
    std::int64_t bound = page.at(p, q);
    for (const auto& [pq, dim] : page.entries) {
        const auto& [pp, qq] = pq;
        if (pp + qq == d - 1 && pp < p) bound -= dim;       // possible targets of d_r out of (p,q)
        else if (pp + qq == d + 1 && pp > p) bound -= dim;  // possible sources hitting (p,q)
    }
    return bound > 0 ? bound : 0;
}

struct ShBounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

// Bounds from a page whose certified window covers degree +- 1.
inline ShBounds sh_bounds_on_page(const E1Page& page, int degree) {
    ShBounds b;
    for (const auto& [pq, dim] : page.entries) {
        const auto& [p, q] = pq;
        if (p + q != degree) continue;
        b.upper += dim;
        if (auto lb = persistence_lower_bound(page, p, q)) b.lower += *lb;
    }
    return b;
}

// Degree-wise bounds on dim SH^0_degree: the upper bound is the total E1
// dimension on the anti-diagonal, the lower bound the sum of survival bounds
// (Unknown contributes 0).
inline ShBounds sh_bounds(const ExponentTuple& a, int degree, const ZeroColumnSpec& zero_col,
                          const HomologyCatalog& catalog) {
    E1Page page = build_e1(a, DegreeWindow{degree - 1, degree + 1}, zero_col, catalog);
    return sh_bounds_on_page(page, degree);
}

// Tab-separated dense matrix over the bounding box of the support, rows q
// descending, columns p ascending; byte-deterministic.
inline std::string to_tsv(const E1Page& page) {
    int p_max = 0, q_min = 0, q_max = 0;
    bool any = false;
    for (const auto& [pq, dim] : page.entries) {
        (void)dim;
        if (!any) {
            p_max = pq.first;
            q_min = q_max = pq.second;
            any = true;
        } else {
            p_max = std::max(p_max, pq.first);
            q_min = std::min(q_min, pq.second);
            q_max = std::max(q_max, pq.second);
        }
    }
    std::ostringstream os;
    os << "q\\p";
    for (int p = 0; p <= (any ? p_max : -1); ++p) os << '\t' << p;
    os << '\n';
    if (!any) return os.str();
    for (int q = q_max; q >= q_min; --q) {
        os << q;
        for (int p = 0; p <= p_max; ++p) os << '\t' << page.at(p, q);
        os << '\n';
    }
    return os.str();
}

// Zero-column file: optional "shift <int>" line, then "<q> <dim>" lines.
// Blank lines and '#' comments are ignored.
inline ZeroColumnSpec parse_zero_column(std::istream& in, const std::string& source) {
    ZeroColumnSpec spec;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "shift") {
            if (!(ls >> spec.shift_convention)) throw ParseError(source, lineno, "bad shift value");
            continue;
        }
        int q;
        std::int64_t dim;
        std::istringstream ls2(line);
        if (!(ls2 >> q >> dim) || dim < 0) throw ParseError(source, lineno, "expected '<q> <dim>' with dim >= 0");
        spec.dims[q] += dim;
    }
    return spec;
}

// One line per nonzero entry, sorted by (p, q): p, q, dim, provenance.
inline std::string to_records(const E1Page& page) {
    std::ostringstream os;
    for (const auto& [pq, dim] : page.entries) {
        auto prov = page.column_provenance.find(pq.first);
        os << pq.first << '\t' << pq.second << '\t' << dim << '\t'
           << (prov == page.column_provenance.end() ? "?" : prov->second) << '\n';
    }
    return os.str();
}

}  // namespace brieskorn
