#pragma once

// Registry of Z2 homology tables for the Brieskorn links that show up as
// orbit families.  Two families are built in: Sigma(2,2,2) = RP^3 with
// dims (1,1,1,1), and every pair Sigma(a,b), the (a,b) torus link with
// gcd(a,b) components, dims (g,g) in degrees 0,1.  Everything else must be
// registered explicitly (or loaded from a catalog file); lookups on gaps
// fail loudly instead of guessing.
//
// Catalog file format, one entry per line, dims listed from degree 0:
//     a0,a1,...: d0 d1 d2 ...
// Blank lines and lines starting with '#' are ignored.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/exponent_tuple.hpp"
#include "brieskorn/graded_dims.hpp"

namespace brieskorn {

// Canonical (nondecreasing) exponent list identifying a Brieskorn link.
struct CatalogKey {
    std::vector<std::int64_t> exponents;

    explicit CatalogKey(std::vector<std::int64_t> exps) : exponents(std::move(exps)) {
        if (exponents.size() < 2) throw DomainError("catalog key needs at least two exponents");
        for (std::int64_t a : exponents)
            if (a < 2) throw DomainError("catalog key entry " + std::to_string(a) + " < 2");
        std::sort(exponents.begin(), exponents.end());
    }

    static CatalogKey of(const ExponentTuple& t) { return CatalogKey(t.exponents()); }

    // Real dimension of the link Sigma(key).
    int manifold_dim() const { return 2 * static_cast<int>(exponents.size()) - 3; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(exponents[i]);
        }
        return s;
    }

    friend bool operator==(const CatalogKey& a, const CatalogKey& b) = default;
    friend auto operator<=>(const CatalogKey& a, const CatalogKey& b) = default;
};

class HomologyCatalog {
  public:
    HomologyCatalog() = default;

    GradedDims lookup(const CatalogKey& key) const {
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
        if (auto b = builtin(key)) return *b;
        throw UnknownHomology(key.to_string());
    }

    // Registering the same data twice is a no-op; different data for an
    // existing key (including the built-ins) is an error.
    void register_entry(const CatalogKey& key, const GradedDims& dims) {
        if (frozen_) throw CatalogFrozen("catalog is frozen; cannot register " + key.to_string());
        for (const auto& [deg, d] : dims.support()) {
            if (deg < 0 || deg > key.manifold_dim())
                throw DegreeOutOfRange("degree " + std::to_string(deg) + " outside [0, " +
                                       std::to_string(key.manifold_dim()) + "] for key " + key.to_string());
        }
        std::optional<GradedDims> existing;
        if (auto it = entries_.find(key); it != entries_.end())
            existing = it->second;
        else
            existing = builtin(key);
        if (existing) {
            if (*existing != dims)
                throw ConflictingEntry("key " + key.to_string() + " already maps to " +
                                       existing->to_string() + ", refusing " + dims.to_string());
            return;
        }
        entries_.emplace(key, dims);
    }

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    void load(std::istream& in, const std::string& source) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string_view sv(line);
            while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
            if (sv.empty() || sv.front() == '#') continue;
            auto colon = sv.find(':');
            if (colon == std::string_view::npos) throw ParseError(source, lineno, "expected 'a0,a1,...: d0 d1 ...'");
            std::vector<std::int64_t> exps;
            try {
                exps = ExponentTuple::parse(trim(sv.substr(0, colon))).exponents();
            } catch (const Error& e) {
                throw ParseError(source, lineno, e.what());
            }
            GradedDims dims;
            std::istringstream rest{std::string(sv.substr(colon + 1))};
            std::int64_t d;
            int deg = 0;
            while (rest >> d) {
                if (d < 0) throw ParseError(source, lineno, "negative dimension");
                dims.add(deg++, d);
            }
            if (!rest.eof()) throw ParseError(source, lineno, "bad dimension list");
            try {
                register_entry(CatalogKey(std::move(exps)), dims);
            } catch (const Error& e) {
                throw ParseError(source, lineno, e.what());
            }
        }
    }

    void load_file(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open catalog file " + path.string());
        load(in, path.string());
    }

  private:
    static std::string trim(std::string_view sv) {
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t')) sv.remove_suffix(1);
        return std::string(sv);
    }

    static std::optional<GradedDims> builtin(const CatalogKey& key) {
        if (key.exponents == std::vector<std::int64_t>{2, 2, 2}) {
            return GradedDims({{0, 1}, {1, 1}, {2, 1}, {3, 1}});  // RP^3 over Z2
        }
        if (key.exponents.size() == 2) {
            std::int64_t g = std::gcd(key.exponents[0], key.exponents[1]);  // torus link components
            return GradedDims({{0, g}, {1, g}});
        }
        return std::nullopt;
    }

    std::map<CatalogKey, GradedDims> entries_;
    bool frozen_ = false;
};

}  // namespace brieskorn
