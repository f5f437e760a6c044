#pragma once

// Finitely supported dimension tables of Z2-graded vector spaces.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "brieskorn/errors.hpp"

namespace brieskorn {

class GradedDims {
  public:
    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const int, std::int64_t>> init) {
        for (const auto& [deg, d] : init) add(deg, d);
    }
    explicit GradedDims(std::map<int, std::int64_t> dims) {
        for (const auto& [deg, d] : dims) set(deg, d);
    }

    std::int64_t at(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    void set(int degree, std::int64_t dim) {
        if (dim < 0) throw DomainError("negative dimension in degree " + std::to_string(degree));
        if (dim == 0)
            dims_.erase(degree);
        else
            dims_[degree] = dim;
    }

    void add(int degree, std::int64_t dim) { set(degree, at(degree) + dim); }

    const std::map<int, std::int64_t>& support() const { return dims_; }
    bool empty() const { return dims_.empty(); }

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [deg, d] : dims_) t += d;
        return t;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [deg, d] : dims_) {
            if (!first) s += ", ";
            first = false;
            s += std::to_string(deg) + ":" + std::to_string(d);
        }
        return s + "}";
    }

    friend bool operator==(const GradedDims& a, const GradedDims& b) { return a.dims_ == b.dims_; }

  private:
    std::map<int, std::int64_t> dims_;  // nonzero values only
};

// Field-coefficient Kunneth rule for crossing with a circle: d'_i = d_i + d_{i-1}.
inline GradedDims kunneth_with_circle(const GradedDims& dims) {
    GradedDims out;
    for (const auto& [deg, d] : dims.support()) {
        out.add(deg, d);
        out.add(deg + 1, d);
    }
    return out;
}

}  // namespace brieskorn
