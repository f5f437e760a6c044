#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"

#include "brieskorn/homology_catalog.hpp"

using namespace brieskorn;

TEST_CASE("graded dims basics") {
    GradedDims d({{0, 1}, {3, 2}});
    CHECK(d.at(0) == 1);
    CHECK(d.at(3) == 2);
    CHECK(d.at(1) == 0);
    CHECK(d.total() == 3);
    CHECK_THROWS_AS(GradedDims({{0, -1}}), DomainError);
    d.set(3, 0);
    CHECK(d.support().size() == 1);  // zeros are dropped
}

TEST_CASE("builtin lookups") {
    HomologyCatalog cat;
    CHECK(cat.lookup(CatalogKey({2, 2, 2})) == GradedDims({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(cat.lookup(CatalogKey({2, 3})) == GradedDims({{0, 1}, {1, 1}}));  // trefoil: one component
    CHECK(cat.lookup(CatalogKey({4, 6})) == GradedDims({{0, 2}, {1, 2}}));
    CHECK_THROWS_AS(cat.lookup(CatalogKey({2, 2, 5, 7})), UnknownHomology);
    // component count of the torus link is gcd
    for (std::int64_t a = 2; a <= 9; ++a)
        for (std::int64_t b = a; b <= 9; ++b) {
            std::int64_t g = std::gcd(a, b);
            CHECK(cat.lookup(CatalogKey({a, b})) == GradedDims({{0, g}, {1, g}}));
        }
}

TEST_CASE("catalog keys canonicalize") {
    CHECK(CatalogKey({5, 2, 3}) == CatalogKey({2, 3, 5}));
    CHECK(CatalogKey({5, 2, 3}).to_string() == "2,3,5");
    CHECK_THROWS_AS(CatalogKey({1, 2}), DomainError);
    CHECK_THROWS_AS(CatalogKey({4}), DomainError);
}

TEST_CASE("register then lookup, conflicts, degree range") {
    HomologyCatalog cat;
    GradedDims sphere_like({{0, 1}, {7, 1}});
    cat.register_entry(CatalogKey({2, 2, 2, 2, 2}), sphere_like);
    CHECK(cat.lookup(CatalogKey({2, 2, 2, 2, 2})) == sphere_like);

    // same data again is fine, different data is not
    cat.register_entry(CatalogKey({2, 2, 2, 2, 2}), sphere_like);
    CHECK_THROWS_AS(cat.register_entry(CatalogKey({2, 2, 2, 2, 2}), GradedDims({{0, 2}})), ConflictingEntry);
    CHECK_THROWS_AS(cat.register_entry(CatalogKey({2, 2, 2}), GradedDims({{0, 5}})), ConflictingEntry);

    // the manifold has dimension 2*|key| - 3
    CHECK_THROWS_AS(cat.register_entry(CatalogKey({2, 3}), GradedDims({{0, 1}, {5, 1}})), DegreeOutOfRange);
    CHECK_THROWS_AS(cat.register_entry(CatalogKey({2, 3}), GradedDims({{-1, 1}})), DegreeOutOfRange);

    cat.freeze();
    CHECK_THROWS_AS(cat.register_entry(CatalogKey({3, 3, 3}), GradedDims({{0, 1}})), CatalogFrozen);
    CHECK(cat.lookup(CatalogKey({2, 2, 2, 2, 2})) == sphere_like);  // reads still fine
}

TEST_CASE("catalog file parsing") {
    HomologyCatalog cat;
    std::istringstream in(
        "# test catalog\n"
        "\n"
        "2,2,3,3: 1 0 1 1 0 1\n"
        "2,2,2,2,2: 1 0 0 0 0 0 0 1\n");
    cat.load(in, "test");
    CHECK(cat.lookup(CatalogKey({2, 2, 3, 3})) == GradedDims({{0, 1}, {2, 1}, {3, 1}, {5, 1}}));
    CHECK(cat.lookup(CatalogKey({2, 2, 2, 2, 2})) == GradedDims({{0, 1}, {7, 1}}));

    std::istringstream bad1("2,2: 1 1 extra\n");
    CHECK_THROWS_AS(cat.load(bad1, "bad1"), ParseError);
    std::istringstream bad2("no colon here\n");
    CHECK_THROWS_AS(cat.load(bad2, "bad2"), ParseError);
    std::istringstream bad3("2,3: 1 1 1\n");  // degree 2 > manifold dim 1
    CHECK_THROWS_AS(cat.load(bad3, "bad3"), ParseError);
}

TEST_CASE("kunneth with circle: frozen tables") {
    GradedDims rp3({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    CHECK(kunneth_with_circle(rp3) == GradedDims({{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}}));
    CHECK(kunneth_with_circle(GradedDims({{0, 1}})) == GradedDims({{0, 1}, {1, 1}}));  // point x S1
    CHECK(kunneth_with_circle(GradedDims()) == GradedDims());
}

TEST_CASE("kunneth doubles total dimension and preserves duality symmetry") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> dim(0, 4);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        GradedDims d;
        for (int i = 0; i < 5; ++i) d.add(deg(rng), dim(rng));
        CHECK(kunneth_with_circle(d).total() == 2 * d.total());
    }
    // a Poincare-symmetric table around D stays symmetric around D + 1
    GradedDims sym({{0, 1}, {1, 3}, {2, 3}, {3, 1}});  // D = 3
    GradedDims crossed = kunneth_with_circle(sym);
    for (int i = -1; i <= 5; ++i) CHECK(crossed.at(i) == crossed.at(4 - i));
}
