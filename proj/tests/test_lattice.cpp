#include "stringy/lattice.hpp"

#include "stringy/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace stringy;
using namespace testsupport;

namespace {

IntMat im(std::initializer_list<std::initializer_list<long long>> rows) {
    IntMat m;
    for (auto r : rows) m.push_back(iv(r));
    return m;
}

} // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("determinant examples") {
    CHECK(determinant(im({{1, 0}, {0, 1}})) == 1);
    CHECK(determinant(im({{1, 0}, {1, 2}})) == 2);
    CHECK(determinant(im({{1, 2}, {2, 4}})) == 0);
    CHECK_THROWS_WITH_AS(determinant(im({{1, 0}, {0, 1}, {1, 1}})), doctest::Contains("square"),
                         error);
}

TEST_CASE("determinant matches the cofactor oracle on random matrices") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.range(1, 4));
        IntMat m(n, IntVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = Int(rng.range(-6, 6));
        CHECK(determinant(m) == oracle_det(m));
    }
}

TEST_CASE("determinant is multiplicative on block-diagonal compositions") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        IntMat a(2, IntVec(2)), b(2, IntVec(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a[i][j] = Int(rng.range(-5, 5));
                b[i][j] = Int(rng.range(-5, 5));
            }
        IntMat block(4, IntVec(4, Int(0)));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                block[i][j] = a[i][j];
                block[2 + i][2 + j] = b[i][j];
            }
        CHECK(determinant(block) == determinant(a) * determinant(b));
    }
}

TEST_CASE("primitive examples and idempotence") {
    CHECK(primitive(iv({2, 4})) == iv({1, 2}));
    CHECK(primitive(iv({1, 0})) == iv({1, 0}));
    CHECK(primitive(iv({-3, -6})) == iv({-1, -2}));
    CHECK_THROWS_AS(primitive(iv({0, 0})), error);

    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        IntVec v(3);
        for (int i = 0; i < 3; ++i) v[i] = Int(rng.range(-9, 9));
        if (is_zero(v)) continue;
        CHECK(primitive(primitive(v)) == primitive(v));
    }
}

TEST_CASE("solve_rational examples") {
    RatVec x = solve_rational(im({{1, 0}, {0, 1}}), {Rat(1), Rat(1)});
    CHECK(x == RatVec{Rat(1), Rat(1)});

    x = solve_rational(im({{1, 0}, {1, 2}}), {Rat(1), Rat(1)});
    CHECK(x == RatVec{Rat(1), Rat(0)});

    CHECK_THROWS_AS(solve_rational(im({{1, 0}, {2, 0}}), {Rat(1), Rat(1)}), error);
    try {
        solve_rational(im({{1, 0}, {2, 0}}), {Rat(1), Rat(1)});
    } catch (const error& e) {
        CHECK(e.code() == errc::no_solution);
    }
    try {
        solve_rational(im({{1, 0, 0}, {0, 1, 0}}), {Rat(1), Rat(1)});
    } catch (const error& e) {
        CHECK(e.code() == errc::not_unique);
    }
}

TEST_CASE("parallelepiped_points examples") {
    CHECK(parallelepiped_points({iv({1, 0}), iv({0, 1})}, HalfOpen::Low) ==
          std::vector<IntVec>{iv({0, 0})});
    CHECK(parallelepiped_points({iv({1, 0}), iv({1, 2})}, HalfOpen::Low) ==
          std::vector<IntVec>{iv({0, 0}), iv({1, 1})});
    CHECK(parallelepiped_points({iv({1, 0}), iv({1, 2})}, HalfOpen::High) ==
          std::vector<IntVec>{iv({1, 1}), iv({2, 2})});
    CHECK_THROWS_AS(parallelepiped_points({iv({1, 2}), iv({2, 4})}, HalfOpen::Low), error);
}

TEST_CASE("parallelepiped point count equals the lattice index") {
    Rng rng;
    int done = 0;
    while (done < 25) {
        int d = static_cast<int>(rng.range(1, 3));
        int k = static_cast<int>(rng.range(1, d));
        std::vector<IntVec> gens;
        for (int i = 0; i < k; ++i) {
            IntVec v(d);
            for (int j = 0; j < d; ++j) v[j] = Int(rng.range(-4, 4));
            if (is_zero(v)) break;
            gens.push_back(std::move(v));
        }
        if (static_cast<int>(gens.size()) != k || rank(gens) != k) continue;
        ++done;
        Int index = oracle_lattice_index(gens);
        CHECK(Int(parallelepiped_points(gens, HalfOpen::Low).size()) == index);
        CHECK(Int(parallelepiped_points(gens, HalfOpen::High).size()) == index);
    }
}

TEST_CASE("half-open modes are exchanged by p -> sum(gens) - p") {
    Rng rng;
    int done = 0;
    while (done < 15) {
        std::vector<IntVec> gens;
        for (int i = 0; i < 2; ++i) {
            IntVec v(2);
            for (int j = 0; j < 2; ++j) v[j] = Int(rng.range(-4, 4));
            gens.push_back(std::move(v));
        }
        if (rank(gens) != 2) continue;
        ++done;
        IntVec total = vec_add(gens[0], gens[1]);
        auto low = parallelepiped_points(gens, HalfOpen::Low);
        auto high = parallelepiped_points(gens, HalfOpen::High);
        REQUIRE(low.size() == high.size());
        std::vector<IntVec> mapped;
        for (const IntVec& p : low) mapped.push_back(vec_sub(total, p));
        std::sort(mapped.begin(), mapped.end(), lex_less);
        CHECK(mapped == high);
    }
}

TEST_SUITE_END();
