#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arith.hpp"

using namespace orderzeta;

TEST_CASE("valuation basics") {
    CHECK(valuate(0, 5).infinite);
    CHECK(valuate(45, 3).exponent == 2);
    CHECK_FALSE(valuate(45, 3).infinite);
    // Pol(-2, 7, 5) = -2951 = -13 * 227
    CHECK(valuate(-2951, 13).exponent == 1);
    CHECK_THROWS_AS(valuate(10, 4), parameter_error);
}

TEST_CASE("valuation multiplicativity on random inputs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int i = 0; i < 200; ++i) {
        long a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        for (long q : {2L, 3L, 5L, 13L}) {
            valuation va = valuate(a, q), vb = valuate(b, q),
                      vab = valuate(Int(a) * b, q);
            CHECK(vab.exponent == va.exponent + vb.exponent);
        }
    }
}

TEST_CASE("cube root counts") {
    CHECK(cube_root_count(5, 2).count == 1);
    CHECK(cube_root_count(7, 1).count == 3);
    CHECK(cube_root_count(7, 5).count == 0);
}

TEST_CASE("cube root count totals and symmetry for q <= 100") {
    for (Int q = 2; q <= 100; ++q) {
        if (!is_prime(q)) continue;
        long total = 0;
        for (Int c = 1; c < q; ++c) {
            int n = cube_root_count(q, c).count;
            total += n;
            CHECK(n == cube_root_count(q, -c).count);
            if (q % 3 == 2) CHECK(n == 1);
            if (q % 3 == 1) CHECK((n == 0 || n == 3));
        }
        CHECK(total == q.get_si() - 1);
    }
}

TEST_CASE("hensel cube roots") {
    CHECK(hensel_cube_roots(5, 2, 1) == std::vector<Int>{3});
    CHECK(hensel_cube_roots(7, 5, 2).empty());
    CHECK(hensel_cube_roots(3, 1, 2) == std::vector<Int>{1, 4, 7});
    CHECK_THROWS_AS(hensel_cube_roots(5, 10, 2), parameter_error);
}

TEST_CASE("hensel output cubes back to c") {
    for (Int q : {Int(5), Int(7), Int(11), Int(13)})
        for (Int c = 1; c < q; ++c)
            for (unsigned beta : {1u, 2u, 3u, 4u}) {
                Int mod = pow_int(q, beta);
                auto roots = hensel_cube_roots(q, c, beta);
                CHECK(roots.size() ==
                      size_t(cube_root_count(q, c).count));
                for (const Int& u : roots)
                    CHECK(mod_pos(u * u * u - c, mod) == 0);
            }
    // 3-adic: cardinality follows the delta_9 rule
    for (Int c : {Int(1), Int(2), Int(4), Int(5), Int(7), Int(8)}) {
        CHECK(hensel_cube_roots(3, c, 1).size() == 1);
        size_t expect = (mod_pos(c, 9) == 1 || mod_pos(c, 9) == 8) ? 3 : 0;
        for (unsigned beta : {2u, 3u, 4u}) {
            auto roots = hensel_cube_roots(3, c, beta);
            CHECK(roots.size() == expect);
            for (const Int& u : roots)
                CHECK(mod_pos(u * u * u - c, pow_int(3, beta)) == 0);
        }
    }
}
