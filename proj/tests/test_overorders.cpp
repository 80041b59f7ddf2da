#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "overorders.hpp"

using namespace orderzeta;

namespace {

// Count solutions (u, beta, a, b) of the congruence system over
// (a,b) mod q^{2r} by iterating (beta, u, a) and solving the two linear
// conditions on b by elementary modular algebra.  Test-side helper for
// censuses whose (a,b) box is too large to scan pairwise.
Int count_system_solutions_fast(int64_t q, int64_t cval, unsigned r) {
    using i128 = __int128;
    auto powq = [q](unsigned e) { return pow_i64(q, e); };
    Int total = 0;
    int64_t box = powq(2 * r);
    for (unsigned beta = 0; 3 * beta <= r; ++beta) {
        int64_t m1 = powq(beta);
        int64_t m2 = powq(r - beta);
        int64_t m3 = powq(2 * r - 3 * beta);
        int64_t ubound = powq(r - 2 * beta);
        int64_t tspan = box / m2;  // lifts of b beyond the mod-m2 constraint
        for (int64_t u = 0; u < ubound; ++u) {
            i128 u2 = i128(u) * u, u3 = u2 * u;
            int64_t A = int64_t(i128(u) * m2 % m3);
            int64_t g = std::gcd(A, m3);
            for (int64_t a = 0; a < box; ++a) {
                if ((a + 3 * u) % m1 != 0) continue;
                int64_t b0 = int64_t((m2 - (3 * u2 + 2 * i128(a) * u) % m2) % m2);
                // b = b0 + m2 t must satisfy u b = -(u^3 + a u^2 + c) (m3)
                i128 B = -(u3 + i128(a) * u2 + i128(u) * b0 + cval);
                if (int64_t((B % g + g) % g) != 0) continue;
                // g solutions t mod m3, each extending to tspan*g/m3 values
                total += tspan * g / m3;
            }
        }
    }
    return total;
}

}  // namespace

TEST_CASE("Iwasawa coset counts") {
    CHECK(coset_reps(2, 0).size() == 1);
    auto r21 = coset_reps(2, 1);
    CHECK(r21.size() == 3);
    // diag(1,2) with w in {0,1}, then diag(2,1)
    CHECK((r21[0].beta == 0 && r21[0].w == 0));
    CHECK((r21[1].beta == 0 && r21[1].w == 1));
    CHECK((r21[2].beta == 1 && r21[2].w == 0));
    CHECK(coset_reps(3, 2).size() == 13);
    for (Int q : {Int(2), Int(3), Int(5)})
        for (unsigned r : {0u, 1u, 2u, 3u}) {
            size_t expect = 0;
            for (unsigned b = 0; b <= r; ++b)
                expect += size_t(pow_int(q, r - b).get_ui());
            CHECK(coset_reps(q, r).size() == expect);
        }
}

TEST_CASE("r = 0 has the single empty solution") {
    signed_constant c{5, 1, +1};
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -3; b <= 3; ++b) {
            CHECK(solve_system(a, b, c, 7, 0, 0).size() == 1);
            CHECK(enumerate_overorders(a, b, c, 7, 0).size() == 1);
            CHECK(oracle_enumerate(a, b, c, 7, 0).size() == 1);
        }
    CHECK_THROWS_AS(solve_system(1, 1, c, 7, 2, 3), precision_error);
}

TEST_CASE("census: q=5 coprime constant, r=1, total 20 over (a,b) mod 25") {
    signed_constant c{7, 1, +1};
    long total = 0;
    for (Int a = 0; a < 25; ++a)
        for (Int b = 0; b < 25; ++b)
            total += long(solve_system(a, b, c, 5, 1, 2).size());
    CHECK(total == 20);  // (q-1) q^{2r-1} = 4 * 5
    CHECK(count_system_solutions_fast(5, c.value().get_si(), 1) == 20);
}

TEST_CASE("census: q=7 with n_7 = 0, r=3, total 6*7^5") {
    // constant 5: the cubes mod 7 are {1,6}, so n_7(5) = 0
    REQUIRE(cube_root_count(7, 5).count == 0);
    CHECK(count_system_solutions_fast(7, 5, 3) == 100842);
}

TEST_CASE("X^3 - 17 at q = 3: conductor index 3 exactly") {
    // 17 = -1 mod 9, so Z[17^{1/3}] has index 3 in the maximal order:
    // exactly one overorder of index 3 and none of index 9.
    signed_constant c{17, 1, +1};
    auto o1 = enumerate_overorders(0, 0, c, 3, 1);
    CHECK(o1.size() == 1);
    CHECK(oracle_enumerate(0, 0, c, 3, 1).size() == 1);
    CHECK(enumerate_overorders(0, 0, c, 3, 2).empty());
    CHECK(oracle_enumerate(0, 0, c, 3, 2).empty());
    // the index-3 overorder is the maximal order; discriminant law
    CHECK(o1[0].transformed.disc() * pow_int(3, 2) ==
          parameter_form(0, 0, 17).disc());
}

TEST_CASE("the printed belabas form has no proper overorder at 2") {
    // X^3+X^2Y+3XY^2+5Y^3, i.e. (a,b) = (-1,3) with constant -5: the field
    // discriminant equals the polynomial discriminant -524, so the order is
    // maximal; both enumeration routes agree on zero.
    signed_constant c{5, 1, -1};
    for (unsigned r : {1u, 2u}) {
        auto sys = enumerate_overorders(-1, 3, c, 2, r);
        auto orc = oracle_enumerate(-1, 3, c, 2, r);
        CHECK(sys.empty());
        CHECK(orc.empty());
    }
}

TEST_CASE("oracle equivalence on a spot box, with laws") {
    signed_constant c{5, 2, -1};
    Int q = 3;
    unsigned r = 2;
    Int box = pow_int(q, 2 * r);
    long solutions = 0;
    for (Int a = 0; a < box; ++a)
        for (Int b = 0; b < box; ++b) {
            auto sys = enumerate_overorders(a, b, c, q, r);
            auto orc = oracle_enumerate(a, b, c, q, r);
            REQUIRE(coset_ids(sys, q) == coset_ids(orc, q));
            solutions += long(sys.size());
            for (const auto& o : sys) {
                // restriction law
                CHECK(3 * o.rep.beta <= r);
                // discriminant law  Disc(f^g) q^{2r} = Disc(f)
                CHECK(o.transformed.disc() * pow_int(q, 2 * r) ==
                      o.parent.disc());
            }
        }
    CHECK(solutions > 0);
}

TEST_CASE("claimed solutions that fail integrality raise internal_error") {
    signed_constant c{5, 1, +1};
    // (a,b) = (0,0): u=1 fails the cubic congruence at q=2, r=1
    coset_rep bogus{0, 0, 1};
    CHECK_THROWS_AS(transform_solution(0, 1, c, 2, bogus), internal_error);
}
