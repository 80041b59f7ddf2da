#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "cubic.hpp"

using namespace orderzeta;

TEST_CASE("discriminant values") {
    CHECK(discriminant(-2, 7, 5) == -2951);
    CHECK(discriminant(0, 0, 1) == -27);
    // agrees with the binary-form discriminant of (1,-a,b,-c)
    CHECK(parameter_form(-2, 7, 5).disc() == -2951);
}

TEST_CASE("discriminant homogeneity Pol(ra, r^2 b, r^3 c) = r^6 Pol") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 100; ++i) {
        Int a = d(rng), b = d(rng), c = d(rng);
        CHECK(discriminant(2 * a, 4 * b, 8 * c) == 64 * discriminant(a, b, c));
        Int r = 3;
        CHECK(discriminant(r * a, r * r * b, r * r * r * c) ==
              pow_int(r, 6) * discriminant(a, b, c));
    }
}

TEST_CASE("action: identity, group law, disc scaling") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> d(-9, 9);
    gl2_matrix id{1, 0, 0, 1};
    for (int i = 0; i < 80; ++i) {
        binary_cubic_form f{d(rng), d(rng), d(rng), d(rng)};
        rational_cubic_form fi = act(f, id);
        CHECK(fi.is_integral());
        CHECK(fi.to_integral() == f);

        gl2_matrix g{d(rng), d(rng), d(rng), d(rng)};
        gl2_matrix h{d(rng), d(rng), d(rng), d(rng)};
        if (g.det() == 0 || h.det() == 0) continue;
        gl2_matrix gh{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                      g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
        rational_cubic_form lhs = act(act(f, g), h);
        rational_cubic_form rhs = act(f, gh);
        CHECK(lhs.c3 == rhs.c3);
        CHECK(lhs.c2 == rhs.c2);
        CHECK(lhs.c1 == rhs.c1);
        CHECK(lhs.c0 == rhs.c0);

        // Disc(f^g) = det(g)^{-2} Disc(f)
        Rat lhs_disc = act(f, g).disc();
        Rat rhs_disc = Rat(f.disc()) / Rat(g.det() * g.det());
        rhs_disc.canonicalize();
        CHECK(lhs_disc == rhs_disc);
    }
}

TEST_CASE("action coefficients match the coset formulas") {
    // g = [[q^b, 0],[u q^b, q^{r-b}]] acting on (1,-a,b,-c) gives
    //   (q^{r-3b}, -(a+3u)/q^b, (3u^2+2au+b)/q^{r-b}, -(u^3+au^2+bu+c)/q^{2r-3b})
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-20, 20);
    for (Int q : {Int(2), Int(3), Int(5)})
        for (unsigned r : {1u, 2u, 3u})
            for (unsigned beta = 0; 3 * beta <= r; ++beta)
                for (int i = 0; i < 10; ++i) {
                    Int a = d(rng), b = d(rng), c = d(rng);
                    Int u = d(rng);
                    gl2_matrix g{pow_int(q, beta), 0, u * pow_int(q, beta),
                                 pow_int(q, r - beta)};
                    rational_cubic_form t = act(parameter_form(a, b, c), g);
                    Rat qb(pow_int(q, beta));
                    CHECK(t.c3 == Rat(pow_int(q, r - 3 * beta)));
                    CHECK(t.c2 == Rat(-(a + 3 * u)) / qb);
                    CHECK(t.c1 == Rat(3 * u * u + 2 * a * u + b) /
                                      Rat(pow_int(q, r - beta)));
                    CHECK(t.c0 == Rat(-(u * u * u + a * u * u + b * u + c)) /
                                      Rat(pow_int(q, 2 * r - 3 * beta)));
                }
}

TEST_CASE("primitivity") {
    CHECK(is_primitive_at({1, -1, 3, 5}, 2));
    CHECK_FALSE(is_primitive_at({2, 2, 2, 2}, 2));
    CHECK_FALSE(is_primitive_at({4, 2, 6, 10}, 2));
    CHECK(is_primitive_at({4, 2, 6, 10}, 3));
}

TEST_CASE("contributing classes by the rational root test") {
    signed_constant c{5, 1, +1};
    CHECK(is_contributing(-2, 7, c));
    CHECK_FALSE(is_contributing(4, -4, c));   // (X-5)(X^2+X+1)
    CHECK_FALSE(is_contributing(3, -9, c));   // (X+1)^2(X-5)
}

TEST_CASE("splitting types") {
    CHECK(splitting_type_of({1, 1, 1, 1}, 2) == splitting_type::s1cube);
    CHECK(splitting_type_of({1, 1, 0, 0}, 2) == splitting_type::s11sq);
    // T^3 - T homogenized at q = 3 has roots 0, 1, 2
    CHECK(splitting_type_of({1, 0, -1, 0}, 3) == splitting_type::s111);
    CHECK(splitting_type_of({0, 0, 0, 0}, 5) == splitting_type::zero);
    CHECK(splitting_type_of({7, 14, 0, 21}, 7) == splitting_type::zero);
    // x^2 y factors as y * x^2: double line times line
    CHECK(splitting_type_of({0, 1, 0, 0}, 5) == splitting_type::s11sq);
    // y * (x^2 + 1) over F_3: irreducible quadratic
    CHECK(splitting_type_of({0, 1, 0, 1}, 3) == splitting_type::s12);
}

TEST_CASE("splitting type is a GL(2, F_q)-orbit invariant") {
    // act by unimodular integer lifts of GL(2, Z/q)
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-10, 10);
    std::vector<gl2_matrix> gens = {{1, 1, 0, 1}, {0, 1, -1, 0}, {1, 0, 3, 1},
                                    {1, -2, 0, 1}, {-1, 0, 0, 1}};
    for (Int q : {Int(2), Int(3), Int(5), Int(7)})
        for (int i = 0; i < 60; ++i) {
            binary_cubic_form f{d(rng), d(rng), d(rng), d(rng)};
            splitting_type t = splitting_type_of(f, q);
            for (const gl2_matrix& g : gens) {
                rational_cubic_form fg = act(f, g);
                REQUIRE(fg.is_integral());
                CHECK(splitting_type_of(fg.to_integral(), q) == t);
            }
        }
}

TEST_CASE("monogenic type census at q = 3 with coprime constant") {
    // over (a,b) mod 3: 1 triple root, 1 double, 3 mixed, 4 irreducible
    for (Int c : {Int(5), Int(-5), Int(7)}) {
        std::map<splitting_type, int> census;
        for (Int a = 0; a < 3; ++a)
            for (Int b = 0; b < 3; ++b)
                census[splitting_type_of(parameter_form(a, b, c), 3)]++;
        CHECK(census[splitting_type::s1cube] == 1);
        CHECK(census[splitting_type::s11sq] == 1);
        CHECK(census[splitting_type::s12] == 3);
        CHECK(census[splitting_type::s3] == 4);
    }
}

TEST_CASE("w coefficients") {
    CHECK(w_coefficient(splitting_type::s111, 3) == 4);
    CHECK(w_coefficient(splitting_type::s3, 4) == -1);
    CHECK(w_coefficient(splitting_type::zero, 0) == 1);
    for (int t = 0; t < 6; ++t)
        for (unsigned v = 0; v <= 50; ++v)
            CHECK(std::abs(w_coefficient(splitting_type(t), v)) <=
                  long(v) + 1);
}

TEST_CASE("w generating functions match the Euler-factor ratios") {
    // check sum_v w(t, v) x^v against the table ratio, to order 20,
    // by cross-multiplying with the denominator
    struct row {
        splitting_type t;
        // numerator and denominator coefficients of the ratio
        std::vector<long> num, den;
    };
    std::vector<row> rows = {
        {splitting_type::s111, {1}, {1, -2, 1}},        // 1/(1-x)^2
        {splitting_type::s12, {1}, {1, 0, -1}},          // 1/(1-x^2)
        {splitting_type::s3, {1, -1}, {1, 0, 0, -1}},    // (1-x)/(1-x^3)
        {splitting_type::s11sq, {1}, {1, -1}},           // 1/(1-x)
        {splitting_type::s1cube, {1}, {1}},              // 1
        {splitting_type::zero, {1}, {1}},                // 1
    };
    for (const auto& r : rows) {
        for (unsigned m = 0; m <= 20; ++m) {
            long conv = 0;
            for (unsigned j = 0; j < r.den.size() && j <= m; ++j)
                conv += r.den[j] * w_coefficient(r.t, m - j);
            long expect = m < r.num.size() ? r.num[m] : 0;
            CHECK(conv == expect);
        }
    }
}

TEST_CASE("a coefficients") {
    binary_cubic_form prim{1, -1, 3, 5};
    binary_cubic_form imprim{2, 2, 2, 2};
    CHECK(a_coefficient(prim, 2, 0) == 1);
    CHECK(a_coefficient(prim, 2, 1) == 0);
    CHECK(a_coefficient(imprim, 2, 1) == 1);
    CHECK(a_coefficient(imprim, 2, 2) == 0);
    CHECK(a_coefficient(prim, 7, 2) == 0);
}

TEST_CASE("multiplicative |W(n)| <= d(n) <= n for n <= 10^4") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(-30, 30);
    std::vector<Int> primes;
    for (Int q = 2; q <= 100; ++q)
        if (is_prime(q)) primes.push_back(q);
    for (int i = 0; i < 5; ++i) {
        binary_cubic_form f{d(rng), d(rng), d(rng), d(rng)};
        for (long n = 1; n <= 10000; n += 97) {
            long w = 1, dn = 1;
            long m = n;
            for (const Int& q : primes) {
                if (m % q.get_si()) continue;
                unsigned e = 0;
                while (m % q.get_si() == 0) { m /= q.get_si(); ++e; }
                w *= w_coefficient(splitting_type_of(f, q), e);
                dn *= e + 1;
            }
            if (m > 1) {
                w *= w_coefficient(splitting_type_of(f, m), 1);
                dn *= 2;
            }
            CHECK(std::abs(w) <= dn);
            CHECK(dn <= n);
        }
    }
}
