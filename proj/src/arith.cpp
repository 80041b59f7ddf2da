#include "arith.hpp"

namespace orderzeta {

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

int64_t pow_i64(int64_t base, unsigned e) {
    int64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return d == n;
    return true;
}

valuation valuate(const Int& m, const Int& q) {
    if (!is_prime(q)) throw parameter_error("valuate: modulus is not prime");
    valuation v;
    v.prime = q;
    if (m == 0) {
        v.infinite = true;
        return v;
    }
    Int t = m;
    while (t % q == 0) {
        t /= q;
        ++v.exponent;
    }
    return v;
}

cube_root_count_result cube_root_count(const Int& q, const Int& c) {
    if (!is_prime(q)) throw parameter_error("cube_root_count: q is not prime");
    Int cr = mod_pos(c, q);
    int count = 0;
    for (Int r = 0; r < q; ++r)
        if (mod_pos(r * r * r, q) == cr) ++count;
    return {q, cr, count};
}

static std::vector<Int> cube_roots_3adic(const Int& c, unsigned beta) {
    if (c % 3 == 0) throw parameter_error("hensel_cube_roots: 3 divides c");
    // Level 1: u^3 = u in F_3.  From level j on, test the three lifts.
    std::vector<Int> roots{mod_pos(c, 3)};
    Int mod = 3;
    for (unsigned j = 1; j < beta; ++j) {
        Int next_mod = mod * 3;
        std::vector<Int> lifted;
        for (const Int& x : roots)
            for (int t = 0; t < 3; ++t) {
                Int u = x + t * mod;
                if (mod_pos(u * u * u - c, next_mod) == 0) lifted.push_back(u);
            }
        roots = std::move(lifted);
        mod = next_mod;
    }
    return roots;
}

std::vector<Int> hensel_cube_roots(const Int& q, const Int& c, unsigned beta) {
    if (!is_prime(q)) throw parameter_error("hensel_cube_roots: q is not prime");
    if (beta == 0) return {0};
    if (q == 3) return cube_roots_3adic(c, beta);
    if (mod_pos(c, q) == 0) throw parameter_error("hensel_cube_roots: q divides c");

    std::vector<Int> roots;
    for (Int r = 1; r < q; ++r)
        if (mod_pos(r * r * r - c, q) == 0) roots.push_back(r);

    // Newton digit lifting: u <- u + t q^j with t = (c - u^3)/q^j * (3u^2)^{-1}.
    Int mod = q;
    for (unsigned j = 1; j < beta; ++j) {
        Int next_mod = mod * q;
        for (Int& u : roots) {
            Int rem = mod_pos(c - u * u * u, next_mod);
            Int delta = rem / mod;  // exact by construction
            Int deriv = mod_pos(3 * u * u, q);
            Int inv;
            mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), q.get_mpz_t());
            u = mod_pos(u + delta * inv % q * mod, next_mod);
        }
        mod = next_mod;
    }
    for (const Int& u : roots)
        if (mod_pos(u * u * u - c, mod) != 0)
            throw internal_error("hensel_cube_roots: lift verification failed");
    return roots;
}

}  // namespace orderzeta
