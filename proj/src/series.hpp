#ifndef ORDERZETA_SERIES_HPP
#define ORDERZETA_SERIES_HPP

#include <string>
#include <vector>

#include "kloosterman.hpp"

namespace orderzeta {

// Dense polynomial over Q, coefficients by ascending degree.
struct poly {
    std::vector<Rat> c;

    poly() = default;
    poly(std::initializer_list<Rat> init) : c(init) { trim(); }
    static poly constant(const Rat& r) { return poly{{r}}; }
    static poly monomial(unsigned deg, const Rat& r);

    void trim();
    int degree() const { return int(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    Rat coeff(unsigned i) const { return i < c.size() ? c[i] : Rat(0); }

    poly operator+(const poly& o) const;
    poly operator-(const poly& o) const;
    poly operator*(const poly& o) const;
    bool operator==(const poly& o) const { return c == o.c; }
};

// Remainder/quotient and gcd; gcd is returned monic.
std::pair<poly, poly> divmod(const poly& num, const poly& den);
poly gcd(const poly& a, const poly& b);

// num/den, reduced, denominator monic.
struct rational_function {
    poly num, den;

    rational_function() : num{}, den{{Rat(1)}} {}
    rational_function(poly n, poly d);

    rational_function operator+(const rational_function&) const;
    rational_function operator-(const rational_function&) const;
    rational_function operator*(const rational_function&) const;
    rational_function operator/(const rational_function&) const;
    bool operator==(const rational_function&) const = default;

    std::string str() const;
};

// Truncated power series of exact rationals, coefficients 0..order.
struct power_series {
    unsigned order = 0;
    std::vector<Rat> c;  // size order+1

    static power_series zero(unsigned order);
    power_series mul(const power_series& o) const;
    power_series add(const power_series& o) const;
    bool operator==(const power_series&) const = default;
};

// Taylor expansion at 0 up to `order`; den(0) must be nonzero.
power_series taylor(const rational_function& f, unsigned order);

// One comparison row of a verification report.
struct report_item {
    std::string label;
    std::string expected;
    std::string computed;
    bool pass;
};

// ---- closed forms ------------------------------------------------------

enum class local_case { coprime, equal_p, two, three };

local_case classify_local_case(const Int& q, const Int& p);

// The closed local Dirichlet factor in x = q^{-z}, per case:
//   q coprime to 6p : (1-x/q)(1-x^2/q) / ((1-x^2)(1-x^3))
//   q = p (p >= 5)  : (1-x^{k+1})(1-x^{k+2})(1-x/p)(1-x^2/p)
//                       / ((1-x)(1-x^2)^2(1-x^3))
//   q = 2 != p      : (1-x/2)(1-x^2/2) / ((1-x^2)(1-x^3))
//   q = 3 != p      : (x-3)(x^2-3) / (9(x-1)^2(x+1)(x^2+x+1))
rational_function closed_local(const Int& q, const Int& p, unsigned k);

// Generic Euler factor at q of zeta(2z) zeta(3z) / (zeta(z+1) zeta(2z+1)).
rational_function generic_factor(const Int& q);

// Coefficient of x^m is sum over v+2r = m of K_q(q^v, q^r) / q^{2v+3r}.
power_series truncated_local_D(kloosterman_table& table,
                               const signed_constant& c, const Int& q,
                               unsigned order);

// Per-coefficient comparison of the brute-force series against the closed
// form; exact rational equality.
std::vector<report_item> verify_local(kloosterman_table& table, const Int& q,
                                      const Int& p, unsigned k, int sign,
                                      unsigned order);

// The axis generating functions: r = 0 row and v = 0 column, against their
// displayed closed forms.  The v = 0 column is available for q != p.
std::vector<report_item> verify_intermediate(kloosterman_table& table,
                                             const Int& q, const Int& p,
                                             unsigned k, int sign,
                                             unsigned order);

// Factor-by-factor identity between the local closed forms and the Euler
// factors of zeta(2z)zeta(3z)/(zeta(z+1)zeta(2z+1)) times the p-part.
std::vector<report_item> global_consistency(const Int& p, unsigned k);

// p^k (1-p^{-(k+1)})/(1-p^{-1}) (1-p^{-(k+2)})/(1-p^{-2}), plus the
// independent Godement-Jacquet coefficient oracle.
Rat trivial_trace_factor(const Int& p, unsigned k);
Rat trivial_trace_factor_series_oracle(const Int& p, unsigned k);

std::string rat_str(const Rat& r);

}  // namespace orderzeta

#endif
