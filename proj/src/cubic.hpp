#ifndef ORDERZETA_CUBIC_HPP
#define ORDERZETA_CUBIC_HPP

#include <array>
#include <cstdint>
#include <iosfwd>

#include "arith.hpp"

namespace orderzeta {

// c = sign * p^k, the fixed determinant of the contributing classes.
struct signed_constant {
    Int p;
    unsigned k = 1;
    int sign = +1;  // +1 or -1

    Int value() const { return sign >= 0 ? pow_int(p, k) : -pow_int(p, k); }
};

// c3 x^3 + c2 x^2 y + c1 x y^2 + c0 y^3 with integer coefficients.
struct binary_cubic_form {
    Int c3, c2, c1, c0;

    bool operator==(const binary_cubic_form&) const = default;

    // Disc of the form; for (1,-a,b,-c) this is the discriminant of
    // X^3 - aX^2 + bX - c.
    Int disc() const;
};

// Same shape with rational coefficients; produced by the GL(2) action.
struct rational_cubic_form {
    Rat c3, c2, c1, c0;

    bool is_integral() const;
    binary_cubic_form to_integral() const;  // throws unless is_integral()
    Rat disc() const;
};

struct gl2_matrix {
    Int a, b, c, d;  // row-major [[a,b],[c,d]]
    Int det() const { return a * d - b * c; }
};

// The monogenic parameter form (1, -a, b, -c) of X^3 - aX^2 + bX - c.
binary_cubic_form parameter_form(const Int& a, const Int& b, const Int& c);

// Pol(a,b,c) = a^2 b^2 - 4 b^3 - 4 a^3 c + 18 a b c - 27 c^2.
Int discriminant(const Int& a, const Int& b, const Int& c);

// f^g(x,y) = det(g) f((x,y) g^{-1}), exact rational coefficients.
rational_cubic_form act(const rational_cubic_form& f, const gl2_matrix& g);
rational_cubic_form act(const binary_cubic_form& f, const gl2_matrix& g);

bool is_primitive_at(const binary_cubic_form& f, const Int& q);

// Rational root test: X^3 - aX^2 + bX - c.value() has no root among
// +-p^t, t = 0..k.
bool is_contributing(const Int& a, const Int& b, const signed_constant& c);

enum class splitting_type : uint8_t {
    s111,    // three distinct linear factors
    s12,     // linear times irreducible quadratic
    s3,      // irreducible cubic
    s11sq,   // double root plus simple root
    s1cube,  // triple root
    zero,    // identically zero mod q
};

const char* splitting_type_name(splitting_type t);

// Classify f mod q by scanning P^1(F_q) for roots with multiplicity.
splitting_type splitting_type_of(const binary_cubic_form& f, const Int& q);

// Residue classifier on int64 residues (coefficients already reduced mod q).
splitting_type classify_mod_q(int64_t c3, int64_t c2, int64_t c1, int64_t c0,
                              int64_t q);

// Coefficient of x^v in the local zeta ratio attached to the type.
long w_coefficient(splitting_type t, unsigned v);

// t = 0 -> 1; t = 1 -> 1 iff f is imprimitive at q (non-Gorenstein);
// t >= 2 -> 0 (square-free support only).
int a_coefficient(const binary_cubic_form& f, const Int& q, unsigned t);

std::ostream& operator<<(std::ostream& os, const binary_cubic_form& f);

}  // namespace orderzeta

#endif
