#ifndef ORDERZETA_ARITH_HPP
#define ORDERZETA_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orderzeta {

using Int = mpz_class;
using Rat = mpq_class;

struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct precision_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a computation would exceed the configured pair budget.
struct resource_error : std::runtime_error {
    Int estimated_pairs;
    resource_error(const std::string& what, Int pairs)
        : std::runtime_error(what), estimated_pairs(std::move(pairs)) {}
};

// Signals an arithmetic inconsistency (e.g. a congruence solution whose
// transformed form fails to be integral).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

Int pow_int(const Int& base, unsigned long e);
int64_t pow_i64(int64_t base, unsigned e);

// Nonnegative remainder of x mod m, m > 0.
Int mod_pos(const Int& x, const Int& m);

// Trial division; adequate for desk-scale inputs.
bool is_prime(const Int& n);

// q-adic valuation. exponent of 0 is the infinity sentinel.
struct valuation {
    Int prime;
    unsigned long exponent = 0;
    bool infinite = false;
};

valuation valuate(const Int& m, const Int& q);

// n(c) = #{r in F_q : r^3 = c}, by enumeration of F_q.
struct cube_root_count_result {
    Int prime;
    Int target;  // reduced mod q
    int count;   // 0, 1 or 3 for units; cube roots of 0 count once
};

cube_root_count_result cube_root_count(const Int& q, const Int& c);

// All u mod q^beta with u^3 = c, for q not dividing 3c: the roots mod q
// lift uniquely (Hensel).  q = 3 is routed to a 3-adic variant where roots
// mod 9 govern all higher levels.
std::vector<Int> hensel_cube_roots(const Int& q, const Int& c, unsigned beta);

}  // namespace orderzeta

#endif
