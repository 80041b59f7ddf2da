#ifndef ORDERZETA_OVERORDERS_HPP
#define ORDERZETA_OVERORDERS_HPP

#include <vector>

#include "cubic.hpp"

namespace orderzeta {

// Lower-triangular coset representative [[q^beta, 0], [u q^beta, q^{r-beta}]]
// with 3 beta <= r and u mod q^{r-2 beta} (u stores the rescaled variable).
struct coset_rep {
    unsigned beta = 0;
    Int u = 0;
    unsigned r = 0;

    gl2_matrix matrix(const Int& q) const;
    // The unrescaled lower-left entry mod q^{r-beta}; identifies the coset
    // among the Iwasawa representatives.
    Int lower_entry(const Int& q) const { return u * pow_int(q, beta); }
    bool operator==(const coset_rep&) const = default;
};

// All Iwasawa representatives [[q^b, 0], [w, q^{r-b}]], w mod q^{r-b};
// count is sum_{b=0}^{r} q^{r-b}.
struct iwasawa_rep {
    unsigned beta;
    Int w;  // unrescaled, mod q^{r-beta}
};
std::vector<iwasawa_rep> coset_reps(const Int& q, unsigned r);

struct overorder {
    binary_cubic_form parent;
    binary_cubic_form transformed;
    coset_rep rep;
    Int q;
    unsigned r;
};

// Solutions (beta, u) of
//   a + 3u = 0               (mod q^beta)
//   3u^2 + 2au + b = 0       (mod q^{r-beta})
//   u^3 + au^2 + bu + c = 0  (mod q^{2r-3beta})
// over 0 <= 3 beta <= r, u mod q^{r-2 beta}.  r = 0 yields the single empty
// solution.  (a, b) must be given to precision at least q^{2r}.
std::vector<coset_rep> solve_system(const Int& a, const Int& b,
                                    const signed_constant& c, const Int& q,
                                    unsigned r, unsigned precision_exp);

// Transformed integral form of a system solution:
//   (q^{r-3b}, -(a+3u)/q^b, (3u^2+2au+b)/q^{r-b}, -(u^3+au^2+bu+c)/q^{2r-3b});
// throws internal_error if any claimed divisibility fails.
binary_cubic_form transform_solution(const Int& a, const Int& b,
                                     const signed_constant& c, const Int& q,
                                     const coset_rep& rep);

// Overorders of index q^r of R(a,b) via the congruence system.
std::vector<overorder> enumerate_overorders(const Int& a, const Int& b,
                                            const signed_constant& c,
                                            const Int& q, unsigned r);

// Independent route: scan every Iwasawa coset, apply the exact rational
// action and keep the representatives with integral transform.
std::vector<overorder> oracle_enumerate(const Int& a, const Int& b,
                                        const signed_constant& c, const Int& q,
                                        unsigned r);

// Coset identities (beta, unrescaled lower entry), sorted; equality of the
// two enumerations is compared through this.
std::vector<std::pair<unsigned, Int>> coset_ids(
    const std::vector<overorder>& v, const Int& q);

}  // namespace orderzeta

#endif
