#ifndef ORDERZETA_KLOOSTERMAN_HPP
#define ORDERZETA_KLOOSTERMAN_HPP

#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "overorders.hpp"

namespace orderzeta {

struct local_options {
    Int pair_budget = 300000000;  // admissible iff box^2 <= budget
    int workers = 0;              // 0 = hardware concurrency
};

// Per-(beta, residual type) solution counts of the congruence system over
// (a,b) mod q^{m_exp}.  Residual types are read off the transformed form
// mod q, which requires m_exp >= 2r+1; a count-only census (typed = false)
// is valid for any m_exp >= 2r.
struct census_counts {
    unsigned r = 0;
    bool typed = false;
    std::vector<std::array<int64_t, 6>> by_beta;  // [beta][splitting_type]

    int64_t total() const;
    int64_t total_of(splitting_type t) const;
};

census_counts census(int64_t q, const Int& cval, unsigned r, unsigned m_exp,
                     bool typed, const local_options& opt);

// Sum over t <= v of q^t a_R(q^t) W_R(q^{v-t}) for one overorder of
// residual type t.
long type_contribution(splitting_type t, unsigned v, int64_t q);

// K_q(q^v, q^r) over the full modulus q^{v+2r}.
Int local_K_full(int64_t q, const signed_constant& c, unsigned v, unsigned r,
                 const local_options& opt);

// Same value over (a,b) mod q^{2r+1} times the replication factor
// q^{2(v+2r-(2r+1))}; requires v >= 1.
Int local_K_reduced(int64_t q, const signed_constant& c, unsigned v,
                    unsigned r, const local_options& opt);

// Default dispatch: full modulus for v <= 1, reduced for v >= 2.
Int local_K(int64_t q, const signed_constant& c, unsigned v, unsigned r,
            const local_options& opt);

// Cache of local values keyed by (q, p, k, sign, v, r).
class kloosterman_table {
  public:
    explicit kloosterman_table(local_options opt = {}) : opt_(opt) {}

    const Int& get(int64_t q, const signed_constant& c, unsigned v,
                   unsigned r);
    const local_options& options() const { return opt_; }
    size_t size() const { return cache_.size(); }

    struct key {
        int64_t q;
        Int p;
        unsigned k;
        int sign;
        unsigned v;
        unsigned r;
        auto tie() const { return std::tie(q, p, k, sign, v, r); }
        bool operator<(const key& o) const { return tie() < o.tie(); }
    };
    const std::map<key, Int>& entries() const { return cache_; }

  private:
    local_options opt_;
    std::map<key, Int> cache_;
};

std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// K(n, f) as the product of local factors over primes dividing n*f.
Int global_K(const Int& n, const Int& f, const signed_constant& c,
             const local_options& opt);

// K(n, f) directly from the defining sum over (a,b) mod n f^2, assembling
// overorders prime by prime and using multiplicativity of a and W.
Int global_K_direct(const Int& n, const Int& f, const signed_constant& c,
                    const local_options& opt);

// True iff, for every divisor d of n, the inner sum over index-f overorders
// of a_R(d) W_R(n/d) is constant on residue classes (a,b) mod n f^2, tested
// on all lifts (a + n f^2 i, b + n f^2 j) with 0 <= i, j < multiplier.
bool periodicity_check(const Int& n, const Int& f, const signed_constant& c,
                       unsigned multiplier, const local_options& opt);

}  // namespace orderzeta

#endif
