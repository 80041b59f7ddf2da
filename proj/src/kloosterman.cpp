#include "kloosterman.hpp"

#include <algorithm>
#include <thread>

namespace orderzeta {

int64_t census_counts::total() const {
    int64_t s = 0;
    for (const auto& row : by_beta)
        for (int64_t c : row) s += c;
    return s;
}

int64_t census_counts::total_of(splitting_type t) const {
    int64_t s = 0;
    for (const auto& row : by_beta) s += row[size_t(t)];
    return s;
}

namespace {

using i128 = __int128;

// Residual-type lookup table over F_q^4; index ((e3 q + e2) q + e1) q + e0.
// Worth precomputing only for small q; larger primes classify directly.
constexpr int64_t kTableMaxQ = 23;

const std::vector<uint8_t>& classify_table(int64_t q) {
    static std::map<int64_t, std::vector<uint8_t>> tables;
    auto it = tables.find(q);
    if (it != tables.end()) return it->second;
    std::vector<uint8_t> t(size_t(q) * q * q * q);
    for (int64_t e3 = 0; e3 < q; ++e3)
        for (int64_t e2 = 0; e2 < q; ++e2)
            for (int64_t e1 = 0; e1 < q; ++e1)
                for (int64_t e0 = 0; e0 < q; ++e0)
                    t[size_t(((e3 * q + e2) * q + e1) * q + e0)] =
                        uint8_t(classify_mod_q(e3, e2, e1, e0, q));
    return tables.emplace(q, std::move(t)).first->second;
}

struct census_task {
    int64_t q;
    unsigned r;
    unsigned m_exp;
    bool typed;
    int64_t box;      // q^{m_exp}
    int64_t cv_big;   // |c| is guarded so the constant fits int64
    // per-beta precomputed moduli
    struct stratum {
        unsigned beta;
        int64_t m1, m2, m3;       // q^beta, q^{r-beta}, q^{2r-3beta}
        int64_t m3q;              // one extra digit for the c0 residual read
        int64_t ubound;           // q^{r-2beta}
        int64_t qpow_r3b_mod_q;   // q^{r-3beta} mod q (c3 digit)
    };
    std::vector<stratum> strata;
};

// Scan a in [a_lo, a_hi); for each stratum and each u passing the first
// congruence, walk b along the arithmetic progression fixed by the second
// congruence and test the third incrementally.
void census_range(const census_task& T, int64_t a_lo, int64_t a_hi,
                  std::vector<std::array<int64_t, 6>>& acc) {
    const int64_t q = T.q;
    const int64_t box = T.box;
    const std::vector<uint8_t>* table =
        (T.typed && q <= kTableMaxQ) ? &classify_table(q) : nullptr;
    for (int64_t a = a_lo; a < a_hi; ++a) {
        for (const auto& S : T.strata) {
            for (int64_t u = 0; u < S.ubound; ++u) {
                if (S.m1 > 1 && (a + 3 * u) % S.m1 != 0) continue;
                i128 u2 = i128(u) * u;
                i128 quad = 3 * u2 + 2 * i128(a) * u;
                int64_t b0 = int64_t((S.m2 - quad % S.m2) % S.m2);
                // cubic residue tracker mod m3 along b = b0 + j m2
                i128 cube0 = i128(u) * u * u + i128(a) * u2;
                int64_t cur =
                    int64_t(((cube0 + i128(b0) * u + T.cv_big) % S.m3 + S.m3) %
                            S.m3);
                int64_t step = int64_t((i128(u) * S.m2) % S.m3);
                for (int64_t b = b0; b < box; b += S.m2) {
                    if (cur == 0) {
                        if (!T.typed) {
                            acc[S.beta][0] += 1;  // slot 0 reused as count
                        } else {
                            int64_t n2 = a + 3 * u;
                            i128 n1 = 3 * u2 + 2 * i128(a) * u + b;
                            i128 n0 = cube0 + i128(b) * u + T.cv_big;
                            int64_t e3 = S.qpow_r3b_mod_q;
                            int64_t e2 = (q - (n2 / S.m1) % q) % q;
                            int64_t e1 = int64_t((n1 / S.m2) % q);
                            int64_t d0 = int64_t((((n0 % S.m3q) + S.m3q) %
                                                  S.m3q) / S.m3);
                            int64_t e0 = (q - d0) % q;
                            uint8_t ty =
                                table ? (*table)[size_t(
                                            ((e3 * q + e2) * q + e1) * q +
                                            e0)]
                                      : uint8_t(classify_mod_q(e3, e2, e1,
                                                               e0, q));
                            acc[S.beta][ty] += 1;
                        }
                    }
                    cur += step;
                    if (cur >= S.m3) cur -= S.m3;
                }
            }
        }
    }
}

int64_t checked_pow(int64_t q, unsigned e, int64_t limit) {
    int64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > limit / q) throw resource_error("modulus overflows cost guard",
                                                pow_int(Int(q), 2 * e));
        r *= q;
    }
    return r;
}

}  // namespace

census_counts census(int64_t q, const Int& cval, unsigned r, unsigned m_exp,
                     bool typed, const local_options& opt) {
    if (q < 2 || !is_prime(Int(q))) throw parameter_error("census: q not prime");
    if (m_exp < 2 * r) throw precision_error("census: modulus below q^{2r}");
    if (typed && m_exp < 2 * r + 1)
        throw precision_error("census: typed census needs q^{2r+1}");

    Int pairs = pow_int(Int(q), 2 * m_exp);
    if (pairs > opt.pair_budget)
        throw resource_error("census: pair budget exceeded", pairs);
    // The budget bound also keeps every intermediate inside __int128.
    int64_t box = checked_pow(q, m_exp, int64_t(1) << 21);

    census_task T;
    T.q = q;
    T.r = r;
    T.m_exp = m_exp;
    T.typed = typed;
    T.box = box;
    Int cabs = abs(cval);
    if (cabs >= (Int(1) << 40))
        throw resource_error("census: constant too large for residue core",
                             cabs);
    T.cv_big = cval.get_si();

    for (unsigned beta = 0; 3 * beta <= r; ++beta) {
        census_task::stratum S;
        S.beta = beta;
        S.m1 = pow_i64(q, beta);
        S.m2 = pow_i64(q, r - beta);
        S.m3 = pow_i64(q, 2 * r - 3 * beta);
        S.m3q = S.m3 * q;
        S.ubound = pow_i64(q, r - 2 * beta);
        S.qpow_r3b_mod_q = (r == 3 * beta) ? 1 : 0;
        T.strata.push_back(S);
    }

    int workers = opt.workers > 0
                      ? opt.workers
                      : int(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::max(1, std::min<int>(workers, 64));
    if (box < 4096) workers = 1;  // not worth spawning threads

    size_t nbeta = T.strata.size();
    std::vector<std::vector<std::array<int64_t, 6>>> partial(
        size_t(workers),
        std::vector<std::array<int64_t, 6>>(nbeta, {0, 0, 0, 0, 0, 0}));

    if (workers == 1) {
        census_range(T, 0, box, partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            int64_t lo = box * w / workers;
            int64_t hi = box * (w + 1) / workers;
            pool.emplace_back(census_range, std::cref(T), lo, hi,
                              std::ref(partial[size_t(w)]));
        }
        for (auto& th : pool) th.join();
    }

    census_counts out;
    out.r = r;
    out.typed = typed;
    out.by_beta.assign(nbeta, {0, 0, 0, 0, 0, 0});
    for (int w = 0; w < workers; ++w)
        for (size_t b = 0; b < nbeta; ++b)
            for (size_t t = 0; t < 6; ++t)
                out.by_beta[b][t] += partial[size_t(w)][b][t];
    return out;
}

long type_contribution(splitting_type t, unsigned v, int64_t q) {
    long c = w_coefficient(t, v);
    if (t == splitting_type::zero && v == 1) c += long(q);
    return c;
}

Int local_K_full(int64_t q, const signed_constant& c, unsigned v, unsigned r,
                 const local_options& opt) {
    if (v == 0) {
        census_counts cc = census(q, c.value(), r, 2 * r, false, opt);
        return Int(cc.total());
    }
    census_counts cc = census(q, c.value(), r, v + 2 * r, true, opt);
    Int k = 0;
    for (const auto& row : cc.by_beta)
        for (size_t t = 0; t < 6; ++t)
            k += Int(row[t]) * type_contribution(splitting_type(t), v, q);
    return k;
}

Int local_K_reduced(int64_t q, const signed_constant& c, unsigned v,
                    unsigned r, const local_options& opt) {
    if (v == 0)
        throw parameter_error("local_K_reduced: requires v >= 1");
    census_counts cc = census(q, c.value(), r, 2 * r + 1, true, opt);
    Int k = 0;
    for (const auto& row : cc.by_beta)
        for (size_t t = 0; t < 6; ++t)
            k += Int(row[t]) * type_contribution(splitting_type(t), v, q);
    return k * pow_int(Int(q), 2 * (v + 2 * r - (2 * r + 1)));
}

Int local_K(int64_t q, const signed_constant& c, unsigned v, unsigned r,
            const local_options& opt) {
    if (v >= 2) return local_K_reduced(q, c, v, r, opt);
    return local_K_full(q, c, v, r, opt);
}

const Int& kloosterman_table::get(int64_t q, const signed_constant& c,
                                  unsigned v, unsigned r) {
    key k{q, c.p, c.k, c.sign, v, r};
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    Int val = local_K(q, c, v, r, opt_);
    return cache_.emplace(k, std::move(val)).first->second;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    std::vector<std::pair<Int, unsigned>> out;
    Int m = n;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            unsigned e = 0;
            while (m % d == 0) { m /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

Int global_K(const Int& n, const Int& f, const signed_constant& c,
             const local_options& opt) {
    if (n < 1 || f < 1) throw parameter_error("global_K: need n, f >= 1");
    std::map<Int, std::pair<unsigned, unsigned>> exps;  // q -> (e, r)
    for (const auto& [q, e] : factorize(n)) exps[q].first = e;
    for (const auto& [q, e] : factorize(f)) exps[q].second = e;
    Int prod = 1;
    for (const auto& [q, er] : exps)
        prod *= local_K(q.get_si(), c, er.first, er.second, opt);
    return prod;
}

namespace {

// Residual data of one local overorder: splitting type plus whether the
// transformed form stays primitive (Gorenstein).
using local_datum = std::pair<splitting_type, bool>;

// Evaluator for the defining double sum at fixed (n, f): local solution
// lists and parent splitting types are memoized on the residue classes
// they actually depend on.
struct direct_evaluator {
    Int n;
    signed_constant c;
    // Memoization keys classes mod q^{e+2r}; periodicity checks must see
    // the actual lifted integers, so they run with use_memo = false.
    bool use_memo = true;
    std::vector<std::pair<Int, unsigned>> nfac, ffac;
    std::vector<Int> divisors;
    std::vector<std::vector<unsigned>> expvecs;  // exponent of nfac[i] in d

    struct f_layer {
        Int q;
        unsigned r = 0;
        unsigned e = 0;       // exponent of q in n
        long modulus = 0;     // memo modulus q^{e+2r} (or q^{2r} if e = 0)
        // memo: class index -> solution data (typed) or count (untyped)
        std::vector<std::vector<local_datum>> typed_memo;
        std::vector<int> count_memo;
        std::vector<bool> seen;
    };
    std::vector<f_layer> flayers;

    struct n_layer {
        Int q;
        unsigned e = 0;
        std::vector<splitting_type> types;  // indexed by (a mod q) q + b mod q
    };
    std::vector<n_layer> nlayers;

    std::vector<local_datum> compute_typed(const f_layer& L, const Int& a,
                                           const Int& b) const {
        std::vector<local_datum> out;
        for (const auto& rep : solve_system(a, b, c, L.q, L.r, L.e + 2 * L.r)) {
            binary_cubic_form t = transform_solution(a, b, c, L.q, rep);
            out.emplace_back(splitting_type_of(t, L.q),
                             is_primitive_at(t, L.q));
        }
        return out;
    }

    direct_evaluator(const Int& n_, const Int& f_, const signed_constant& c_,
                     bool memoize = true)
        : n(n_), c(c_), use_memo(memoize) {
        nfac = factorize(n_);
        ffac = factorize(f_);
        for (const auto& [q, r] : ffac) {
            f_layer L;
            L.q = q;
            L.r = r;
            for (const auto& [nq, e] : nfac)
                if (nq == q) L.e = e;
            L.modulus = pow_int(q, L.e + 2 * r).get_si();
            size_t classes = size_t(L.modulus) * size_t(L.modulus);
            L.seen.assign(classes, false);
            if (L.e > 0)
                L.typed_memo.resize(classes);
            else
                L.count_memo.assign(classes, 0);
            flayers.push_back(std::move(L));
        }
        for (const auto& [q, e] : nfac) {
            bool in_f = false;
            for (const auto& [fq, fr] : ffac) in_f = in_f || fq == q;
            if (in_f) continue;
            n_layer L;
            L.q = q;
            L.e = e;
            long qq = q.get_si();
            L.types.resize(size_t(qq) * qq);
            for (long ar = 0; ar < qq; ++ar)
                for (long br = 0; br < qq; ++br)
                    L.types[size_t(ar) * qq + br] = splitting_type_of(
                        parameter_form(ar, br, c.value()), q);
            nlayers.push_back(std::move(L));
        }
        divisors.push_back(1);
        expvecs.push_back(std::vector<unsigned>(nfac.size(), 0));
        for (size_t i = 0; i < nfac.size(); ++i) {
            size_t cur = divisors.size();
            Int pw = 1;
            for (unsigned e = 1; e <= nfac[i].second; ++e) {
                pw *= nfac[i].first;
                for (size_t j = 0; j < cur; ++j) {
                    divisors.push_back(divisors[j] * pw);
                    auto ev = expvecs[j];
                    ev[i] = e;
                    expvecs.push_back(std::move(ev));
                }
            }
        }
    }

    const std::vector<local_datum>& typed_data(
        f_layer& L, const Int& a, const Int& b,
        std::vector<local_datum>& fresh) {
        if (!use_memo) {
            fresh = compute_typed(L, a, b);
            return fresh;
        }
        size_t idx = size_t(mod_pos(a, L.modulus).get_si()) *
                         size_t(L.modulus) +
                     size_t(mod_pos(b, L.modulus).get_si());
        if (!L.seen[idx]) {
            L.seen[idx] = true;
            L.typed_memo[idx] = compute_typed(L, a, b);
        }
        return L.typed_memo[idx];
    }

    int untyped_count(f_layer& L, const Int& a, const Int& b) {
        if (!use_memo)
            return int(solve_system(a, b, c, L.q, L.r, 2 * L.r).size());
        size_t idx = size_t(mod_pos(a, L.modulus).get_si()) *
                         size_t(L.modulus) +
                     size_t(mod_pos(b, L.modulus).get_si());
        if (!L.seen[idx]) {
            L.seen[idx] = true;
            L.count_memo[idx] =
                int(solve_system(a, b, c, L.q, L.r, 2 * L.r).size());
        }
        return L.count_memo[idx];
    }

    // For each divisor d of n (in this->divisors order), the sum over
    // index-f overorders of a_R(d) W_R(n/d).
    void divisor_sums(const Int& a, const Int& b, std::vector<long>& sums) {
        sums.assign(divisors.size(), 0);
        long untyped_mult = 1;
        std::vector<const std::vector<local_datum>*> typed;
        std::vector<std::vector<local_datum>> fresh(flayers.size());
        std::vector<unsigned> typed_e;      // exponent in n
        std::vector<size_t> typed_facpos;   // position in nfac
        for (size_t fi = 0; fi < flayers.size(); ++fi) {
            f_layer& L = flayers[fi];
            if (L.e > 0) {
                const auto& data = typed_data(L, a, b, fresh[fi]);
                if (data.empty()) return;
                typed.push_back(&data);
                typed_e.push_back(L.e);
                size_t pos = 0;
                while (nfac[pos].first != L.q) ++pos;
                typed_facpos.push_back(pos);
            } else {
                untyped_mult *= untyped_count(L, a, b);
            }
        }
        if (untyped_mult == 0) return;
        std::vector<local_datum> parent_data;
        std::vector<size_t> parent_facpos;
        for (const auto& L : nlayers) {
            long qq = L.q.get_si();
            splitting_type ty =
                use_memo ? L.types[size_t(mod_pos(a, L.q).get_si()) * qq +
                                   size_t(mod_pos(b, L.q).get_si())]
                         : splitting_type_of(
                               parameter_form(a, b, c.value()), L.q);
            parent_data.emplace_back(ty, true);
            size_t pos = 0;
            while (nfac[pos].first != L.q) ++pos;
            parent_facpos.push_back(pos);
        }

        std::vector<size_t> idx(typed.size(), 0);
        while (true) {
            for (size_t di = 0; di < divisors.size(); ++di) {
                const auto& ev = expvecs[di];
                bool a_ok = true;
                long w = 1;
                for (size_t li = 0; li < typed.size() && a_ok; ++li) {
                    auto [ty, gor] = (*typed[li])[idx[li]];
                    unsigned ed = ev[typed_facpos[li]];
                    if (ed >= 2 || (ed == 1 && gor)) { a_ok = false; break; }
                    w *= w_coefficient(ty, typed_e[li] - ed);
                }
                for (size_t li = 0; li < parent_data.size() && a_ok; ++li) {
                    auto [ty, gor] = parent_data[li];
                    unsigned ed = ev[parent_facpos[li]];
                    unsigned e = nfac[parent_facpos[li]].second;
                    if (ed >= 2 || (ed == 1 && gor)) { a_ok = false; break; }
                    w *= w_coefficient(ty, e - ed);
                }
                if (a_ok) sums[di] += w * untyped_mult;
            }
            size_t li = 0;
            for (; li < typed.size(); ++li) {
                if (++idx[li] < typed[li]->size()) break;
                idx[li] = 0;
            }
            if (li == typed.size()) break;
        }
    }
};

}  // namespace

Int global_K_direct(const Int& n, const Int& f, const signed_constant& c,
                    const local_options& opt) {
    if (n < 1 || f < 1) throw parameter_error("global_K_direct: n, f >= 1");
    Int N = n * f * f;
    Int pairs = N * N;
    if (pairs > opt.pair_budget)
        throw resource_error("global_K_direct: pair budget exceeded", pairs);
    direct_evaluator ev(n, f, c);
    Int total = 0;
    std::vector<long> sums;
    for (Int a = 0; a < N; ++a)
        for (Int b = 0; b < N; ++b) {
            ev.divisor_sums(a, b, sums);
            for (size_t i = 0; i < sums.size(); ++i)
                total += ev.divisors[i] * sums[i];
        }
    return total;
}

bool periodicity_check(const Int& n, const Int& f, const signed_constant& c,
                       unsigned multiplier, const local_options& opt) {
    if (multiplier < 2) throw parameter_error("periodicity_check: m >= 2");
    Int N = n * f * f;
    Int pairs = N * N * multiplier * multiplier;
    if (pairs > opt.pair_budget)
        throw resource_error("periodicity_check: pair budget exceeded", pairs);
    direct_evaluator ev(n, f, c, /*memoize=*/false);
    std::vector<long> sums0, sums1;
    for (Int a = 0; a < N; ++a)
        for (Int b = 0; b < N; ++b) {
            ev.divisor_sums(a, b, sums0);
            for (unsigned i = 0; i < multiplier; ++i)
                for (unsigned j = 0; j < multiplier; ++j) {
                    if (i == 0 && j == 0) continue;
                    ev.divisor_sums(a + N * i, b + N * j, sums1);
                    if (sums1 != sums0) return false;
                }
        }
    return true;
}

}  // namespace orderzeta
