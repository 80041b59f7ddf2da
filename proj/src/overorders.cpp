#include "overorders.hpp"

#include <algorithm>

namespace orderzeta {

gl2_matrix coset_rep::matrix(const Int& q) const {
    return {pow_int(q, beta), 0, u * pow_int(q, beta), pow_int(q, r - beta)};
}

std::vector<iwasawa_rep> coset_reps(const Int& q, unsigned r) {
    std::vector<iwasawa_rep> out;
    for (unsigned beta = 0; beta <= r; ++beta) {
        Int bound = pow_int(q, r - beta);
        for (Int w = 0; w < bound; ++w) out.push_back({beta, w});
    }
    return out;
}

namespace {

// Small-value route: everything fits __int128 comfortably.
bool solve_system_small(int64_t a, int64_t b, int64_t cv, int64_t q,
                        unsigned r, std::vector<coset_rep>& out) {
    using i128 = __int128;
    for (unsigned beta = 0; 3 * beta <= r; ++beta) {
        int64_t m1 = pow_i64(q, beta);
        int64_t m2 = pow_i64(q, r - beta);
        int64_t m3 = pow_i64(q, 2 * r - 3 * beta);
        int64_t ubound = pow_i64(q, r - 2 * beta);
        for (int64_t u = 0; u < ubound; ++u) {
            if (((a + 3 * u) % m1 + m1) % m1 != 0) continue;
            i128 u2 = i128(u) * u;
            if (((3 * u2 + 2 * i128(a) * u + b) % m2 + m2) % m2 != 0) continue;
            i128 cubic = u2 * u + i128(a) * u2 + i128(b) * u + cv;
            if ((cubic % m3 + m3) % m3 != 0) continue;
            out.push_back({beta, Int(long(u)), r});
        }
    }
    return true;
}

}  // namespace

std::vector<coset_rep> solve_system(const Int& a, const Int& b,
                                    const signed_constant& c, const Int& q,
                                    unsigned r, unsigned precision_exp) {
    if (precision_exp < 2 * r)
        throw precision_error("solve_system: (a,b) precision below q^{2r}");
    std::vector<coset_rep> out;
    Int cv = c.value();
    const Int small_bound = Int(1) << 30;
    if (abs(a) < small_bound && abs(b) < small_bound &&
        abs(cv) < small_bound && q < 64 &&
        pow_int(q, 2 * r) < small_bound) {
        solve_system_small(a.get_si(), b.get_si(), cv.get_si(), q.get_si(), r,
                           out);
        return out;
    }
    for (unsigned beta = 0; 3 * beta <= r; ++beta) {
        Int m1 = pow_int(q, beta);
        Int m2 = pow_int(q, r - beta);
        Int m3 = pow_int(q, 2 * r - 3 * beta);
        Int ubound = pow_int(q, r - 2 * beta);
        for (Int u = 0; u < ubound; ++u) {
            if (mod_pos(a + 3 * u, m1) != 0) continue;
            if (mod_pos(3 * u * u + 2 * a * u + b, m2) != 0) continue;
            if (mod_pos(u * u * u + a * u * u + b * u + cv, m3) != 0) continue;
            out.push_back({beta, u, r});
        }
    }
    return out;
}

binary_cubic_form transform_solution(const Int& a, const Int& b,
                                     const signed_constant& c, const Int& q,
                                     const coset_rep& rep) {
    unsigned beta = rep.beta, r = rep.r;
    const Int& u = rep.u;
    Int cv = c.value();
    Int m1 = pow_int(q, beta);
    Int m2 = pow_int(q, r - beta);
    Int m3 = pow_int(q, 2 * r - 3 * beta);
    Int n2 = a + 3 * u;
    Int n1 = 3 * u * u + 2 * a * u + b;
    Int n0 = u * u * u + a * u * u + b * u + cv;
    if (n2 % m1 != 0 || n1 % m2 != 0 || n0 % m3 != 0)
        throw internal_error(
            "transform_solution: claimed solution fails integrality");
    return {pow_int(q, r - 3 * beta), -(n2 / m1), n1 / m2, -(n0 / m3)};
}

std::vector<overorder> enumerate_overorders(const Int& a, const Int& b,
                                            const signed_constant& c,
                                            const Int& q, unsigned r) {
    binary_cubic_form parent = parameter_form(a, b, c.value());
    std::vector<overorder> out;
    for (const coset_rep& rep : solve_system(a, b, c, q, r, 2 * r)) {
        out.push_back({parent, transform_solution(a, b, c, q, rep), rep, q, r});
    }
    return out;
}

std::vector<overorder> oracle_enumerate(const Int& a, const Int& b,
                                        const signed_constant& c, const Int& q,
                                        unsigned r) {
    binary_cubic_form parent = parameter_form(a, b, c.value());
    Int cv = c.value();
    Int det2 = pow_int(q, 2 * r);
    std::vector<overorder> out;
    for (const iwasawa_rep& rep : coset_reps(q, r)) {
        // Substitute X = P x - w y, Y = T y into (1, -a, b, -c) and divide
        // by det^2 = (PT)^2; integral exactly when det^2 divides each
        // numerator.  Same action as act(), kept in integer arithmetic.
        Int P = pow_int(q, r - rep.beta);
        Int T = pow_int(q, rep.beta);
        const Int& w = rep.w;
        Int n3 = P * P * P;
        Int n2 = -(P * P) * (3 * w + a * T);
        Int n1 = P * (3 * w * w + 2 * a * w * T + b * T * T);
        Int n0 = -(w * w * w + a * w * w * T + b * w * T * T + cv * T * T * T);
        if (n3 % det2 != 0 || n2 % det2 != 0 || n1 % det2 != 0 ||
            n0 % det2 != 0)
            continue;
        coset_rep cr;
        cr.beta = rep.beta;
        cr.r = r;
        cr.u = (w % T == 0) ? Int(w / T) : Int(-1);
        out.push_back({parent,
                       {n3 / det2, n2 / det2, n1 / det2, n0 / det2},
                       cr,
                       q,
                       r});
    }
    return out;
}

std::vector<std::pair<unsigned, Int>> coset_ids(
    const std::vector<overorder>& v, const Int& q) {
    std::vector<std::pair<unsigned, Int>> ids;
    ids.reserve(v.size());
    for (const overorder& o : v) {
        Int w = o.rep.u < 0 ? Int(-1)
                            : mod_pos(o.rep.u * pow_int(q, o.rep.beta),
                                      pow_int(q, o.r - o.rep.beta));
        ids.emplace_back(o.rep.beta, w);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace orderzeta
