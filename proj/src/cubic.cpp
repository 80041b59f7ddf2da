#include "cubic.hpp"

#include <ostream>
#include <vector>

namespace orderzeta {

Int binary_cubic_form::disc() const {
    const Int &a = c3, &b = c2, &c = c1, &d = c0;
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d -
           27 * a * a * d * d + 18 * a * b * c * d;
}

bool rational_cubic_form::is_integral() const {
    return c3.get_den() == 1 && c2.get_den() == 1 && c1.get_den() == 1 &&
           c0.get_den() == 1;
}

binary_cubic_form rational_cubic_form::to_integral() const {
    if (!is_integral())
        throw internal_error("rational_cubic_form: coefficients not integral");
    return {c3.get_num(), c2.get_num(), c1.get_num(), c0.get_num()};
}

Rat rational_cubic_form::disc() const {
    const Rat &a = c3, &b = c2, &c = c1, &d = c0;
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d -
           27 * a * a * d * d + 18 * a * b * c * d;
}

binary_cubic_form parameter_form(const Int& a, const Int& b, const Int& c) {
    return {1, -a, b, -c};
}

Int discriminant(const Int& a, const Int& b, const Int& c) {
    return a * a * b * b - 4 * b * b * b - 4 * a * a * a * c + 18 * a * b * c -
           27 * c * c;
}

rational_cubic_form act(const rational_cubic_form& f, const gl2_matrix& g) {
    Int det = g.det();
    if (det == 0) throw parameter_error("act: singular matrix");
    // (x,y) g^{-1} = ((g.d x - g.c y)/det, (-g.b x + g.a y)/det), so with
    // X = p x + r y, Y = s x + t y below,
    // f^g = det * f(X/det, Y/det) = f(X, Y) / det^2.
    Int p = g.d, r = -g.c, s = -g.b, t = g.a;
    Rat n3 = f.c3 * (p * p * p) + f.c2 * (p * p * s) + f.c1 * (p * s * s) +
             f.c0 * (s * s * s);
    Rat n2 = f.c3 * (3 * p * p * r) + f.c2 * (p * p * t + 2 * p * r * s) +
             f.c1 * (2 * p * s * t + r * s * s) + f.c0 * (3 * s * s * t);
    Rat n1 = f.c3 * (3 * p * r * r) + f.c2 * (2 * p * r * t + r * r * s) +
             f.c1 * (p * t * t + 2 * r * s * t) + f.c0 * (3 * s * t * t);
    Rat n0 = f.c3 * (r * r * r) + f.c2 * (r * r * t) + f.c1 * (r * t * t) +
             f.c0 * (t * t * t);
    Rat d2(det * det);
    rational_cubic_form out{n3 / d2, n2 / d2, n1 / d2, n0 / d2};
    out.c3.canonicalize();
    out.c2.canonicalize();
    out.c1.canonicalize();
    out.c0.canonicalize();
    return out;
}

rational_cubic_form act(const binary_cubic_form& f, const gl2_matrix& g) {
    return act(rational_cubic_form{Rat(f.c3), Rat(f.c2), Rat(f.c1), Rat(f.c0)},
               g);
}

bool is_primitive_at(const binary_cubic_form& f, const Int& q) {
    return !(f.c3 % q == 0 && f.c2 % q == 0 && f.c1 % q == 0 && f.c0 % q == 0);
}

bool is_contributing(const Int& a, const Int& b, const signed_constant& c) {
    Int cv = c.value();
    for (unsigned t = 0; t <= c.k; ++t) {
        Int pt = pow_int(c.p, t);
        for (int s : {+1, -1}) {
            Int x = s > 0 ? pt : -pt;
            if (x * x * x - a * x * x + b * x - cv == 0) return false;
        }
    }
    return true;
}

const char* splitting_type_name(splitting_type t) {
    switch (t) {
        case splitting_type::s111: return "(1,1,1)";
        case splitting_type::s12: return "(1,2)";
        case splitting_type::s3: return "(3)";
        case splitting_type::s11sq: return "(1,1^2)";
        case splitting_type::s1cube: return "(1^3)";
        case splitting_type::zero: return "0";
    }
    return "?";
}

splitting_type classify_mod_q(int64_t c3, int64_t c2, int64_t c1, int64_t c0,
                              int64_t q) {
    auto norm = [q](int64_t v) { return ((v % q) + q) % q; };
    int64_t f[4] = {norm(c3), norm(c2), norm(c1), norm(c0)};
    if (f[0] == 0 && f[1] == 0 && f[2] == 0 && f[3] == 0)
        return splitting_type::zero;

    // Roots in P^1(F_q) with multiplicity by repeated synthetic deflation;
    // coefficients sit by descending x-degree in cur[4-deg .. 3].
    int total = 0, distinct = 0;
    for (int64_t pt = 0; pt <= q && total < 3; ++pt) {
        int64_t cur[4] = {f[0], f[1], f[2], f[3]};
        int deg = 3, m = 0;
        if (pt < q) {
            // affine point (pt : 1); value by Horner
            int64_t r = pt;
            int64_t val = (((f[0] * r + f[1]) % q * r + f[2]) % q * r + f[3]) %
                          q;
            if (val != 0) continue;
            while (deg >= 1) {
                int64_t acc = 0;
                int base = 3 - deg;
                int64_t next[4];
                for (int i = 0; i <= deg; ++i) {
                    acc = (acc * r + cur[base + i]) % q;
                    if (i < deg) next[i] = acc;
                }
                if (acc != 0) break;
                ++m;
                --deg;
                for (int i = 0; i <= deg; ++i) cur[3 - deg + i] = next[i];
            }
        } else {
            // point at infinity (1 : 0), the factor y: drop the leading
            // coefficient while it vanishes
            if (f[0] != 0) continue;
            while (deg >= 1 && cur[3 - deg] == 0) {
                ++m;
                --deg;
            }
        }
        total += m;
        ++distinct;
    }

    if (total == 3) {
        if (distinct == 3) return splitting_type::s111;
        if (distinct == 2) return splitting_type::s11sq;
        return splitting_type::s1cube;
    }
    if (total == 1) return splitting_type::s12;
    if (total == 0) return splitting_type::s3;
    throw internal_error("classify_mod_q: impossible multiplicity pattern");
}

splitting_type splitting_type_of(const binary_cubic_form& f, const Int& q) {
    if (!is_prime(q)) throw parameter_error("splitting_type_of: q not prime");
    int64_t qq = q.get_si();
    auto red = [&](const Int& v) { return mod_pos(v, q).get_si(); };
    return classify_mod_q(red(f.c3), red(f.c2), red(f.c1), red(f.c0), qq);
}

long w_coefficient(splitting_type t, unsigned v) {
    if (v == 0) return 1;
    switch (t) {
        case splitting_type::s111: return long(v) + 1;
        case splitting_type::s12: return v % 2 == 0 ? 1 : 0;
        case splitting_type::s3: return v % 3 == 0 ? 1 : (v % 3 == 1 ? -1 : 0);
        case splitting_type::s11sq: return 1;
        case splitting_type::s1cube: return 0;
        case splitting_type::zero: return 0;
    }
    return 0;
}

int a_coefficient(const binary_cubic_form& f, const Int& q, unsigned t) {
    if (t == 0) return 1;
    if (t == 1) return is_primitive_at(f, q) ? 0 : 1;
    return 0;
}

std::ostream& operator<<(std::ostream& os, const binary_cubic_form& f) {
    return os << "(" << f.c3 << "," << f.c2 << "," << f.c1 << "," << f.c0
              << ")";
}

}  // namespace orderzeta
