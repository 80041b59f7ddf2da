#include "series.hpp"

#include <sstream>

namespace orderzeta {

poly poly::monomial(unsigned deg, const Rat& r) {
    poly p;
    p.c.assign(deg + 1, Rat(0));
    p.c[deg] = r;
    p.trim();
    return p;
}

void poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

poly poly::operator+(const poly& o) const {
    poly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

poly poly::operator-(const poly& o) const {
    poly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
}

poly poly::operator*(const poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    poly r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

std::pair<poly, poly> divmod(const poly& num, const poly& den) {
    if (den.is_zero()) throw parameter_error("divmod: zero denominator");
    poly q, r = num;
    int dd = den.degree();
    Rat lead = den.c.back();
    while (r.degree() >= dd) {
        int shift = r.degree() - dd;
        Rat factor = r.c.back() / lead;
        poly term = poly::monomial(unsigned(shift), factor);
        q = q + term;
        r = r - term * den;
    }
    return {q, r};
}

poly gcd(const poly& a, const poly& b) {
    poly x = a, y = b;
    while (!y.is_zero()) {
        poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    Rat lead = x.c.back();
    for (Rat& c : x.c) c /= lead;
    return x;
}

rational_function::rational_function(poly n, poly d) : num(n), den(d) {
    if (den.is_zero())
        throw parameter_error("rational_function: zero denominator");
    if (num.is_zero()) {
        den = poly{{Rat(1)}};
        return;
    }
    poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    Rat lead = den.c.back();
    for (Rat& c : num.c) c /= lead;
    for (Rat& c : den.c) c /= lead;
}

rational_function rational_function::operator+(
    const rational_function& o) const {
    return rational_function(num * o.den + o.num * den, den * o.den);
}

rational_function rational_function::operator-(
    const rational_function& o) const {
    return rational_function(num * o.den - o.num * den, den * o.den);
}

rational_function rational_function::operator*(
    const rational_function& o) const {
    return rational_function(num * o.num, den * o.den);
}

rational_function rational_function::operator/(
    const rational_function& o) const {
    if (o.num.is_zero()) throw parameter_error("rational_function: div by 0");
    return rational_function(num * o.den, den * o.num);
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string rational_function::str() const {
    auto poly_str = [](const poly& p) {
        if (p.is_zero()) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (int i = p.degree(); i >= 0; --i) {
            Rat c = p.coeff(unsigned(i));
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Rat a = abs(c);
            if (a != 1 || i == 0) os << a;
            if (i > 0) {
                if (a != 1) os << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    };
    std::string s = "(" + poly_str(num) + ")";
    if (den.degree() > 0 || den.coeff(0) != 1)
        s += " / (" + poly_str(den) + ")";
    return s;
}

power_series power_series::zero(unsigned order) {
    power_series s;
    s.order = order;
    s.c.assign(order + 1, Rat(0));
    return s;
}

power_series power_series::mul(const power_series& o) const {
    power_series r = zero(std::min(order, o.order));
    for (unsigned i = 0; i <= r.order; ++i)
        for (unsigned j = 0; i + j <= r.order; ++j)
            r.c[i + j] += c[i] * o.c[j];
    return r;
}

power_series power_series::add(const power_series& o) const {
    power_series r = zero(std::min(order, o.order));
    for (unsigned i = 0; i <= r.order; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

power_series taylor(const rational_function& f, unsigned order) {
    if (f.den.coeff(0) == 0)
        throw parameter_error("taylor: denominator vanishes at 0");
    power_series s = power_series::zero(order);
    // s = num * den^{-1} by the standard recursion
    //   s_m = (num_m - sum_{j=1..m} den_j s_{m-j}) / den_0.
    Rat d0 = f.den.coeff(0);
    for (unsigned m = 0; m <= order; ++m) {
        Rat v = f.num.coeff(m);
        for (unsigned j = 1; j <= m; ++j) v -= f.den.coeff(j) * s.c[m - j];
        s.c[m] = v / d0;
    }
    return s;
}

local_case classify_local_case(const Int& q, const Int& p) {
    if (q == p) return local_case::equal_p;
    if (q == 2) return local_case::two;
    if (q == 3) return local_case::three;
    return local_case::coprime;
}

namespace {

poly one_minus(unsigned deg, const Rat& coeff) {
    // 1 - coeff * x^deg
    poly p = poly::monomial(deg, -coeff);
    return p + poly{{Rat(1)}};
}

}  // namespace

rational_function closed_local(const Int& q, const Int& p, unsigned k) {
    if (!is_prime(q) || !is_prime(p))
        throw parameter_error("closed_local: q, p must be prime");
    switch (classify_local_case(q, p)) {
        case local_case::coprime: {
            poly num = one_minus(1, Rat(1, q)) * one_minus(2, Rat(1, q));
            poly den = one_minus(2, 1) * one_minus(3, 1);
            return {num, den};
        }
        case local_case::equal_p: {
            if (p == 2 || p == 3)
                throw parameter_error(
                    "closed_local: case q = p in {2,3} not covered");
            if (k < 1) throw parameter_error("closed_local: q = p needs k>=1");
            poly num = one_minus(k + 1, 1) * one_minus(k + 2, 1) *
                       one_minus(1, Rat(1, p)) * one_minus(2, Rat(1, p));
            poly den = one_minus(1, 1) * one_minus(2, 1) * one_minus(2, 1) *
                       one_minus(3, 1);
            return {num, den};
        }
        case local_case::two: {
            poly num = one_minus(1, Rat(1, 2)) * one_minus(2, Rat(1, 2));
            poly den = one_minus(2, 1) * one_minus(3, 1);
            return {num, den};
        }
        case local_case::three: {
            // (x-3)(x^2-3) / (9 (x-1)^2 (x+1) (x^2+x+1))
            poly num = (poly::monomial(1, 1) - poly{{Rat(3)}}) *
                       (poly::monomial(2, 1) - poly{{Rat(3)}});
            poly xm1 = poly::monomial(1, 1) - poly{{Rat(1)}};
            poly xp1 = poly::monomial(1, 1) + poly{{Rat(1)}};
            poly cyc = poly::monomial(2, 1) + poly::monomial(1, 1) +
                       poly{{Rat(1)}};
            poly den = poly{{Rat(9)}} * xm1 * xm1 * xp1 * cyc;
            return {num, den};
        }
    }
    throw internal_error("closed_local: unreachable");
}

rational_function generic_factor(const Int& q) {
    poly num = one_minus(1, Rat(1, q)) * one_minus(2, Rat(1, q));
    poly den = one_minus(2, 1) * one_minus(3, 1);
    return {num, den};
}

power_series truncated_local_D(kloosterman_table& table,
                               const signed_constant& c, const Int& q,
                               unsigned order) {
    power_series s = power_series::zero(order);
    int64_t qq = q.get_si();
    for (unsigned m = 0; m <= order; ++m) {
        Rat coeff(0);
        for (unsigned r = 0; 2 * r <= m; ++r) {
            unsigned v = m - 2 * r;
            const Int& K = table.get(qq, c, v, r);
            coeff += Rat(K) / Rat(pow_int(q, 2 * v + 3 * r));
        }
        s.c[m] = coeff;
    }
    return s;
}

std::vector<report_item> verify_local(kloosterman_table& table, const Int& q,
                                      const Int& p, unsigned k, int sign,
                                      unsigned order) {
    signed_constant c{p, k, sign};
    power_series lhs = truncated_local_D(table, c, q, order);
    power_series rhs = taylor(closed_local(q, p, k), order);
    std::vector<report_item> items;
    for (unsigned m = 0; m <= order; ++m) {
        report_item it;
        it.label = "x^" + std::to_string(m);
        it.expected = rat_str(rhs.c[m]);
        it.computed = rat_str(lhs.c[m]);
        it.pass = rhs.c[m] == lhs.c[m];
        items.push_back(std::move(it));
    }
    return items;
}

namespace {

// Closed form of the r = 0 row, sum_v x^v K_q(q^v, 1) / q^{2v}.
rational_function closed_row(const Int& q, const Int& p,
                             const signed_constant& c) {
    Rat q2(q * q);
    switch (classify_local_case(q, p)) {
        case local_case::coprime: {
            long n = cube_root_count(q, c.value()).count;
            // (n(x^5+x^4) + q^2 - qx^4 - qx^3 - 2qx^2 - qx + x^4+2x^3+x^2)
            //   / (q^2 (1-x)^2 (1+x) (1+x+x^2))
            poly num =
                poly::monomial(5, n) + poly::monomial(4, n) +
                poly{{Rat(q * q)}} - poly::monomial(4, Rat(q)) -
                poly::monomial(3, Rat(q)) - poly::monomial(2, Rat(2 * q)) -
                poly::monomial(1, Rat(q)) + poly::monomial(4, 1) +
                poly::monomial(3, 2) + poly::monomial(2, 1);
            poly m1 = one_minus(1, 1);
            poly den = poly{{q2}} * m1 * m1 * (poly{{Rat(1)}} + poly::monomial(1, 1)) *
                       (poly{{Rat(1)}} + poly::monomial(1, 1) + poly::monomial(2, 1));
            return {num, den};
        }
        case local_case::equal_p: {
            // (p^2 - px - 2px^2 + x^2 + x^3) / (p^2 (1-x)^2 (1+x))
            poly num = poly{{Rat(p * p)}} - poly::monomial(1, Rat(p)) -
                       poly::monomial(2, Rat(2 * p)) + poly::monomial(2, 1) +
                       poly::monomial(3, 1);
            poly m1 = one_minus(1, 1);
            poly den = poly{{Rat(p * p)}} * m1 * m1 *
                       (poly{{Rat(1)}} + poly::monomial(1, 1));
            return {num, den};
        }
        case local_case::two: {
            // (x^5 - 3x^2 - 2x + 4) / (4 (1-x^2)(1-x^3))
            poly num = poly::monomial(5, 1) - poly::monomial(2, 3) -
                       poly::monomial(1, 2) + poly{{Rat(4)}};
            poly den = poly{{Rat(4)}} * one_minus(2, 1) * one_minus(3, 1);
            return {num, den};
        }
        case local_case::three: {
            // (x^2-x-3)(x^2+x+3) / (9 (x-1)(x+1)(x^2+x+1))
            poly f1 = poly::monomial(2, 1) - poly::monomial(1, 1) -
                      poly{{Rat(3)}};
            poly f2 = poly::monomial(2, 1) + poly::monomial(1, 1) +
                      poly{{Rat(3)}};
            poly xm1 = poly::monomial(1, 1) - poly{{Rat(1)}};
            poly xp1 = poly::monomial(1, 1) + poly{{Rat(1)}};
            poly cyc = poly::monomial(2, 1) + poly::monomial(1, 1) +
                       poly{{Rat(1)}};
            return {f1 * f2, poly{{Rat(9)}} * xm1 * xp1 * cyc};
        }
    }
    throw internal_error("closed_row: unreachable");
}

// Closed form of the v = 0 column, sum_{r>=1} x^{2r} K_q(1, q^r) / q^{3r}.
rational_function closed_column(const Int& q, const Int& p,
                                const signed_constant& c) {
    switch (classify_local_case(q, p)) {
        case local_case::coprime: {
            long n = cube_root_count(q, c.value()).count;
            // (q-1)x^2 / (q(q-x^2))  +  n q x^6 / ((q-x^2)(q^2-x^6))
            poly qmx2 = poly{{Rat(q)}} - poly::monomial(2, 1);
            poly q2mx6 = poly{{Rat(q * q)}} - poly::monomial(6, 1);
            rational_function t1(poly::monomial(2, Rat(q - 1)),
                                 poly{{Rat(q)}} * qmx2);
            rational_function t2(poly::monomial(6, Rat(n * q)), qmx2 * q2mx6);
            return t1 + t2;
        }
        case local_case::two: {
            // x^2 (x^4 + 1 - x^6/4) / (4 (1 - x^2/2)(1 - x^6/4))
            poly num = poly::monomial(2, 1) *
                       (poly::monomial(4, 1) + poly{{Rat(1)}} -
                        poly::monomial(6, Rat(1, 4)));
            poly den = poly{{Rat(4)}} * one_minus(2, Rat(1, 2)) *
                       one_minus(6, Rat(1, 4));
            return {num, den};
        }
        case local_case::three: {
            // x^2(2+x^4)/(3(3-x^2)) + delta_9 x^12/((3-x^2)(9-x^6))
            long delta9 = 0;
            Int cm9 = mod_pos(c.value(), 9);
            if (cm9 == 1 || cm9 == 8) delta9 = 1;
            poly tmx2 = poly{{Rat(3)}} - poly::monomial(2, 1);
            poly nmx6 = poly{{Rat(9)}} - poly::monomial(6, 1);
            rational_function t1(
                poly::monomial(2, 1) * (poly{{Rat(2)}} + poly::monomial(4, 1)),
                poly{{Rat(3)}} * tmx2);
            rational_function t2(poly::monomial(12, Rat(delta9)), tmx2 * nmx6);
            return t1 + t2;
        }
        case local_case::equal_p:
            throw parameter_error(
                "verify_intermediate: no displayed v=0 column for q = p");
    }
    throw internal_error("closed_column: unreachable");
}

}  // namespace

std::vector<report_item> verify_intermediate(kloosterman_table& table,
                                             const Int& q, const Int& p,
                                             unsigned k, int sign,
                                             unsigned order) {
    signed_constant c{p, k, sign};
    int64_t qq = q.get_si();
    std::vector<report_item> items;

    power_series row_closed = taylor(closed_row(q, p, c), order);
    for (unsigned v = 0; v <= order; ++v) {
        Rat computed = Rat(table.get(qq, c, v, 0)) / Rat(pow_int(q, 2 * v));
        report_item it;
        it.label = "row r=0: x^" + std::to_string(v);
        it.expected = rat_str(row_closed.c[v]);
        it.computed = rat_str(computed);
        it.pass = computed == row_closed.c[v];
        items.push_back(std::move(it));
    }

    if (classify_local_case(q, p) != local_case::equal_p) {
        power_series col_closed = taylor(closed_column(q, p, c), order);
        for (unsigned m = 0; m <= order; ++m) {
            Rat computed(0);
            if (m >= 2 && m % 2 == 0) {
                unsigned r = m / 2;
                computed =
                    Rat(table.get(qq, c, 0, r)) / Rat(pow_int(q, 3 * r));
            }
            report_item it;
            it.label = "column v=0: x^" + std::to_string(m);
            it.expected = rat_str(col_closed.c[m]);
            it.computed = rat_str(computed);
            it.pass = computed == col_closed.c[m];
            items.push_back(std::move(it));
        }
    }
    return items;
}

std::vector<report_item> global_consistency(const Int& p, unsigned k) {
    std::vector<report_item> items;
    auto push = [&items](std::string label, const rational_function& exp,
                         const rational_function& got) {
        items.push_back(
            {std::move(label), exp.str(), got.str(), exp == got});
    };
    // q != p: every local closed form must equal the generic Euler factor.
    for (Int q : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)}) {
        if (q == p) continue;
        push("factor q=" + q.get_str() + " equals generic Euler factor",
             generic_factor(q), closed_local(q, p, k));
    }
    // q = p: the local form divided by the generic factor is the finite
    // p-part (1-x^{k+1})(1-x^{k+2}) / ((1-x)(1-x^2)).
    poly pnum = one_minus(k + 1, 1) * one_minus(k + 2, 1);
    poly pden = one_minus(1, 1) * one_minus(2, 1);
    rational_function expected(pnum, pden);
    rational_function got = closed_local(p, p, k) / generic_factor(p);
    push("factor q=p ratio equals (1-x^{k+1})(1-x^{k+2})/((1-x)(1-x^2))",
         expected, got);
    return items;
}

Rat trivial_trace_factor(const Int& p, unsigned k) {
    if (!is_prime(p)) throw parameter_error("trivial_trace_factor: p prime");
    // p^k (1-p^{-(k+1)})/(1-p^{-1}) * (1-p^{-(k+2)})/(1-p^{-2})
    Rat pk(pow_int(p, k));
    Rat a = (Rat(1) - Rat(1) / Rat(pow_int(p, k + 1))) /
            (Rat(1) - Rat(1) / Rat(p));
    Rat b = (Rat(1) - Rat(1) / Rat(pow_int(p, k + 2))) /
            (Rat(1) - Rat(1) / Rat(p * p));
    Rat r = pk * a * b;
    r.canonicalize();
    return r;
}

Rat trivial_trace_factor_series_oracle(const Int& p, unsigned k) {
    // p^{-k} [X^k] 1/((1-X)(1-pX)(1-p^2 X))
    rational_function f(poly{{Rat(1)}},
                        one_minus(1, 1) * one_minus(1, Rat(p)) *
                            one_minus(1, Rat(p * p)));
    power_series s = taylor(f, k);
    Rat r = s.c[k] / Rat(pow_int(p, k));
    r.canonicalize();
    return r;
}

}  // namespace orderzeta
