#include "analytic.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace orderzeta {

namespace {

double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
    // composite Simpson with n panels (n even)
    double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10) {
    if (b <= a) return 0.0;
    double prev = simpson(f, a, b, 64);
    for (int n = 128; n <= 1 << 20; n *= 2) {
        double cur = simpson(f, a, b, n);
        if (std::fabs(cur - prev) < tol * (1.0 + std::fabs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("integrate: tolerance not met");
}

constexpr double kTailCut = 8.0;  // exp(-2 cosh 8) ~ 1e-1295

}  // namespace

double bessel_K2(double nu) {
    return integrate([nu](double t) { return std::exp(-2.0 * std::cosh(t)) *
                                             std::cosh(nu * t); },
                     0.0, kTailCut);
}

double kernel_F(double x) {
    if (x <= 0) throw std::invalid_argument("kernel_F: x > 0 required");
    static const double norm = 2.0 * bessel_K2(0.0);  // full integral
    double lo = std::log(x);
    if (lo >= kTailCut) return 0.0;
    double v = integrate([](double t) { return std::exp(-2.0 * std::cosh(t)); },
                         lo, kTailCut);
    return v / norm;
}

double mellin_F(double z) {
    if (z <= 0) throw std::invalid_argument("mellin_F: z > 0 required");
    // int_0^1 u^{z-1} F(u) du = 1/z + int_0^1 u^{z-1} (F(u)-1) du, and
    // 1 - F(u) < exp(-1/u)/(2 K_0(2)) makes the shifted integrand vanish
    // to machine precision below u ~ 0.01.
    double head = integrate(
        [z](double u) { return std::pow(u, z - 1.0) * (kernel_F(u) - 1.0); },
        1e-3, 1.0, 1e-11);
    // int_1^inf u^{z-1} F(u) du with u = e^w.
    double tail = integrate(
        [z](double w) {
            double u = std::exp(w);
            return std::exp(z * w) * kernel_F(u);
        },
        0.0, 6.0, 1e-11);
    return 1.0 / z + head + tail;
}

double mellin_F_bessel(double z) {
    if (z == 0) throw std::invalid_argument("mellin_F_bessel: z != 0");
    static const double k0 = bessel_K2(0.0);
    return bessel_K2(std::fabs(z)) / (z * k0);
}

double gamma_fn(double s) {
    // Lanczos, g = 7, 9 terms.
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (s < 0.5)
        return M_PI / (std::sin(M_PI * s) * gamma_fn(1.0 - s));
    s -= 1.0;
    double a = coef[0];
    double t = s + g + 0.5;
    for (int i = 1; i < 9; ++i) a += coef[i] / (s + i);
    return std::sqrt(2.0 * M_PI) * std::pow(t, s + 0.5) * std::exp(-t) * a;
}

double zeta(double s) {
    if (s == 1.0) throw std::invalid_argument("zeta: pole at s = 1");
    // Euler-Maclaurin with N = 24 and Bernoulli corrections through B_12.
    static const double bern[6] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,
                                   -1.0 / 30, 5.0 / 66,  -691.0 / 2730};
    const int N = 24;
    double sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::pow(n, -s);
    sum += std::pow(N, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(N, -s);
    // tail: sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    double corr = 0.0;
    double rising = 1.0;  // (s)(s+1)...(s+2j-2), starts as s for j=1
    for (int j = 1; j <= 6; ++j) {
        int m = 2 * j;
        if (j == 1) {
            rising = s;
        } else {
            rising *= (s + m - 3.0) * (s + m - 2.0);
        }
        double fact = 1.0;
        for (int i = 2; i <= m; ++i) fact *= i;
        corr += bern[j - 1] / fact * rising * std::pow(N, -s - m + 1.0);
    }
    return sum + corr;
}

std::vector<numeric_check> kernel_checks() {
    std::vector<numeric_check> out;
    double norm = 2.0 * bessel_K2(0.0);
    auto push = [&out](std::string label, double lo, double v, double hi) {
        out.push_back({std::move(label) + " in (" + std::to_string(lo) + "," +
                           std::to_string(hi) + ")",
                       v, v, 0.0, lo < v && v < hi});
    };
    for (double x : {0.5, 1.0, 2.0, 5.0})
        push("F(" + std::to_string(x) + ")", 0.0, kernel_F(x),
             std::exp(-x) / norm);
    for (double x : {0.2, 0.5, 1.0})
        push("1-F(" + std::to_string(x) + ")", 0.0, 1.0 - kernel_F(x),
             std::exp(-1.0 / x) / norm);
    double f_at_0 = kernel_F(1e-4);
    out.push_back({"F(1e-4) > 0.999", 1.0, f_at_0, 1e-3, f_at_0 > 0.999});
    // strict decrease on a sample grid
    bool mono = true;
    double prev = kernel_F(0.05);
    for (double x = 0.15; x <= 4.0; x += 0.1) {
        double cur = kernel_F(x);
        mono = mono && cur < prev;
        prev = cur;
    }
    out.push_back({"F strictly decreasing on grid", 1.0, mono ? 1.0 : 0.0,
                   0.0, mono});
    return out;
}

std::vector<numeric_check> mellin_residue_check() {
    std::vector<numeric_check> out;
    for (double z : {1e-2, 1e-3, 1e-4}) {
        double v = z * mellin_F(z);
        out.push_back({"z*Mellin(F)(z) at z=" + std::to_string(z), 1.0, v,
                       1e-2, std::fabs(v - 1.0) < 1e-2});
    }
    double odd = mellin_F(0.5) + mellin_F_bessel(-0.5);
    out.push_back({"Mellin(F)(0.5) + Mellin(F)(-0.5)", 0.0, odd, 1e-6,
                   std::fabs(odd) < 1e-6});
    double two_routes = mellin_F(1.0) - mellin_F_bessel(1.0);
    out.push_back({"Mellin at z=1 vs K_1(2)/K_0(2)", 0.0, two_routes, 1e-6,
                   std::fabs(two_routes) < 1e-6});
    return out;
}

namespace {

double p_factor(double s, unsigned k, double p) {
    double a = (1.0 - std::pow(p, -s * (k + 1))) / (1.0 - std::pow(p, -s));
    double b = (1.0 - std::pow(p, -s * (k + 2))) / (1.0 - std::pow(p, -2 * s));
    return a * b;
}

double residue_product(double s, unsigned k, bool pol_positive) {
    double zfac = zeta(2 * s) * zeta(3 * s) / (zeta(s + 1.0) * zeta(2 * s + 1.0));
    double h;
    if (pol_positive) {
        // (r1, r2) = (3, 0): pi^{3(1-2s)/2} (Gamma(s/2)/Gamma((1-s)/2))^2
        double r = gamma_fn(s / 2) / gamma_fn((1.0 - s) / 2);
        h = std::pow(M_PI, 1.5 * (1.0 - 2.0 * s)) * r * r;
    } else {
        // (r1, r2) = (1, 1): pi^{(1-2s)/2} (2 pi)^{1-2s} Gamma(s)/Gamma(1-s)
        h = std::pow(M_PI, 0.5 * (1.0 - 2.0 * s)) *
            std::pow(2.0 * M_PI, 1.0 - 2.0 * s) * gamma_fn(s) /
            gamma_fn(1.0 - s);
    }
    return p_factor(s, k, 5.0) * zfac * h;
}

double richardson(const std::function<double(double)>& f, double s1,
                  double s2) {
    double f1 = f(s1), f2 = f(s2);
    return (s1 * f2 - s2 * f1) / (s1 - s2);
}

}  // namespace

double h_residue_constant(unsigned k, bool pol_positive) {
    return richardson(
        [k, pol_positive](double s) { return residue_product(s, k, pol_positive); },
        1e-3, 1e-4);
}

double residue_p_factor_limit(unsigned k) {
    // smaller samples than the full product needs: the curvature of the
    // p-factor alone grows like (k ln p)^2
    return richardson([k](double s) { return p_factor(s, k, 5.0); }, 1e-4,
                      1e-5);
}

std::vector<numeric_check> analytic_checks(unsigned k) {
    std::vector<numeric_check> out = kernel_checks();
    auto mel = mellin_residue_check();
    out.insert(out.end(), mel.begin(), mel.end());

    double target = (k + 1.0) * (k + 2.0) * std::sqrt(M_PI);
    double pos = h_residue_constant(k, true);
    out.push_back({"h_residue(k=" + std::to_string(k) + ", Pol>0)", target,
                   pos, 1e-3, std::fabs(pos - target) < 1e-3 * target});
    double neg = h_residue_constant(k, false);
    out.push_back({"h_residue(k=" + std::to_string(k) + ", Pol<0)", 0.0, neg,
                   1e-3, std::fabs(neg) < 1e-3});
    double pf = residue_p_factor_limit(k);
    double pf_target = (k + 1.0) * (k + 2.0) / 2.0;
    out.push_back({"p-factor limit (k+1)(k+2)/2", pf_target, pf, 1e-6,
                   std::fabs(pf - pf_target) < 1e-6});
    return out;
}

}  // namespace orderzeta
