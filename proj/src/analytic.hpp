#ifndef ORDERZETA_ANALYTIC_HPP
#define ORDERZETA_ANALYTIC_HPP

#include <string>
#include <vector>

namespace orderzeta {

struct numeric_check {
    std::string label;
    double expected;
    double computed;
    double tolerance;
    bool pass;
};

// Modified Bessel function of the second kind at argument 2,
// K_nu(2) = int_0^inf exp(-2 cosh t) cosh(nu t) dt.
double bessel_K2(double nu);

// F(x) = (1 / 2K_0(2)) int_x^inf exp(-y - 1/y) dy/y for x > 0; the
// substitution y = e^t turns both the integral and its normalizer into
// integrals of exp(-2 cosh t).
double kernel_F(double x);

// Numeric Mellin transform int_0^inf F(u) u^{z-1} du for z > 0, with the
// 1/z pole split off so small z stays stable.
double mellin_F(double z);

// K_z(2) / (z K_0(2)), the closed form of the Mellin transform; defined for
// all nonzero z and odd in z.
double mellin_F_bessel(double z);

// Riemann zeta by Euler-Maclaurin (s != 1) and Gamma by Lanczos.
double zeta(double s);
double gamma_fn(double s);

// Kernel growth/decay bounds and the limit F(0+) = 1.
std::vector<numeric_check> kernel_checks();

// Residue of the Mellin transform at 0 and its oddness, each through two
// independent numeric routes.
std::vector<numeric_check> mellin_residue_check();

// lim_{s->0} of the residue product; (k+1)(k+2) sqrt(pi) on the branch
// Pol > 0 and 0 on the branch Pol < 0.  Evaluated at s in {1e-3, 1e-4} and
// Richardson-extrapolated; the finite-prime factor uses p = 5 (the limit is
// p-independent).
double h_residue_constant(unsigned k, bool pol_positive);

// The finite-prime factor alone tends to (k+1)(k+2)/2.
double residue_p_factor_limit(unsigned k);

std::vector<numeric_check> analytic_checks(unsigned k);

}  // namespace orderzeta

#endif
