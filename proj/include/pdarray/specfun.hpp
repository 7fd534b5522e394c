#ifndef PDARRAY_SPECFUN_HPP
#define PDARRAY_SPECFUN_HPP

// Special functions behind the capture formulas: regularized incomplete
// gamma of integer order, modified Bessel I0/I1 (plain and exponentially
// scaled), Marcum's Q of integer order, and the offset-disk LG10 capture
// kernel phi.
//
// Marcum Q is evaluated as the Poisson mixture of Erlang tails,
//   Q_m(a,b) = sum_k pois(k; a^2/2) * Q(k+m, b^2/2),
// summed two-sided around the Poisson mode so large arguments neither
// underflow nor need asymptotic switchovers. Summation stops once the
// unaccumulated Poisson mass is below the configured tolerance.

namespace pdarray::specfun {

struct Config {
    double abs_tolerance = 1e-13;
    long max_terms = 1'000'000;
};

// Regularized incomplete gamma for integer order n >= 1.
// gamma_q(n, x) = Gamma(n, x)/Gamma(n) (upper), gamma_p = 1 - gamma_q (lower).
// The smaller Poisson tail is summed directly, so whichever of the pair is
// tiny retains full relative accuracy.
double gamma_p(long n, double x);
double gamma_q(long n, double x);

double bessel_i0(double x);         // throws NumericalError once e^x overflows
double bessel_i0_scaled(double x);  // e^{-x} I0(x)
double bessel_i1(double x);
double bessel_i1_scaled(double x);  // e^{-x} I1(x)

// Q_m(a,b) and its complement 1 - Q_m(a,b). The complement is summed
// directly (lower gamma terms), not as 1 - Q, so small captures keep
// relative accuracy.
double marcum_q(int order, double a, double b, const Config& cfg = {});
double marcum_q_complement(int order, double a, double b, const Config& cfg = {});

// Fraction of a unit-power LG10 beam captured by a disk of radius b whose
// center is offset a from the beam axis (all lengths in beam-waist units):
//   phi(a,b) = 2ab e^{-2(a^2+b^2)} I1(4ab) + (1 - Q1(2a,2b))
//              - 2b^2 e^{-2(a^2+b^2)} I0(4ab).
// Evaluated with the scaled Bessel variants so large offsets stay finite.
double phi(double a, double b, const Config& cfg = {});

} // namespace pdarray::specfun

#endif
