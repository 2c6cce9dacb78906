#pragma once

#include <complex>

namespace shadowrank {

// Bessel functions of the first and second kind, order 0 and 1, for real
// positive arguments. Ascending power series below the crossover, Hankel
// asymptotic (P/Q phase-amplitude) expansion above it; relative accuracy is
// about 1e-11 over x in (1e-3, 1e5), validated against an independent
// extended-precision oracle in the test suite.

double bessel_j0(double x);
double bessel_y0(double x);
double bessel_j1(double x);
double bessel_y1(double x);

/// Zeroth-order Hankel function of the second kind, J0(x) - i Y0(x).
std::complex<double> hankel0_2(double x);

}  // namespace shadowrank
