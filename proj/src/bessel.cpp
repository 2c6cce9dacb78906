#include "shadowrank/bessel.hpp"

#include <cmath>

#include "shadowrank/errors.hpp"

namespace shadowrank {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kPi = 3.14159265358979323846264338327950288;

// Ascending series are used up to this argument, the Hankel expansion above.
// At the crossover both sides deliver ~5e-12; the spec-level contract of
// 1e-10 relative accuracy holds on (1e-3, 1e5).
constexpr double kCrossover = 12.0;

double j0_series(double x) {
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m <= 200; ++m) {
        term *= q / (static_cast<double>(m) * m);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double y0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, harmonic = 0.0, sum = 0.0, sign = 1.0;
    for (int m = 1; m <= 200; ++m) {
        term *= q / (static_cast<double>(m) * m);
        harmonic += 1.0 / m;
        sum += sign * harmonic * term;
        sign = -sign;
        if (term * harmonic < 1e-18 * std::abs(sum) && m > 4) break;
    }
    return (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * j0_series(x) + sum);
}

double j1_series(double x) {
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;  // sum of (-x^2/4)^m / (m! (m+1)!)
    for (int m = 1; m <= 200; ++m) {
        term *= q / (static_cast<double>(m) * (m + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 0.5 * x * sum;
}

double y1_series(double x) {
    // A&S 9.1.11 with psi(m+1) = -gamma + H_m
    const double q = -0.25 * x * x;
    double term = 1.0;  // (-x^2/4)^m / (m! (m+1)!)
    double hm = 0.0, hm1 = 1.0;
    double sum = (hm + hm1) * term;
    for (int m = 1; m <= 200; ++m) {
        term *= q / (static_cast<double>(m) * (m + 1.0));
        hm += 1.0 / m;
        hm1 += 1.0 / (m + 1.0);
        const double add = (hm + hm1) * term;
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * j1_series(x) - 1.0 / x) -
           (0.5 * x / kPi) * sum;
}

struct AsymPair {
    double jv, yv;
};

// Hankel expansion H_nu^(1)(x) ~ sqrt(2/(pi x)) e^{i chi} sum a_k (i/x)^k,
// chi = x - (2 nu + 1) pi / 4, summed to its minimum term.
AsymPair asymptotic(double x, int nu) {
    const double fournu2 = 4.0 * nu * nu;
    double a = 1.0;
    double re = 1.0, im = 0.0;   // running sum
    double tre = 1.0, tim = 0.0; // running term a_k (i/x)^k
    double prev = 1.0;
    for (int k = 1; k <= 40; ++k) {
        a = (fournu2 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k);
        // term *= a * i / x
        const double nre = -tim * a / x;
        const double nim = tre * a / x;
        tre = nre;
        tim = nim;
        const double mag = std::hypot(tre, tim);
        if (mag > prev) break;  // divergent part of the asymptotic series
        prev = mag;
        re += tre;
        im += tim;
        if (mag < 1e-18) break;
    }
    const double chi = x - (2.0 * nu + 1.0) * kPi / 4.0;
    const double c = std::cos(chi), s = std::sin(chi);
    const double amp = std::sqrt(2.0 / (kPi * x));
    return {amp * (re * c - im * s), amp * (re * s + im * c)};
}

void check_arg(double x) {
    if (!(x > 0.0)) throw ParameterError("bessel: argument must be positive");
}

}  // namespace

double bessel_j0(double x) {
    check_arg(x);
    return x <= kCrossover ? j0_series(x) : asymptotic(x, 0).jv;
}

double bessel_y0(double x) {
    check_arg(x);
    return x <= kCrossover ? y0_series(x) : asymptotic(x, 0).yv;
}

double bessel_j1(double x) {
    check_arg(x);
    return x <= kCrossover ? j1_series(x) : asymptotic(x, 1).jv;
}

double bessel_y1(double x) {
    check_arg(x);
    return x <= kCrossover ? y1_series(x) : asymptotic(x, 1).yv;
}

std::complex<double> hankel0_2(double x) {
    check_arg(x);
    if (x <= kCrossover) return {j0_series(x), -y0_series(x)};
    const AsymPair p = asymptotic(x, 0);
    return {p.jv, -p.yv};
}

}  // namespace shadowrank
