#pragma once

#include <cmath>
#include <complex>

// Scalar kernels shared by the closed-form propagators. Each one is the
// stable evaluation of a trig/exponential ratio that cancels catastrophically
// near zero; small arguments switch to truncated series.

namespace tprop::kernels {

// 1 - cos(x), evaluated as 2 sin^2(x/2); Taylor below 1e-6.
inline double omc(double x) {
    if (std::fabs(x) < 1e-6) {
        double x2 = x * x;
        return 0.5 * x2 - x2 * x2 / 24.0;
    }
    double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

// sin(x)/x
inline double sinc(double x) {
    if (std::fabs(x) < 1e-6) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// (1 - cos x)/x
inline double omc_x(double x) {
    if (std::fabs(x) < 1e-6) {
        double x2 = x * x;
        return 0.5 * x - x * x2 / 24.0;
    }
    return omc(x) / x;
}

// (1 - cos x)/x^2
inline double omc_x2(double x) {
    if (std::fabs(x) < 1e-6) {
        double x2 = x * x;
        return 0.5 - x2 / 24.0 + x2 * x2 / 720.0;
    }
    return omc(x) / (x * x);
}

// (x - sin x)/x^2
inline double xms_x2(double x) {
    if (std::fabs(x) < 0.5) {
        // x/6 - x^3/120 + x^5/5040 - x^7/362880 + x^9/39916800
        double x2 = x * x;
        return x * (1.0 / 6.0 +
                    x2 * (-1.0 / 120.0 +
                          x2 * (1.0 / 5040.0 +
                                x2 * (-1.0 / 362880.0 + x2 / 39916800.0))));
    }
    return (x - std::sin(x)) / (x * x);
}

// phi1(u) = (e^u - 1)/u, phi1(0) = 1.
inline std::complex<double> phi1(std::complex<double> u) {
    if (std::abs(u) < 0.5) {
        std::complex<double> sum = 1.0, term = 1.0;
        for (int k = 1; k < 24; ++k) {
            term *= u / static_cast<double>(k + 1);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return (std::exp(u) - 1.0) / u;
}

// phi2(u) = (e^u - 1 - u)/u^2, phi2(0) = 1/2.
inline std::complex<double> phi2(std::complex<double> u) {
    if (std::abs(u) < 0.5) {
        std::complex<double> sum = 0.5, term = 0.5;
        for (int k = 1; k < 24; ++k) {
            term *= u / static_cast<double>(k + 2);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return (std::exp(u) - 1.0 - u) / (u * u);
}

inline double phi1(double u) { return phi1(std::complex<double>(u, 0.0)).real(); }
inline double phi2(double u) { return phi2(std::complex<double>(u, 0.0)).real(); }

}  // namespace tprop::kernels
