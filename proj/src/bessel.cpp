#include "tprop/bessel.hpp"

#include <cmath>
#include <cstdlib>

namespace tprop {

namespace {

// Downward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, started far above the
// turning point, normalized afterwards. Kahan compensation on the
// normalization sum; trailing orders below 1e-15 of the sum are irrelevant
// by construction of the start order.
std::vector<double> miller_sweep(int n_max, double x) {
    std::vector<double> out(static_cast<size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    double ax = std::fabs(x);
    int start = n_max + 16 + static_cast<int>(1.4 * ax + 12.0 * std::sqrt(ax));
    if (start % 2) ++start;

    double jp = 0.0;       // J_{k+1}
    double jc = 1e-300;    // J_k (arbitrary seed)
    double sum = 0.0, comp = 0.0;  // Kahan accumulator for J0 + 2*sum_{even k>0} Jk
    for (int k = start; k >= 1; --k) {
        double jm = (2.0 * k / ax) * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 <= n_max) out[k - 1] = jc;
        if ((k - 1) % 2 == 0) {
            double contrib = (k - 1 == 0) ? jc : 2.0 * jc;
            double y = contrib - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        if (std::fabs(jc) > 1e250) {  // rescale to avoid overflow
            for (auto& v : out) v *= 1e-250;
            jp *= 1e-250;
            jc *= 1e-250;
            sum *= 1e-250;
            comp *= 1e-250;
        }
    }
    for (auto& v : out) v /= sum;
    if (x < 0.0) {  // J_n(-x) = (-1)^n J_n(x)
        for (int n = 1; n <= n_max; n += 2) out[n] = -out[n];
    }
    return out;
}

}  // namespace

std::vector<double> bessel_j_sequence(int n_max, double x) { return miller_sweep(n_max, x); }

double bessel_j(int n, double x) {
    int an = std::abs(n);
    double v = miller_sweep(an, x)[an];
    if (n < 0 && (an % 2)) v = -v;  // J_{-n} = (-1)^n J_n
    return v;
}

}  // namespace tprop
