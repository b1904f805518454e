#include "tprop/oracle.hpp"

#include <cmath>

#include "tprop/errors.hpp"

namespace tprop::oracle {

namespace {

void rk4_step(const DerivativeField& f, double t, double h,
              const std::vector<double>& y, std::vector<double>& out,
              std::vector<double>& k1, std::vector<double>& k2,
              std::vector<double>& k3, std::vector<double>& k4,
              std::vector<double>& tmp) {
    size_t n = y.size();
    f(t, y, k1);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    f(t + 0.5 * h, tmp, k2);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    f(t + 0.5 * h, tmp, k3);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    f(t + h, tmp, k4);
    for (size_t i = 0; i < n; ++i)
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace

OracleResult rk4_integrate(const DerivativeField& f, std::span<const double> state0,
                           double t_end, double dt) {
    if (dt <= 0.0) throw Error("rk4_integrate: dt must be positive");
    if (t_end < 0.0) throw Error("rk4_integrate: t_end must be nonnegative");

    size_t n = state0.size();
    std::vector<double> y(state0.begin(), state0.end());
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n), full(n), half(n), half2(n);

    OracleResult res;
    res.times.push_back(0.0);
    res.states.push_back(y);

    double t = 0.0;
    while (t < t_end && t_end - t > 1e-15 * t_end) {
        double h = std::min(dt, t_end - t);
        rk4_step(f, t, h, y, full, k1, k2, k3, k4, tmp);
        // step-doubling error estimate only; the advance uses the full step
        rk4_step(f, t, 0.5 * h, y, half, k1, k2, k3, k4, tmp);
        rk4_step(f, t + 0.5 * h, 0.5 * h, half, half2, k1, k2, k3, k4, tmp);
        double err2 = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double d = full[i] - half2[i];
            err2 += d * d;
        }
        res.max_step_error_estimate =
            std::max(res.max_step_error_estimate, std::sqrt(err2) / 15.0);

        y = full;
        t += h;
        for (double v : y)
            if (!std::isfinite(v)) throw NonFiniteState("rk4_integrate: state diverged");
        res.times.push_back(t);
        res.states.push_back(y);
    }
    return res;
}

double max_deviation(const OracleResult& a, const OracleResult& b) {
    if (a.times.size() != b.times.size())
        throw GridMismatch("max_deviation: sample counts differ");
    double worst = 0.0;
    for (size_t i = 0; i < a.times.size(); ++i) {
        if (a.times[i] != b.times[i] &&
            std::fabs(a.times[i] - b.times[i]) > 1e-12 * (1.0 + std::fabs(a.times[i])))
            throw GridMismatch("max_deviation: time grids differ");
        if (a.states[i].size() != b.states[i].size())
            throw GridMismatch("max_deviation: state sizes differ");
        double d2 = 0.0;
        for (size_t j = 0; j < a.states[i].size(); ++j) {
            double d = a.states[i][j] - b.states[i][j];
            d2 += d * d;
        }
        worst = std::max(worst, std::sqrt(d2));
    }
    return worst;
}

OracleResult sample_on_grid(const std::vector<double>& times,
                            const std::function<std::vector<double>(double)>& state_of_t) {
    OracleResult res;
    res.times = times;
    res.states.reserve(times.size());
    for (double t : times) res.states.push_back(state_of_t(t));
    return res;
}

}  // namespace tprop::oracle
