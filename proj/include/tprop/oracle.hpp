#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tprop::oracle {

// Time derivative of a flat state vector; output length equals input length.
using DerivativeField =
    std::function<void(double t, std::span<const double> s, std::span<double> ds)>;

struct OracleResult {
    std::vector<double> times;                 // strictly increasing, starts at 0
    std::vector<std::vector<double>> states;   // one flat vector per time
    double max_step_error_estimate = 0.0;      // step-doubling estimate, max over steps
};

// Classical fixed-step RK4 from 0 to t_end; the last partial step is shortened
// to land exactly on t_end. Deliberately boring: the reference everything else
// is tested against. Throws NonFiniteState if the state leaves IEEE range.
OracleResult rk4_integrate(const DerivativeField& f, std::span<const double> state0,
                           double t_end, double dt);

// Max Euclidean distance between corresponding states; grids must agree.
double max_deviation(const OracleResult& a, const OracleResult& b);

// Samples an analytic solution on the same grid as an existing result.
OracleResult sample_on_grid(const std::vector<double>& times,
                            const std::function<std::vector<double>(double)>& state_of_t);

}  // namespace tprop::oracle
