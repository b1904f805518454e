#pragma once

#include <vector>

namespace tprop {

// Cylindrical Bessel J_n for integer order (any sign of n and x), by downward
// (Miller) recurrence normalized with J_0 + 2 sum J_{2k} = 1.
double bessel_j(int n, double x);

// J_0(x) .. J_{n_max}(x) in one downward sweep.
std::vector<double> bessel_j_sequence(int n_max, double x);

}  // namespace tprop
