#pragma once

#include <functional>
#include <vector>

#include "eqlab/types.hpp"

namespace eqlab {

// Central finite differences of `loss` with respect to every entry of every
// tensor in `params`, perturbing in place. Step defaults to 1e-5.
std::vector<Matrix> finite_difference_grads(
    const std::function<double()>& loss, const std::vector<Matrix*>& params,
    double step = 1e-5);

// Max over entries of |a - n| / (|a| + |n| + 1e-8); entries whose absolute
// difference is below the finite-difference resolution floor (1e-9) count
// as exact.
double max_relative_error(const std::vector<Matrix>& analytic,
                          const std::vector<Matrix>& numeric);

}  // namespace eqlab
