#include "eqlab/gradcheck.hpp"

#include <cmath>

namespace eqlab {

std::vector<Matrix> finite_difference_grads(
    const std::function<double()>& loss, const std::vector<Matrix*>& params,
    double step) {
  std::vector<Matrix> grads;
  grads.reserve(params.size());
  for (Matrix* p : params) {
    Matrix g(p->rows(), p->cols());
    for (Eigen::Index r = 0; r < p->rows(); ++r) {
      for (Eigen::Index c = 0; c < p->cols(); ++c) {
        const double orig = (*p)(r, c);
        (*p)(r, c) = orig + step;
        const double up = loss();
        (*p)(r, c) = orig - step;
        const double down = loss();
        (*p)(r, c) = orig;
        g(r, c) = (up - down) / (2.0 * step);
      }
    }
    grads.push_back(std::move(g));
  }
  return grads;
}

double max_relative_error(const std::vector<Matrix>& analytic,
                          const std::vector<Matrix>& numeric) {
  if (analytic.size() != numeric.size()) {
    throw DimensionError("max_relative_error: tensor count mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    const Matrix& a = analytic[i];
    const Matrix& n = numeric[i];
    if (a.rows() != n.rows() || a.cols() != n.cols()) {
      throw DimensionError("max_relative_error: shape mismatch at tensor " +
                           std::to_string(i));
    }
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      for (Eigen::Index c = 0; c < a.cols(); ++c) {
        const double diff = std::abs(a(r, c) - n(r, c));
        // Central differences on float64 cannot resolve differences below
        // roughly eps_machine * |loss| / step; entries that agree to within
        // that floor count as exact rather than as a relative disagreement.
        if (diff <= 1e-9) continue;
        const double rel =
            diff / (std::abs(a(r, c)) + std::abs(n(r, c)) + 1e-8);
        if (rel > worst) worst = rel;
      }
    }
  }
  return worst;
}

}  // namespace eqlab
