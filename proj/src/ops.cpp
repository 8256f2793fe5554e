#include "eqlab/ops.hpp"

#include <cmath>

namespace eqlab {

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions disagree, " + shape_str(a) +
                         " x " + shape_str(b));
  }
  return a * b;
}

RowVec relu(const RowVec& v) { return v.cwiseMax(0.0); }

RowVec sigmoid(const RowVec& v) {
  return v.unaryExpr([](double x) { return 1.0 / (1.0 + std::exp(-x)); });
}

RowVec softmax(const RowVec& v) {
  const double mx = v.maxCoeff();
  RowVec e = (v.array() - mx).exp();
  return e / e.sum();
}

double cross_entropy(const RowVec& probs, int gold) {
  if (gold < 0 || gold >= probs.size()) {
    throw IndexError("cross_entropy: gold index " + std::to_string(gold) +
                     " out of range for " + std::to_string(probs.size()) +
                     " classes");
  }
  return -std::log(std::max(probs[gold], 1e-12));
}

double squared_euclidean(const RowVec& pred, const RowVec& target) {
  if (pred.size() != target.size()) {
    throw DimensionError("squared_euclidean: sizes disagree, " +
                         std::to_string(pred.size()) + " vs " +
                         std::to_string(target.size()));
  }
  return (pred - target).squaredNorm();
}

}  // namespace eqlab
