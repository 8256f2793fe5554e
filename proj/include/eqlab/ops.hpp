#pragma once

#include "eqlab/types.hpp"

namespace eqlab {

// Shape-checked dense product.
Matrix matmul(const Matrix& a, const Matrix& b);

RowVec relu(const RowVec& v);
RowVec sigmoid(const RowVec& v);

// Numerically stable softmax (max subtraction); output sums to 1.
RowVec softmax(const RowVec& v);

// -log(probs[gold]) with a 1e-12 probability floor.
double cross_entropy(const RowVec& probs, int gold);

// Sum of squared differences.
double squared_euclidean(const RowVec& pred, const RowVec& target);

}  // namespace eqlab
