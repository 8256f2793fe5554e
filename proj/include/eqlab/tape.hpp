#pragma once

#include <vector>

#include "eqlab/types.hpp"

namespace eqlab {

// Reverse-mode gradient tape over the small primitive set used by the model
// zoo (matmul, add, relu, sigmoid, hadamard, concat, scale, loss heads).
// Row vectors are 1xK matrices. A tape records one forward pass; backward()
// closes it, after which any further op raises UsageError.
class GradTape {
 public:
  using Var = int;

  // Leaf that participates in the graph; gradients are readable for any
  // leaf, so parameters and constants share this entry point.
  Var leaf(Matrix value);

  Var matmul(Var a, Var b);
  Var add(Var a, Var b);
  Var relu(Var a);
  Var sigmoid(Var a);
  Var hadamard(Var a, Var b);
  // Concatenate two row vectors side by side: [a;b] in the row convention.
  Var hcat(Var a, Var b);
  Var scale(Var a, double s);
  Var sum_entries(Var a);

  // Fused stable softmax + cross entropy; returns a 1x1 scalar.
  Var softmax_cross_entropy(Var logits, int gold);
  // Sum of squared differences against a constant target; 1x1 scalar.
  Var squared_error(Var pred, const RowVec& target);

  const Matrix& value(Var v) const { return nodes_[check(v)].value; }

  // Seeds d(loss)=1 and replays the tape in reverse. Closes the tape.
  void backward(Var loss);

  // Gradient of the last backward() loss w.r.t. the given node. Nodes the
  // loss never touched report a zero gradient of matching shape.
  const Matrix& grad(Var v);

  bool closed() const { return closed_; }

 private:
  enum class Op {
    kLeaf,
    kMatMul,
    kAdd,
    kRelu,
    kSigmoid,
    kHadamard,
    kHCat,
    kScale,
    kSumEntries,
    kSoftmaxCE,
    kSqErr,
  };

  struct Node {
    Op op;
    int a = -1;
    int b = -1;
    double scalar = 0.0;
    int gold = -1;
    Matrix value;
    Matrix aux;   // softmax probabilities / squared-error residual
    Matrix grad;  // allocated during backward
    bool has_grad = false;
  };

  int check(Var v) const;
  Var push(Node n);
  void accumulate(int idx, const Matrix& g);
  void require_open() const;

  std::vector<Node> nodes_;
  bool closed_ = false;
};

}  // namespace eqlab
