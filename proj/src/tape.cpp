#include "eqlab/tape.hpp"

#include <cmath>

namespace eqlab {

int GradTape::check(Var v) const {
  if (v < 0 || v >= static_cast<int>(nodes_.size())) {
    throw UsageError("GradTape: invalid var handle " + std::to_string(v));
  }
  return v;
}

void GradTape::require_open() const {
  if (closed_) {
    throw UsageError("GradTape: op recorded after backward() closed the tape");
  }
}

GradTape::Var GradTape::push(Node n) {
  require_open();
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

GradTape::Var GradTape::leaf(Matrix value) {
  Node n;
  n.op = Op::kLeaf;
  n.value = std::move(value);
  return push(std::move(n));
}

GradTape::Var GradTape::matmul(Var a, Var b) {
  const Matrix& va = value(a);
  const Matrix& vb = value(b);
  if (va.cols() != vb.rows()) {
    throw DimensionError("GradTape::matmul: " + shape_str(va) + " x " +
                         shape_str(vb));
  }
  Node n;
  n.op = Op::kMatMul;
  n.a = a;
  n.b = b;
  n.value = va * vb;
  return push(std::move(n));
}

GradTape::Var GradTape::add(Var a, Var b) {
  const Matrix& va = value(a);
  const Matrix& vb = value(b);
  if (va.rows() != vb.rows() || va.cols() != vb.cols()) {
    throw DimensionError("GradTape::add: " + shape_str(va) + " + " +
                         shape_str(vb));
  }
  Node n;
  n.op = Op::kAdd;
  n.a = a;
  n.b = b;
  n.value = va + vb;
  return push(std::move(n));
}

GradTape::Var GradTape::relu(Var a) {
  Node n;
  n.op = Op::kRelu;
  n.a = a;
  n.value = value(a).cwiseMax(0.0);
  return push(std::move(n));
}

GradTape::Var GradTape::sigmoid(Var a) {
  Node n;
  n.op = Op::kSigmoid;
  n.a = a;
  n.value =
      value(a).unaryExpr([](double x) { return 1.0 / (1.0 + std::exp(-x)); });
  return push(std::move(n));
}

GradTape::Var GradTape::hadamard(Var a, Var b) {
  const Matrix& va = value(a);
  const Matrix& vb = value(b);
  if (va.rows() != vb.rows() || va.cols() != vb.cols()) {
    throw DimensionError("GradTape::hadamard: " + shape_str(va) + " vs " +
                         shape_str(vb));
  }
  Node n;
  n.op = Op::kHadamard;
  n.a = a;
  n.b = b;
  n.value = va.cwiseProduct(vb);
  return push(std::move(n));
}

GradTape::Var GradTape::hcat(Var a, Var b) {
  const Matrix& va = value(a);
  const Matrix& vb = value(b);
  if (va.rows() != 1 || vb.rows() != 1) {
    throw DimensionError("GradTape::hcat expects row vectors, got " +
                         shape_str(va) + " and " + shape_str(vb));
  }
  Node n;
  n.op = Op::kHCat;
  n.a = a;
  n.b = b;
  n.value.resize(1, va.cols() + vb.cols());
  n.value << va, vb;
  return push(std::move(n));
}

GradTape::Var GradTape::scale(Var a, double s) {
  Node n;
  n.op = Op::kScale;
  n.a = a;
  n.scalar = s;
  n.value = value(a) * s;
  return push(std::move(n));
}

GradTape::Var GradTape::sum_entries(Var a) {
  Node n;
  n.op = Op::kSumEntries;
  n.a = a;
  n.value = Matrix::Constant(1, 1, value(a).sum());
  return push(std::move(n));
}

GradTape::Var GradTape::softmax_cross_entropy(Var logits, int gold) {
  const Matrix& z = value(logits);
  if (z.rows() != 1) {
    throw DimensionError("softmax_cross_entropy expects a row vector, got " +
                         shape_str(z));
  }
  if (gold < 0 || gold >= z.cols()) {
    throw IndexError("softmax_cross_entropy: gold index " +
                     std::to_string(gold) + " out of range");
  }
  const double mx = z.maxCoeff();
  Matrix e = (z.array() - mx).exp();
  const double denom = e.sum();
  Node n;
  n.op = Op::kSoftmaxCE;
  n.a = logits;
  n.gold = gold;
  n.aux = e / denom;  // probabilities
  n.value = Matrix::Constant(1, 1, std::log(denom) - (z(0, gold) - mx));
  return push(std::move(n));
}

GradTape::Var GradTape::squared_error(Var pred, const RowVec& target) {
  const Matrix& p = value(pred);
  if (p.rows() != 1 || p.cols() != target.size()) {
    throw DimensionError("squared_error: prediction " + shape_str(p) +
                         " vs target length " + std::to_string(target.size()));
  }
  Node n;
  n.op = Op::kSqErr;
  n.a = pred;
  n.aux = p - Matrix(target);
  n.value = Matrix::Constant(1, 1, n.aux.squaredNorm());
  return push(std::move(n));
}

void GradTape::accumulate(int idx, const Matrix& g) {
  Node& n = nodes_[idx];
  if (!n.has_grad) {
    n.grad = g;
    n.has_grad = true;
  } else {
    n.grad += g;
  }
}

void GradTape::backward(Var loss) {
  require_open();
  const Matrix& lv = value(loss);
  if (lv.rows() != 1 || lv.cols() != 1) {
    throw UsageError("GradTape::backward: loss must be a 1x1 scalar, got " +
                     shape_str(lv));
  }
  closed_ = true;
  accumulate(loss, Matrix::Constant(1, 1, 1.0));
  for (int i = loss; i >= 0; --i) {
    Node& n = nodes_[i];
    if (!n.has_grad) continue;
    const Matrix& g = n.grad;
    switch (n.op) {
      case Op::kLeaf:
        break;
      case Op::kMatMul:
        accumulate(n.a, g * nodes_[n.b].value.transpose());
        accumulate(n.b, nodes_[n.a].value.transpose() * g);
        break;
      case Op::kAdd:
        accumulate(n.a, g);
        accumulate(n.b, g);
        break;
      case Op::kRelu: {
        const Matrix& x = nodes_[n.a].value;
        accumulate(n.a, (x.array() > 0.0).cast<double>().matrix().cwiseProduct(g));
        break;
      }
      case Op::kSigmoid: {
        const Matrix& s = n.value;
        accumulate(n.a, s.cwiseProduct(Matrix::Ones(s.rows(), s.cols()) - s)
                            .cwiseProduct(g));
        break;
      }
      case Op::kHadamard:
        accumulate(n.a, g.cwiseProduct(nodes_[n.b].value));
        accumulate(n.b, g.cwiseProduct(nodes_[n.a].value));
        break;
      case Op::kHCat: {
        const Eigen::Index ca = nodes_[n.a].value.cols();
        accumulate(n.a, g.leftCols(ca));
        accumulate(n.b, g.rightCols(g.cols() - ca));
        break;
      }
      case Op::kScale:
        accumulate(n.a, g * n.scalar);
        break;
      case Op::kSumEntries: {
        const Matrix& x = nodes_[n.a].value;
        accumulate(n.a, Matrix::Constant(x.rows(), x.cols(), g(0, 0)));
        break;
      }
      case Op::kSoftmaxCE: {
        Matrix gz = n.aux;
        gz(0, n.gold) -= 1.0;
        accumulate(n.a, gz * g(0, 0));
        break;
      }
      case Op::kSqErr:
        accumulate(n.a, n.aux * (2.0 * g(0, 0)));
        break;
    }
  }
}

const Matrix& GradTape::grad(Var v) {
  Node& n = nodes_[check(v)];
  if (!closed_) {
    throw UsageError("GradTape::grad: backward() has not been called");
  }
  if (!n.has_grad) {
    n.grad = Matrix::Zero(n.value.rows(), n.value.cols());
    n.has_grad = true;
  }
  return n.grad;
}

}  // namespace eqlab
