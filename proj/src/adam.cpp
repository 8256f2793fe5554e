#include "eqlab/adam.hpp"

#include <cmath>

namespace eqlab {

AdamState AdamState::init(const AdamConfig& cfg,
                          const std::vector<const Matrix*>& params) {
  if (cfg.lr <= 0.0 || cfg.eps <= 0.0 || cfg.l2 < 0.0 || cfg.beta1 < 0.0 ||
      cfg.beta1 >= 1.0 || cfg.beta2 < 0.0 || cfg.beta2 >= 1.0) {
    throw ConfigError("AdamState: hyperparameters out of range");
  }
  AdamState s;
  s.cfg = cfg;
  s.m.reserve(params.size());
  s.v.reserve(params.size());
  for (const Matrix* p : params) {
    s.m.push_back(Matrix::Zero(p->rows(), p->cols()));
    s.v.push_back(Matrix::Zero(p->rows(), p->cols()));
  }
  return s;
}

AdamState AdamState::init(const AdamConfig& cfg,
                          const std::vector<Matrix*>& params) {
  return init(cfg, std::vector<const Matrix*>(params.begin(), params.end()));
}

void apply_l2(std::vector<Matrix>& grads, const std::vector<Matrix*>& params,
              double l2) {
  if (l2 == 0.0) return;
  if (grads.size() != params.size()) {
    throw DimensionError("apply_l2: gradient/parameter count mismatch");
  }
  for (std::size_t i = 0; i < grads.size(); ++i) {
    grads[i] += 2.0 * l2 * (*params[i]);
  }
}

void adam_step(const std::vector<Matrix*>& params,
               const std::vector<Matrix>& grads, AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.m.size()) {
    throw DimensionError("adam_step: tensor count mismatch");
  }
  state.t += 1;
  const double b1 = state.cfg.beta1;
  const double b2 = state.cfg.beta2;
  const double bc1 = 1.0 - std::pow(b1, static_cast<double>(state.t));
  const double bc2 = 1.0 - std::pow(b2, static_cast<double>(state.t));
  for (std::size_t i = 0; i < params.size(); ++i) {
    Matrix& p = *params[i];
    const Matrix& g = grads[i];
    if (g.rows() != p.rows() || g.cols() != p.cols()) {
      throw DimensionError("adam_step: gradient shape " + shape_str(g) +
                           " vs parameter " + shape_str(p));
    }
    state.m[i] = b1 * state.m[i] + (1.0 - b1) * g;
    state.v[i] = b2 * state.v[i] + (1.0 - b2) * g.cwiseProduct(g);
    const Matrix mhat = state.m[i] / bc1;
    const Matrix vhat = state.v[i] / bc2;
    const Matrix denom =
        vhat.cwiseSqrt() + Matrix::Constant(p.rows(), p.cols(), state.cfg.eps);
    p -= state.cfg.lr * mhat.cwiseQuotient(denom);
  }
}

}  // namespace eqlab
