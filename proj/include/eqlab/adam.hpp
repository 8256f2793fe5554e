#pragma once

#include <cstdint>
#include <vector>

#include "eqlab/types.hpp"

namespace eqlab {

struct AdamConfig {
  double lr = 1e-3;
  // Standard Adam defaults, surfaced here as configuration.
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double l2 = 0.0;  // penalty coefficient; gradient term folded by caller
};

struct AdamState {
  AdamConfig cfg;
  std::int64_t t = 0;
  std::vector<Matrix> m;  // first moments, one per parameter tensor
  std::vector<Matrix> v;  // second moments

  static AdamState init(const AdamConfig& cfg,
                        const std::vector<const Matrix*>& params);
  static AdamState init(const AdamConfig& cfg,
                        const std::vector<Matrix*>& params);
};

// Adds the L2 penalty gradient 2*l2*theta to grads in place.
void apply_l2(std::vector<Matrix>& grads, const std::vector<Matrix*>& params,
              double l2);

// One bias-corrected Adam update, in place. Deterministic.
void adam_step(const std::vector<Matrix*>& params,
               const std::vector<Matrix>& grads, AdamState& state);

}  // namespace eqlab
