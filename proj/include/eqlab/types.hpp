#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace eqlab {

// All numerics are double precision; gradient checks to 1e-5 rely on it.
using Matrix = Eigen::MatrixXd;
using RowVec = Eigen::RowVectorXd;

struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct IndexError : std::runtime_error {
  explicit IndexError(const std::string& what) : std::runtime_error(what) {}
};

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SchemeError : std::runtime_error {
  explicit SchemeError(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::logic_error {
  explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string shape_str(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace eqlab
