#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2sff {

using Complex = std::complex<double>;

using Vector3 = Eigen::Vector3d;
using Vector4 = Eigen::Vector4d;
using Vector7 = Eigen::Matrix<double, 7, 1>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix3 = Eigen::Matrix3d;
using Matrix4 = Eigen::Matrix4d;
using Matrix7 = Eigen::Matrix<double, 7, 7>;
using MatrixX = Eigen::MatrixXd;
using MatrixXc = Eigen::MatrixXcd;
using VectorX = Eigen::VectorXd;
using VectorXc = Eigen::VectorXcd;

// invalid_argument subclasses signal caller/config mistakes (exit code 2 in the CLI),
// runtime_error subclasses signal mathematical/numerical failures (exit code 1).

struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfDomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidLabelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoRealFormError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FrameError : std::runtime_error {
  double associativity_residual;
  FrameError(const std::string& msg, double residual)
      : std::runtime_error(msg), associativity_residual(residual) {}
};

struct BadSeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverDivergedError : std::runtime_error {
  std::vector<double> residual_history;
  SolverDivergedError(const std::string& msg, std::vector<double> history)
      : std::runtime_error(msg), residual_history(std::move(history)) {}
};

struct LinearSolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

template <typename Vec>
Vec random_vector(Rng& rng, double lo = -1.0, double hi = 1.0) {
  Vec v;
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = uniform(rng, lo, hi);
  return v;
}

template <typename Mat>
Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline double operator_norm(const MatrixXc& m) {
  return m.jacobiSvd().singularValues()(0);
}

inline int numerical_rank(const MatrixXc& m, double rel_tol = 1e-8) {
  Eigen::JacobiSVD<MatrixXc> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

}  // namespace g2sff
