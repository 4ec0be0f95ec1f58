#pragma once

#include "g2sff/linalg.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace g2sff {

/// Label (p, q) of the irreducible Spin(4) = SU(2) x SU(2) representation
/// Sym^p(C^2) (x) Sym^q(C^2).  A real form exists exactly when p = q mod 2.
struct IrrepLabel {
  int p = 0;
  int q = 0;

  int dim() const { return (p + 1) * (q + 1); }
  bool has_real_form() const { return ((p ^ q) & 1) == 0; }
  double casimir_p() const { return static_cast<double>(p) * (p + 2); }
  double casimir_q() const { return static_cast<double>(q) * (q + 2); }

  friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  }
  std::string str() const {
    std::ostringstream os;
    os << "(" << p << "," << q << ")";
    return os.str();
  }
};

/// Matrices of the quaternion units (i, j, k) acting on Sym^q(C^2) in the
/// orthonormal monomial basis b_m ~ z1^{q-m} z2^m, m = 0..q.
///
/// Normalization: [G_a, G_b] = 2 eps_abc G_c and -(Gi^2 + Gj^2 + Gk^2) = q(q+2) Id,
/// so Casimir eigenvalues are integers.  All generators are skew-Hermitian.
inline std::array<MatrixXc, 3> sym_power_generators(int q) {
  if (q < 0) throw InvalidLabelError("negative symmetric power");
  const int n = q + 1;
  const Complex I(0.0, 1.0);
  std::array<MatrixXc, 3> g;
  for (auto& m : g) m = MatrixXc::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    g[0](m, m) = I * static_cast<double>(q - 2 * m);
    if (m + 1 < n) {
      double s = std::sqrt(static_cast<double>((q - m) * (m + 1)));
      g[1](m + 1, m) = -s;
      g[1](m, m + 1) = s;
      g[2](m + 1, m) = I * s;
      g[2](m, m + 1) = I * s;
    }
  }
  return g;
}

/// Antilinear structure map of Sym^q in the same basis: c(v) = C conj(v) with
/// c(b_m) = (-1)^m b_{q-m}; c^2 = (-1)^q.
inline MatrixX sym_power_structure_map(int q) {
  const int n = q + 1;
  MatrixX c = MatrixX::Zero(n, n);
  for (int m = 0; m < n; ++m) c(q - m, m) = ((m % 2) == 0) ? 1.0 : -1.0;
  return c;
}

/// A concrete Spin(4) representation: commuting su(2) actions for the two
/// factors, plus the antilinear structure map when a real form exists.
struct RepSpace {
  int dim = 0;
  std::array<MatrixXc, 3> gen_p, gen_q;
  std::optional<MatrixX> real_structure;  // v -> C conj(v), commutes with the action
  std::vector<std::string> weight_labels;

  MatrixXc casimir_p() const {
    return -(gen_p[0] * gen_p[0] + gen_p[1] * gen_p[1] + gen_p[2] * gen_p[2]);
  }
  MatrixXc casimir_q() const {
    return -(gen_q[0] * gen_q[0] + gen_q[1] * gen_q[1] + gen_q[2] * gen_q[2]);
  }
};

inline RepSpace build_irrep(const IrrepLabel& label) {
  if (label.p < 0 || label.q < 0) throw InvalidLabelError("irrep label must be nonnegative");
  RepSpace rep;
  rep.dim = label.dim();
  auto gp = sym_power_generators(label.p);
  auto gq = sym_power_generators(label.q);
  MatrixXc ip = MatrixXc::Identity(label.p + 1, label.p + 1);
  MatrixXc iq = MatrixXc::Identity(label.q + 1, label.q + 1);
  for (int a = 0; a < 3; ++a) {
    rep.gen_p[a] = kron(gp[a], iq);
    rep.gen_q[a] = kron(ip, gq[a]);
  }
  if (label.has_real_form()) {
    rep.real_structure =
        kron<MatrixX>(sym_power_structure_map(label.p), sym_power_structure_map(label.q));
  }
  for (int mp = 0; mp <= label.p; ++mp)
    for (int mq = 0; mq <= label.q; ++mq) {
      std::ostringstream os;
      os << "p" << label.p - 2 * mp << ":q" << label.q - 2 * mq;
      rep.weight_labels.push_back(os.str());
    }
  return rep;
}

/// Tensor product with the Leibniz action on both su(2) factors.
inline RepSpace tensor(const RepSpace& a, const RepSpace& b) {
  RepSpace rep;
  rep.dim = a.dim * b.dim;
  MatrixXc ia = MatrixXc::Identity(a.dim, a.dim);
  MatrixXc ib = MatrixXc::Identity(b.dim, b.dim);
  for (int g = 0; g < 3; ++g) {
    rep.gen_p[g] = kron(a.gen_p[g], ib) + kron(ia, b.gen_p[g]);
    rep.gen_q[g] = kron(a.gen_q[g], ib) + kron(ia, b.gen_q[g]);
  }
  if (a.real_structure && b.real_structure)
    rep.real_structure = kron(*a.real_structure, *b.real_structure);
  for (const auto& la : a.weight_labels)
    for (const auto& lb : b.weight_labels) rep.weight_labels.push_back(la + "*" + lb);
  return rep;
}

namespace detail {

inline int spin_from_eigenvalue(double lambda, double tol) {
  if (lambda < -tol) throw std::runtime_error("negative Casimir eigenvalue");
  int k = static_cast<int>(std::lround(std::sqrt(1.0 + std::max(lambda, 0.0)) - 1.0));
  double expected = static_cast<double>(k) * (k + 2);
  if (std::abs(lambda - expected) > tol * std::max(1.0, expected))
    throw std::runtime_error("Casimir eigenvalue is not of the form k(k+2)");
  return k;
}

template <typename Mat>
std::vector<int> present_spins_impl(const Mat& casimir, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(casimir);
  std::vector<int> spins;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    int k = spin_from_eigenvalue(es.eigenvalues()(i), tol);
    bool found = false;
    for (int s : spins) found = found || (s == k);
    if (!found) spins.push_back(k);
  }
  std::sort(spins.begin(), spins.end());
  return spins;
}

}  // namespace detail

inline std::vector<int> present_spins(const MatrixXc& casimir, double tol = 1e-6) {
  return detail::present_spins_impl(casimir, tol);
}
inline std::vector<int> present_spins(const MatrixX& casimir, double tol = 1e-6) {
  return detail::present_spins_impl(casimir, tol);
}

/// Spectral projector onto the k(k+2) eigenspace of a Casimir operator,
/// built as the Lagrange polynomial in the Casimir over the spins present.
/// Returns zero when the spin is absent.
template <typename Mat>
Mat spin_projector(const Mat& casimir, int k, double tol = 1e-6) {
  const Eigen::Index n = casimir.rows();
  std::vector<int> spins = detail::present_spins_impl(casimir, tol);
  bool present = false;
  for (int s : spins) present = present || (s == k);
  if (!present) return Mat::Zero(n, n);
  double target = static_cast<double>(k) * (k + 2);
  Mat proj = Mat::Identity(n, n);
  for (int s : spins) {
    if (s == k) continue;
    double mu = static_cast<double>(s) * (s + 2);
    proj = (proj * (casimir - mu * Mat::Identity(n, n)) / (target - mu)).eval();
  }
  return proj;
}

/// Equivariant idempotent onto the full isotypic component of one irrep.
struct IsotypicProjector {
  MatrixXc matrix;
  IrrepLabel target;
  int rank = 0;
};

inline IsotypicProjector isotypic_projector(const RepSpace& space, const IrrepLabel& target) {
  IsotypicProjector out;
  out.target = target;
  MatrixXc pp = spin_projector(space.casimir_p(), target.p);
  MatrixXc pq = spin_projector(space.casimir_q(), target.q);
  out.matrix = pp * pq;
  out.rank = static_cast<int>(std::lround(out.matrix.trace().real()));
  return out;
}

/// Multiplicities from projector ranks divided by irrep dimensions.
inline std::vector<std::pair<IrrepLabel, int>> decomposition_ranks(const RepSpace& space) {
  std::vector<int> sp = present_spins(space.casimir_p());
  std::vector<int> sq = present_spins(space.casimir_q());
  std::vector<std::pair<IrrepLabel, int>> out;
  for (int p : sp)
    for (int q : sq) {
      IrrepLabel label{p, q};
      IsotypicProjector proj = isotypic_projector(space, label);
      if (proj.rank == 0) continue;
      if (proj.rank % label.dim() != 0)
        throw std::runtime_error("projector rank is not a multiple of the irrep dimension");
      out.emplace_back(label, proj.rank / label.dim());
    }
  return out;
}

/// Real form W_{p,q}: the +1 eigenspace of the antilinear structure map.
struct RealForm {
  MatrixX structure;              // c(v) = structure * conj(v)
  std::vector<VectorXc> basis;    // orthonormal basis of the fixed subspace
};

inline RealForm real_form(const IrrepLabel& label) {
  if (!label.has_real_form())
    throw NoRealFormError("no real form: p and q have different parity for " + label.str());
  RepSpace rep = build_irrep(label);
  RealForm out;
  out.structure = *rep.real_structure;
  // C is real symmetric orthogonal with C^2 = 1; fixed vectors of
  // v -> C conj(v) are x + i y with C x = x and C y = -y.
  if ((out.structure - out.structure.transpose()).norm() > 1e-12)
    throw std::runtime_error("structure map is not symmetric");
  Eigen::SelfAdjointEigenSolver<MatrixX> es(out.structure);
  for (Eigen::Index c = 0; c < es.eigenvalues().size(); ++c) {
    VectorX v = es.eigenvectors().col(c);
    VectorXc vc(v.size());
    if (es.eigenvalues()(c) > 0)
      vc = v.cast<Complex>();
    else
      vc = Complex(0.0, 1.0) * v.cast<Complex>();
    out.basis.push_back(vc);
  }
  return out;
}

}  // namespace g2sff
