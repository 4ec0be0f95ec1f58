#pragma once

#include "g2sff/rep_space.hpp"
#include "g2sff/stabilizer.hpp"

#include <array>

namespace g2sff {

/// Complexified cotangent fiber (R^3)^C with the stabilizer action: the
/// q-factor acts by ad, the p-factor trivially.
inline RepSpace cotangent_rep() {
  const StabilizerModel& stab = StabilizerModel::standard();
  RepSpace rep;
  rep.dim = 3;
  for (int a = 0; a < 3; ++a) {
    rep.gen_q[a] = stab.tangent_q[a].cast<Complex>();
    rep.gen_p[a] = MatrixXc::Zero(3, 3);
  }
  rep.weight_labels = {"t1", "t2", "t3"};
  return rep;
}

/// Spinor fiber U_{0,1}.
inline RepSpace spinor_rep() { return build_irrep({0, 1}); }

/// Twisted spinor fiber U_{0,1} (x) U_{1,4} (dim 20).
inline const RepSpace& twisted_spinor_fiber() {
  static const RepSpace rep = tensor(spinor_rep(), build_irrep({1, 4}));
  return rep;
}

/// Dirac-operator domain fiber (R^3)^C (x) U_{0,1} (x) U_{1,4} (dim 60).
inline const RepSpace& dirac_domain_fiber() {
  static const RepSpace rep = tensor(cotangent_rep(), twisted_spinor_fiber());
  return rep;
}

/// Clifford matrix of x in R^3 on the spinor fiber: the quaternion-unit
/// matrices, so cl(x)^2 = -|x|^2.
inline Matrix2c spinor_clifford(const Vector3& x) {
  static const std::array<MatrixXc, 3> g = sym_power_generators(1);
  MatrixXc m = x[0] * g[0] + x[1] * g[1] + x[2] * g[2];
  return Matrix2c(m);
}

namespace detail {

inline MatrixXc clifford_map_impl(bool opposite_sign) {
  // cl(alpha (x) sigma (x) tau) = (alpha . sigma) (x) tau as a 20 x 60 matrix;
  // domain index (a*2 + s)*10 + e, codomain index s*10 + e.
  std::array<MatrixXc, 3> g = sym_power_generators(1);
  MatrixXc cl = MatrixXc::Zero(20, 60);
  for (int a = 0; a < 3; ++a) {
    MatrixXc ga = opposite_sign ? (Complex(0.0, 1.0) * g[a]).eval() : g[a];
    for (int s = 0; s < 2; ++s)
      for (int sp = 0; sp < 2; ++sp) {
        Complex coeff = ga(sp, s);
        if (coeff == Complex(0.0, 0.0)) continue;
        for (int e = 0; e < 10; ++e) cl(sp * 10 + e, (a * 2 + s) * 10 + e) += coeff;
      }
  }
  return cl;
}

}  // namespace detail

/// The equivariant Clifford contraction (R^3)^C (x) U_{0,1} (x) U_{1,4} ->
/// U_{0,1} (x) U_{1,4} with the convention cl(x)^2 = -|x|^2.
inline MatrixXc clifford_map() { return detail::clifford_map_impl(false); }

/// Same contraction under the opposite sign convention cl(x)^2 = +|x|^2
/// (the generators multiplied by i); used to confirm the vanishing results do
/// not depend on the Clifford sign.
inline MatrixXc clifford_map_opposite() { return detail::clifford_map_impl(true); }

/// Orthonormal (Frobenius) basis of the trace-free symmetric 3x3 matrices.
inline const std::array<Matrix3, 5>& sym2_traceless_basis() {
  static const std::array<Matrix3, 5> basis = [] {
    std::array<Matrix3, 5> b;
    const double s2 = std::sqrt(0.5), s6 = 1.0 / std::sqrt(6.0);
    b[0] = Matrix3::Zero();
    b[0](0, 0) = s2;
    b[0](1, 1) = -s2;
    b[1] = Matrix3::Zero();
    b[1](0, 0) = s6;
    b[1](1, 1) = s6;
    b[1](2, 2) = -2.0 * s6;
    auto sym = [](int i, int j) {
      Matrix3 m = Matrix3::Zero();
      m(i, j) = m(j, i) = std::sqrt(0.5);
      return m;
    };
    b[2] = sym(0, 1);
    b[3] = sym(0, 2);
    b[4] = sym(1, 2);
    return b;
  }();
  return basis;
}

/// Complexified stabilizer action on Sym^2_0(R^3) (x) R^4 in the basis
/// sym2_traceless_basis() (x) (e4..e7); basis index mu*4 + alpha.
inline const RepSpace& sff_fiber_rep() {
  static const RepSpace rep = [] {
    const StabilizerModel& stab = StabilizerModel::standard();
    const auto& sym = sym2_traceless_basis();
    RepSpace out;
    out.dim = 20;
    for (int a = 0; a < 3; ++a) {
      MatrixX gq = MatrixX::Zero(20, 20), gp = MatrixX::Zero(20, 20);
      for (int mu = 0; mu < 5; ++mu) {
        // tangent factor acts on covariant symmetric 2-tensors by S -> [T, S]
        Matrix3 ts = stab.tangent_q[a] * sym[mu] - sym[mu] * stab.tangent_q[a];
        for (int nu = 0; nu < 5; ++nu) {
          double coeff = (ts.array() * sym[nu].array()).sum();
          if (coeff == 0.0) continue;
          for (int alpha = 0; alpha < 4; ++alpha) gq(nu * 4 + alpha, mu * 4 + alpha) += coeff;
        }
        for (int alpha = 0; alpha < 4; ++alpha)
          for (int beta = 0; beta < 4; ++beta) {
            double nq = stab.normal_q[a](beta, alpha);
            double np = stab.normal_p[a](beta, alpha);
            if (nq != 0.0) gq(mu * 4 + beta, mu * 4 + alpha) += nq;
            if (np != 0.0) gp(mu * 4 + beta, mu * 4 + alpha) += np;
          }
      }
      out.gen_q[a] = gq.cast<Complex>();
      out.gen_p[a] = gp.cast<Complex>();
    }
    return out;
  }();
  return rep;
}

namespace detail {

/// 2x2 complex matrix of the quaternion y in the standard embedding
/// H -> M_2(C), 1,i,j,k -> I, diag(i,-i), [[0,1],[-1,0]], [[0,i],[i,0]].
inline Matrix2c quaternion_matrix(const Quaternion& y) {
  Matrix2c m;
  const Complex I(0.0, 1.0);
  m(0, 0) = y.w + I * y.x;
  m(0, 1) = y.y + I * y.z;
  m(1, 0) = -y.y + I * y.z;
  m(1, 1) = y.w - I * y.x;
  return m;
}

inline Matrix2c matrix_J() {
  Matrix2c j = Matrix2c::Zero();
  j(0, 1) = Complex(1.0, 0.0);
  j(1, 0) = Complex(-1.0, 0.0);
  return j;
}

/// Equivariant map from a normal vector (frame components) to the spinor pair
/// model C^2_s (x) C^2_xi: the columns of M(y) J, with y the quaternion gauge
/// of the normal components.
inline Matrix2c normal_to_spinor_pair(const Vector4& n) {
  Matrix4 d = normal_quaternion_gauge();
  Vector4 y = d * n;
  return Matrix2c(quaternion_matrix(Quaternion::from_vector(y)) * matrix_J());
}

/// Quadratic polynomial (plain monomial coefficients of z1^2, z1 z2, z2^2)
/// representing the cotangent basis vector e_a under T*^C ~ Sym^2(spinors).
inline Eigen::Vector3cd cotangent_quadratic(int a) {
  const Complex I(0.0, 1.0);
  switch (a) {
    case 0: return Eigen::Vector3cd(0.0, 2.0 * I, 0.0);
    case 1: return Eigen::Vector3cd(-1.0, 0.0, -1.0);
    case 2: return Eigen::Vector3cd(-I, 0.0, I);
    default: throw InvalidLabelError("cotangent index out of range");
  }
}

}  // namespace detail

/// Explicit fiber isomorphism F : (Sym^2_0(R^3) (x) R^4)^C -> U_{0,1} (x) U_{1,4}.
///
/// On decomposables it sends (normal spinor pair sigma (x) xi) tensored with a
/// product of cotangent quadratics to sigma (x) (xi (x) quartic), the quartic
/// being the polynomial product of the quadratics.  Domain basis as in
/// sff_fiber_rep(), codomain as in twisted_spinor_fiber().
inline const MatrixXc& isomorphism_F() {
  static const MatrixXc f = [] {
    const auto& sym = sym2_traceless_basis();
    MatrixXc out = MatrixXc::Zero(20, 20);
    for (int mu = 0; mu < 5; ++mu) {
      // quartic plain coefficients of sum_ab S_ab t_a t_b
      Eigen::Matrix<Complex, 5, 1> quartic = Eigen::Matrix<Complex, 5, 1>::Zero();
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          double s = sym[mu](a, b);
          if (s == 0.0) continue;
          Eigen::Vector3cd ta = detail::cotangent_quadratic(a);
          Eigen::Vector3cd tb = detail::cotangent_quadratic(b);
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) quartic[m + n] += s * ta[m] * tb[n];
        }
      // plain monomial coefficients -> orthonormal basis coordinates of Sym^4
      for (int m = 0; m < 5; ++m) {
        static const double binom[5] = {1.0, 4.0, 6.0, 4.0, 1.0};
        quartic[m] /= std::sqrt(binom[m]);
      }
      for (int alpha = 0; alpha < 4; ++alpha) {
        Vector4 n = Vector4::Zero();
        n[alpha] = 1.0;
        Matrix2c nu = detail::normal_to_spinor_pair(n);
        for (int s = 0; s < 2; ++s)
          for (int xi = 0; xi < 2; ++xi) {
            Complex c = nu(s, xi);
            if (c == Complex(0.0, 0.0)) continue;
            for (int m = 0; m < 5; ++m)
              out(s * 10 + xi * 5 + m, mu * 4 + alpha) += c * quartic[m];
          }
      }
    }
    return out;
  }();
  return f;
}

}  // namespace g2sff
