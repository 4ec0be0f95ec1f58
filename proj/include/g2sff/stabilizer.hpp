#pragma once

#include "g2sff/g2_algebra.hpp"
#include "g2sff/quaternion.hpp"
#include "g2sff/rep_space.hpp"

#include <array>
#include <string>

namespace g2sff {

namespace detail {

/// Coordinate change between the normal-slot components (e4..e7) and the
/// quaternion coordinates (1, i, j, k) of the normal space.  The signs are
/// fixed so that the so(4) generators below annihilate the standard phi.
inline Matrix4 normal_quaternion_gauge() {
  Matrix4 d = Matrix4::Zero();
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  d(2, 2) = -1.0;
  d(3, 3) = 1.0;
  return d;
}

}  // namespace detail

/// so(4) = sp(1) + sp(1) acting on R^7 = R^3 (+) R^4 in the coordinates of the
/// standard frame: tangent span(e1,e2,e3), normal span(e4..e7).
///
/// For a generator pair (a, b) of quaternion units, the tangent factor carries
/// x -> a x - x a (x in Im H) and the normal factor y -> a y - y b (y in H).
/// The q-generators are the pairs (a, 0), the p-generators the pairs (0, b);
/// each annihilates phi and is skew, and [G_a, G_b] = 2 eps_abc G_c holds in
/// each factor.
struct StabilizerModel {
  std::array<Matrix3, 3> tangent_q;
  std::array<Matrix4, 3> normal_q;
  std::array<Matrix4, 3> normal_p;
  std::array<Matrix7, 3> gen_q, gen_p;

  static const StabilizerModel& standard() {
    static const StabilizerModel model = build();
    return model;
  }

 private:
  static StabilizerModel build() {
    StabilizerModel m;
    const Matrix4 d = detail::normal_quaternion_gauge();
    for (int a = 0; a < 3; ++a) {
      Quaternion u = Quaternion::unit(a + 1);
      // ad_a on Im H in the basis (i, j, k)
      Matrix3 ad;
      for (int c = 0; c < 3; ++c) {
        Quaternion col = u * Quaternion::unit(c + 1) - Quaternion::unit(c + 1) * u;
        Vector4 cv = col.to_vector();
        ad.col(c) = Vector3(cv[1], cv[2], cv[3]);
      }
      m.tangent_q[a] = ad;
      m.normal_q[a] = d * left_mult_matrix(u) * d;
      m.normal_p[a] = -(d * right_mult_matrix(u) * d);

      m.gen_q[a] = Matrix7::Zero();
      m.gen_q[a].block<3, 3>(0, 0) = m.tangent_q[a];
      m.gen_q[a].block<4, 4>(3, 3) = m.normal_q[a];
      m.gen_p[a] = Matrix7::Zero();
      m.gen_p[a].block<4, 4>(3, 3) = m.normal_p[a];
    }
    return m;
  }
};

/// max over basis triples of the derivative of phi along the generator,
/// |phi(A e_i, e_j, e_k) + phi(e_i, A e_j, e_k) + phi(e_i, e_j, A e_k)|.
inline double phi_annihilation_residual(const Matrix7& gen, const ThreeForm7& phi) {
  double worst = 0.0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) {
        Vector7 ei = basis7(i), ej = basis7(j), ek = basis7(k);
        double v = phi(gen * ei, ej, ek) + phi(ei, gen * ej, ek) + phi(ei, ej, gen * ek);
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

/// Real so(4) representation on a tensor product of tangent ('t', dim 3) and
/// normal ('n', dim 4) factors, with kron-sum generators.  Index order: the
/// first factor varies slowest.
struct RealTensorRep {
  int dim = 0;
  std::array<MatrixX, 3> gen_q, gen_p;

  MatrixX casimir_q() const {
    return -(gen_q[0] * gen_q[0] + gen_q[1] * gen_q[1] + gen_q[2] * gen_q[2]);
  }
  MatrixX casimir_p() const {
    return -(gen_p[0] * gen_p[0] + gen_p[1] * gen_p[1] + gen_p[2] * gen_p[2]);
  }
};

inline RealTensorRep stabilizer_tensor_rep(const std::string& factors) {
  const StabilizerModel& stab = StabilizerModel::standard();
  RealTensorRep rep;
  rep.dim = 1;
  for (char f : factors) {
    if (f != 't' && f != 'n') throw InvalidLabelError("tensor factor must be 't' or 'n'");
    rep.dim *= (f == 't') ? 3 : 4;
  }
  for (int a = 0; a < 3; ++a) {
    rep.gen_q[a] = MatrixX::Zero(rep.dim, rep.dim);
    rep.gen_p[a] = MatrixX::Zero(rep.dim, rep.dim);
    for (size_t pos = 0; pos < factors.size(); ++pos) {
      MatrixX termq = MatrixX::Identity(1, 1), termp = MatrixX::Identity(1, 1);
      for (size_t f = 0; f < factors.size(); ++f) {
        int d = (factors[f] == 't') ? 3 : 4;
        MatrixX blockq, blockp;
        if (f == pos) {
          if (factors[f] == 't') {
            blockq = stab.tangent_q[a];
            blockp = MatrixX::Zero(3, 3);
          } else {
            blockq = stab.normal_q[a];
            blockp = stab.normal_p[a];
          }
        } else {
          blockq = MatrixX::Identity(d, d);
          blockp = MatrixX::Identity(d, d);
        }
        termq = kron(termq, blockq);
        termp = kron(termp, blockp);
      }
      rep.gen_q[a] += termq;
      rep.gen_p[a] += termp;
    }
  }
  return rep;
}

/// Cached isotypic projectors for the geometric checks: the q-spin components
/// of T* (x) T* (x) N (dim 36, spins 5,3,1) and T* (x) T* (x) T* (x) N
/// (dim 108, spins 7,5,3,1).  Trace-free symmetric tensors only meet the
/// subsets {5,3} and {7,5,3,1} of these.
struct GeometricProjectors {
  MatrixX sym2_q5, sym2_q3, sym2_q1;
  MatrixX cov_q7, cov_q5, cov_q3, cov_q1;

  static const GeometricProjectors& instance() {
    static const GeometricProjectors ctx = build();
    return ctx;
  }

 private:
  static GeometricProjectors build() {
    GeometricProjectors ctx;
    RealTensorRep ttn = stabilizer_tensor_rep("ttn");
    MatrixX c36 = ttn.casimir_q();
    ctx.sym2_q5 = spin_projector(c36, 5);
    ctx.sym2_q3 = spin_projector(c36, 3);
    ctx.sym2_q1 = spin_projector(c36, 1);
    RealTensorRep tttn = stabilizer_tensor_rep("tttn");
    MatrixX c108 = tttn.casimir_q();
    ctx.cov_q7 = spin_projector(c108, 7);
    ctx.cov_q5 = spin_projector(c108, 5);
    ctx.cov_q3 = spin_projector(c108, 3);
    ctx.cov_q1 = spin_projector(c108, 1);
    return ctx;
  }
};

}  // namespace g2sff
