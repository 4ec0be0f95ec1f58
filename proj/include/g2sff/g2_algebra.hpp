#pragma once

#include "g2sff/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

namespace g2sff {

/// Structure constants eps_ijk of the standard G2 cross product on R^7,
/// totally antisymmetric with the seven positive base triples
/// (123), (145), (167), (246), (275), (374), (365).
class EpsilonTable {
 public:
  static const std::array<std::array<int, 3>, 7>& base_triples() {
    static const std::array<std::array<int, 3>, 7> triples = {{
        {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 7, 5}, {3, 7, 4}, {3, 6, 5}}};
    return triples;
  }

  EpsilonTable() {
    std::array<int, 7> signs;
    signs.fill(1);
    build(signs);
  }

  /// Fault-injection variant: the sign of one base triple is flipped.
  static EpsilonTable with_flipped_triple(int index) {
    if (index < 0 || index >= 7) throw InvalidLabelError("base triple index out of range");
    EpsilonTable t;
    std::array<int, 7> signs;
    signs.fill(1);
    signs[static_cast<size_t>(index)] = -1;
    t.build(signs);
    return t;
  }

  /// 1-based indices in {1..7}.
  int value(int i, int j, int k) const {
    return e_[check(i)][check(j)][check(k)];
  }

  static const EpsilonTable& standard() {
    static const EpsilonTable table;
    return table;
  }

 private:
  static int check(int i) {
    if (i < 1 || i > 7) throw InvalidLabelError("epsilon index out of range");
    return i - 1;
  }

  void build(const std::array<int, 7>& signs) {
    for (auto& plane : e_)
      for (auto& row : plane) row.fill(0);
    for (size_t t = 0; t < 7; ++t) {
      std::array<int, 3> idx = base_triples()[t];
      // all six permutations with parity
      std::array<int, 3> perm = {0, 1, 2};
      std::sort(perm.begin(), perm.end());
      do {
        int inversions = 0;
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b)
            if (perm[a] > perm[b]) ++inversions;
        int sign = (inversions % 2 == 0) ? 1 : -1;
        e_[idx[perm[0]] - 1][idx[perm[1]] - 1][idx[perm[2]] - 1] =
            static_cast<int8_t>(sign * signs[t]);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  std::array<std::array<std::array<int8_t, 7>, 7>, 7> e_;
};

/// (u x v)_k = sum_ij eps_ijk u_i v_j
inline Vector7 cross7(const EpsilonTable& eps, const Vector7& u, const Vector7& v) {
  Vector7 w = Vector7::Zero();
  for (int i = 0; i < 7; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < 7; ++j) {
      if (v[j] == 0.0) continue;
      for (int k = 0; k < 7; ++k) {
        int e = eps.value(i + 1, j + 1, k + 1);
        if (e != 0) w[k] += e * u[i] * v[j];
      }
    }
  }
  return w;
}

inline Vector7 cross7(const Vector7& u, const Vector7& v) {
  return cross7(EpsilonTable::standard(), u, v);
}

/// phi(u, v, w) = <u x v, w>
inline double phi_eval(const EpsilonTable& eps, const Vector7& u, const Vector7& v,
                       const Vector7& w) {
  return cross7(eps, u, v).dot(w);
}

inline double phi_eval(const Vector7& u, const Vector7& v, const Vector7& w) {
  return phi_eval(EpsilonTable::standard(), u, v, w);
}

/// Alternating 3-tensor on R^7 stored densely over all index triples.
class ThreeForm7 {
 public:
  ThreeForm7() {
    for (auto& plane : c_)
      for (auto& row : plane) row.fill(0.0);
  }

  static ThreeForm7 from_epsilon(const EpsilonTable& eps = EpsilonTable::standard()) {
    ThreeForm7 f;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) f.c_[i][j][k] = eps.value(i + 1, j + 1, k + 1);
    return f;
  }

  /// Sets phi(e_i, e_j, e_k) for i<j<k (1-based) and all alternations.
  void set(int i, int j, int k, double value) {
    int a = i - 1, b = j - 1, c = k - 1;
    if (a == b || b == c || a == c) throw InvalidLabelError("repeated index in 3-form entry");
    c_[a][b][c] = value;
    c_[b][c][a] = value;
    c_[c][a][b] = value;
    c_[a][c][b] = -value;
    c_[b][a][c] = -value;
    c_[c][b][a] = -value;
  }

  double value(int i, int j, int k) const { return c_[i - 1][j - 1][k - 1]; }

  double operator()(const Vector7& u, const Vector7& v, const Vector7& w) const {
    double s = 0.0;
    for (int i = 0; i < 7; ++i) {
      if (u[i] == 0.0) continue;
      for (int j = 0; j < 7; ++j) {
        if (v[j] == 0.0) continue;
        for (int k = 0; k < 7; ++k) s += c_[i][j][k] * u[i] * v[j] * w[k];
      }
    }
    return s;
  }

  ThreeForm7& operator+=(const ThreeForm7& other) {
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) c_[i][j][k] += other.c_[i][j][k];
    return *this;
  }

  ThreeForm7 scaled(double s) const {
    ThreeForm7 f = *this;
    for (auto& plane : f.c_)
      for (auto& row : plane)
        for (auto& v : row) v *= s;
    return f;
  }

  static ThreeForm7 random_alternating(Rng& rng) {
    ThreeForm7 f;
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) f.set(i, j, k, uniform(rng));
    return f;
  }

 private:
  std::array<std::array<std::array<double, 7>, 7>, 7> c_;
};

namespace detail {

struct Permutation7 {
  std::array<int, 7> idx;
  int sign;
};

inline const std::vector<Permutation7>& permutations7() {
  static const std::vector<Permutation7> perms = [] {
    std::vector<Permutation7> out;
    out.reserve(5040);
    std::array<int, 7> p = {0, 1, 2, 3, 4, 5, 6};
    do {
      int inversions = 0;
      for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
          if (p[a] > p[b]) ++inversions;
      out.push_back({p, (inversions % 2 == 0) ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

}  // namespace detail

/// Matrix of the bilinear form B_phi(v, w) vol = (i_v phi) ^ (i_w phi) ^ phi,
/// expressed against the coefficient of e^1...e^7.
inline Matrix7 b_form_matrix(const ThreeForm7& phi) {
  // phi as raw components for speed
  double c[7][7][7];
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) c[i][j][k] = phi.value(i + 1, j + 1, k + 1);

  Matrix7 b = Matrix7::Zero();
  for (const auto& perm : detail::permutations7()) {
    const auto& p = perm.idx;
    double tail = c[p[4]][p[5]][p[6]];
    if (tail == 0.0) continue;
    for (int v = 0; v < 7; ++v) {
      double a = c[v][p[0]][p[1]];
      if (a == 0.0) continue;
      for (int w = 0; w < 7; ++w) {
        double bb = c[w][p[2]][p[3]];
        if (bb != 0.0) b(v, w) += perm.sign * a * bb * tail;
      }
    }
  }
  // wedge normalization for 2-form ^ 2-form ^ 3-form
  b /= 2.0 * 2.0 * 6.0;
  return 0.5 * (b + b.transpose());
}

enum class FormSignature { Definite, Indefinite, Degenerate };

inline FormSignature b_form_signature(const ThreeForm7& phi) {
  Matrix7 b = b_form_matrix(phi);
  Eigen::SelfAdjointEigenSolver<Matrix7> es(b);
  const auto& ev = es.eigenvalues();
  double scale = std::max(std::abs(ev(0)), std::abs(ev(6)));
  if (scale < 1e-14) return FormSignature::Degenerate;
  int pos = 0, neg = 0;
  for (int i = 0; i < 7; ++i) {
    if (ev(i) > 1e-10 * scale)
      ++pos;
    else if (ev(i) < -1e-10 * scale)
      ++neg;
  }
  if (pos + neg < 7) return FormSignature::Degenerate;
  if (pos == 7 || neg == 7) return FormSignature::Definite;
  return FormSignature::Indefinite;
}

/// The unique d with <d, x> = det[a | b | c | x], by cofactor expansion.
inline Vector4 triple_cross4(const Vector4& a, const Vector4& b, const Vector4& c) {
  auto minor3 = [&](int skip) {
    int r[3], n = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) r[n++] = i;
    return a[r[0]] * (b[r[1]] * c[r[2]] - b[r[2]] * c[r[1]]) -
           a[r[1]] * (b[r[0]] * c[r[2]] - b[r[2]] * c[r[0]]) +
           a[r[2]] * (b[r[0]] * c[r[1]] - b[r[1]] * c[r[0]]);
  };
  Vector4 d;
  for (int l = 0; l < 4; ++l) {
    // expansion of det[a|b|c|e_l] along the last column
    double sign = ((l + 3) % 2 == 0) ? 1.0 : -1.0;
    d[l] = sign * minor3(l);
  }
  return d;
}

/// |phi(o1,o2,o3) - 1| for the oriented orthonormalization (o1,o2,o3) of the
/// inputs.  Zero exactly when the oriented plane is associative.
inline double associativity_residual(const EpsilonTable& eps, const Vector7& t1,
                                     const Vector7& t2, const Vector7& t3) {
  double scale = std::max({t1.norm(), t2.norm(), t3.norm(), 1e-300});
  Vector7 o1 = t1;
  if (o1.norm() < 1e-12 * scale) throw DegenerateInputError("rank-deficient span");
  o1.normalize();
  Vector7 o2 = t2 - t2.dot(o1) * o1;
  if (o2.norm() < 1e-12 * scale) throw DegenerateInputError("rank-deficient span");
  o2.normalize();
  Vector7 o3 = t3 - t3.dot(o1) * o1;
  o3 -= o3.dot(o2) * o2;
  if (o3.norm() < 1e-12 * scale) throw DegenerateInputError("rank-deficient span");
  o3.normalize();
  return std::abs(phi_eval(eps, o1, o2, o3) - 1.0);
}

inline double associativity_residual(const Vector7& t1, const Vector7& t2, const Vector7& t3) {
  return associativity_residual(EpsilonTable::standard(), t1, t2, t3);
}

inline Vector7 basis7(int i) {
  Vector7 v = Vector7::Zero();
  v[i - 1] = 1.0;
  return v;
}

}  // namespace g2sff
