#include "g2sff/stabilizer.hpp"
#include "g2sff/twisted_spinor.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace g2sff;

TEST_CASE("stabilizer generators are skew and annihilate phi") {
  const StabilizerModel& stab = StabilizerModel::standard();
  ThreeForm7 phi = ThreeForm7::from_epsilon();
  for (int a = 0; a < 3; ++a) {
    CHECK((stab.gen_q[a] + stab.gen_q[a].transpose()).norm() < 1e-14);
    CHECK((stab.gen_p[a] + stab.gen_p[a].transpose()).norm() < 1e-14);
    CHECK(phi_annihilation_residual(stab.gen_q[a], phi) < 1e-12);
    CHECK(phi_annihilation_residual(stab.gen_p[a], phi) < 1e-12);
  }
  // a generic skew matrix does not annihilate phi (non-vacuity)
  Matrix7 skew = Matrix7::Zero();
  skew(0, 3) = 1.0;
  skew(3, 0) = -1.0;
  CHECK(phi_annihilation_residual(skew, phi) > 0.5);
}

TEST_CASE("stabilizer factors satisfy su(2) brackets and commute") {
  const StabilizerModel& stab = StabilizerModel::standard();
  int eps[3][3][3] = {};
  eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
  eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Matrix7 lq = stab.gen_q[a] * stab.gen_q[b] - stab.gen_q[b] * stab.gen_q[a];
      Matrix7 lp = stab.gen_p[a] * stab.gen_p[b] - stab.gen_p[b] * stab.gen_p[a];
      Matrix7 rq = Matrix7::Zero(), rp = Matrix7::Zero();
      for (int c = 0; c < 3; ++c) {
        rq += 2.0 * eps[a][b][c] * stab.gen_q[c];
        rp += 2.0 * eps[a][b][c] * stab.gen_p[c];
      }
      CHECK((lq - rq).norm() < 1e-13);
      CHECK((lp - rp).norm() < 1e-13);
      CHECK((stab.gen_q[a] * stab.gen_p[b] - stab.gen_p[b] * stab.gen_q[a]).norm() < 1e-13);
    }
}

TEST_CASE("R^7 decomposes as V_{0,2} + V_{1,1} under the stabilizer") {
  const StabilizerModel& stab = StabilizerModel::standard();
  RepSpace amb;
  amb.dim = 7;
  for (int a = 0; a < 3; ++a) {
    amb.gen_q[a] = stab.gen_q[a].cast<Complex>();
    amb.gen_p[a] = stab.gen_p[a].cast<Complex>();
  }
  auto dec = decomposition_ranks(amb);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == IrrepLabel{0, 2});
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == IrrepLabel{1, 1});
  CHECK(dec[1].second == 1);
}

TEST_CASE("Clifford relation on the spinor factor") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    Vector3 x = random_vector<Vector3>(rng);
    Matrix2c cl = spinor_clifford(x);
    Eigen::Vector2cd sigma;
    sigma << Complex(uniform(rng), uniform(rng)), Complex(uniform(rng), uniform(rng));
    Eigen::Vector2cd lhs = cl * (cl * sigma) + x.squaredNorm() * sigma;
    CHECK(lhs.norm() < 1e-12 * std::max(1.0, sigma.norm()));
  }
}

TEST_CASE("Clifford contraction is equivariant") {
  MatrixXc cl = clifford_map();
  const RepSpace& dom = dirac_domain_fiber();
  const RepSpace& cod = twisted_spinor_fiber();
  for (int a = 0; a < 3; ++a) {
    CHECK((cl * dom.gen_q[a] - cod.gen_q[a] * cl).norm() < 1e-12);
    CHECK((cl * dom.gen_p[a] - cod.gen_p[a] * cl).norm() < 1e-12);
  }
}

TEST_CASE("Schur vanishing of the Clifford contraction") {
  const RepSpace& dom = dirac_domain_fiber();
  IsotypicProjector p17 = isotypic_projector(dom, {1, 7});
  IsotypicProjector p11 = isotypic_projector(dom, {1, 1});
  IsotypicProjector p15 = isotypic_projector(dom, {1, 5});
  for (const MatrixXc& cl : {clifford_map(), clifford_map_opposite()}) {
    CHECK(operator_norm(cl * p17.matrix) < 1e-10);
    CHECK(operator_norm(cl * p11.matrix) < 1e-10);
    CHECK(numerical_rank(cl) == 20);
    // the complementary components are genuinely hit (non-vacuity)
    CHECK(operator_norm(cl * p15.matrix) > 1e-2);
  }
}

TEST_CASE("decomposition of the 60-dimensional Dirac domain") {
  const RepSpace& dom = dirac_domain_fiber();
  auto dec = decomposition_ranks(dom);
  std::map<std::pair<int, int>, int> mult;
  int total = 0;
  for (const auto& [label, m] : dec) {
    mult[{label.p, label.q}] = m;
    total += m * label.dim();
  }
  CHECK(total == 60);
  CHECK(mult.size() == 4);
  CHECK(mult[{1, 7}] == 1);
  CHECK(mult[{1, 5}] == 2);
  CHECK(mult[{1, 3}] == 2);
  CHECK(mult[{1, 1}] == 1);
  CHECK(IrrepLabel{1, 7}.dim() == 16);
  CHECK(IrrepLabel{1, 5}.dim() == 12);
  CHECK(IrrepLabel{1, 3}.dim() == 8);
  CHECK(IrrepLabel{1, 1}.dim() == 4);
}

TEST_CASE("fiber isomorphism F is bijective, equivariant, isotypic-preserving") {
  const MatrixXc& f = isomorphism_F();
  CHECK(numerical_rank(f) == 20);

  const RepSpace& dom = sff_fiber_rep();
  const RepSpace& cod = twisted_spinor_fiber();
  for (int a = 0; a < 3; ++a) {
    CHECK((f * dom.gen_q[a] - cod.gen_q[a] * f).norm() < 1e-10);
    CHECK((f * dom.gen_p[a] - cod.gen_p[a] * f).norm() < 1e-10);
  }

  for (IrrepLabel label : {IrrepLabel{1, 5}, {1, 3}}) {
    IsotypicProjector pd = isotypic_projector(dom, label);
    IsotypicProjector pc = isotypic_projector(cod, label);
    CHECK(pd.rank == label.dim());
    CHECK(pc.rank == label.dim());
    CHECK((pc.matrix * f - f * pd.matrix).norm() < 1e-10);
  }
}

TEST_CASE("sff fiber rep decomposes as W_{1,5} + W_{1,3}") {
  const RepSpace& dom = sff_fiber_rep();
  auto dec = decomposition_ranks(dom);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == IrrepLabel{1, 3});
  CHECK(dec[1].first == IrrepLabel{1, 5});
}

TEST_CASE("geometric projectors: completeness and orthogonality") {
  const GeometricProjectors& g = GeometricProjectors::instance();
  Rng rng(37);

  MatrixX sum36 = g.sym2_q5 + g.sym2_q3 + g.sym2_q1;
  CHECK((sum36 - MatrixX::Identity(36, 36)).norm() < 1e-10);
  CHECK((g.sym2_q5 * g.sym2_q3).norm() < 1e-10);

  MatrixX sum108 = g.cov_q7 + g.cov_q5 + g.cov_q3 + g.cov_q1;
  CHECK((sum108 - MatrixX::Identity(108, 108)).norm() < 1e-10);

  for (int t = 0; t < 20; ++t) {
    VectorX v = VectorX::NullaryExpr(108, [&](Eigen::Index) { return uniform(rng); });
    double total = v.squaredNorm();
    double parts = (g.cov_q7 * v).squaredNorm() + (g.cov_q5 * v).squaredNorm() +
                   (g.cov_q3 * v).squaredNorm() + (g.cov_q1 * v).squaredNorm();
    CHECK(std::abs(total - parts) < 1e-8 * total);
  }
}
