#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defcalc/jacobi.hpp"

using namespace defcalc;

namespace {

// n abelian generators in degree 1, zero differential
DGLA abelian_odd(int n) {
  DGLA L;
  L.degs.assign(n, 1);
  L.bracket.assign(n, std::vector<Vec>(n, Vec(n, 0)));
  L.d = Mat(n, n);
  return L;
}

DGModule trivial_module(const DGLA& L, int r) {
  DGModule M;
  M.degs.assign(r, 0);
  M.action.assign(L.dim(), Mat(r, r));
  M.d = Mat(r, r);
  return M;
}

int factorial_of_multiplicities(const Word& w) {
  int f = 1, run = 1;
  for (size_t i = 1; i < w.size(); ++i) {
    run = w[i] == w[i - 1] ? run + 1 : 1;
    f *= run;
  }
  return f;
}

}  // namespace

TEST_CASE("point-model layers and vanishing square") {
  MatrixLie sl2 = sl2_standard();
  JacobiComplex j = jacobi(sl2.g, 3);
  CHECK(j.layer[1].dim() == 3);
  CHECK(j.layer[2].dim() == 3);
  CHECK(j.layer[3].dim() == 1);
  CHECK(!j.dc.validate());
  CHECK(!j.total.cx.validate());
  // degree-0 letters: lambda^i sits in total degree -i
  CHECK(j.total.cx.dim(-1) == 3);
  CHECK(j.total.cx.dim(-2) == 3);
  CHECK(j.total.cx.dim(-3) == 1);
  CHECK(j.total.cx.dim(0) == 0);
  // order 1: the complex is the algebra itself
  JacobiComplex j1 = jacobi(sl2.g, 1);
  CHECK(j1.total.cx.dim(-1) == 3);
  CHECK(j1.total.cx.dims.size() == 1);
}

TEST_CASE("deformation space dimension counts") {
  // zero bracket, zero differential, two degree-1 generators: classes in
  // degree 0 are the weakly increasing words, S^i of the plane
  DGLA L = abelian_odd(2);
  CHECK(deformation_ring(jacobi(L, 2)).vdim == 5);   // 2 + 3
  CHECK(deformation_ring(jacobi(L, 3)).vdim == 9);   // 2 + 3 + 4
  // rigid point model: no degree-0 classes at all
  MatrixLie sl2 = sl2_standard();
  for (int m = 1; m <= 3; ++m) {
    DeformationRing r = deformation_ring(jacobi(sl2.g, m));
    CHECK(r.vdim == 0);
    CHECK(r.ring.dim == 1);
  }
  // contractible model: d matches the two generators away
  DGLA C;
  C.degs = {0, 1};
  C.bracket.assign(2, std::vector<Vec>(2, Vec(2, 0)));
  C.d = Mat(2, 2);
  C.d.at(1, 0) = 1;
  CHECK(deformation_ring(jacobi(C, 2)).vdim == 0);
}

TEST_CASE("deformation ring of the zero-bracket plane is the truncated polynomial ring") {
  DGLA L = abelian_odd(2);
  JacobiComplex j = jacobi(L, 2);
  DeformationRing r = deformation_ring(j);
  REQUIRE(r.ring.dim == 6);
  ArtinInfo info = artin_validate(r.ring);
  CAPTURE(info.report.issues.empty() ? "" : info.report.issues[0].check);
  CHECK(info.report.ok());
  AdaptedArtin ad = adapt(r.ring);
  CHECK(ad.nilpotency == 3);  // m^3 = 0, m^2 != 0
  // explicit table isomorphism onto C[t0,t1]/(t0,t1)^3: the dual of a word
  // class goes to its monomial over the repetition factorial
  ArtinAlgebra poly = ArtinAlgebra::truncated_poly(2, 2);
  auto mons = truncated_poly_monomials(2, 2);
  Mat f(poly.dim, r.ring.dim);
  f.at(0, 0) = 1;
  for (int l = 0; l < r.vdim; ++l)
    for (int i = 1; i <= j.m; ++i)
      for (int k = 0; k < j.block_dim(i); ++k) {
        auto [n, idx] = j.coord(i, k);
        if (n != 0 || r.vproj.at(l, idx) == 0) continue;
        const Word& w = j.layer[i].words[k];
        int mi = int(std::find(mons.begin(), mons.end(), w) - mons.begin());
        REQUIRE(mi < int(mons.size()));
        f.at(mi, 1 + l) += r.vproj.at(l, idx) / factorial_of_multiplicities(w);
      }
  CHECK(rank_of(f) == 6);
  ValidationReport hom = algebra_hom_check(r.ring, poly, f);
  CAPTURE(hom.issues.empty() ? "" : hom.issues[0].check + " " + hom.issues[0].witness);
  CHECK(hom.ok());
}

TEST_CASE("truncations are chain maps and induce ring surjections") {
  MatrixLie sl2 = sl2_standard();
  CHECK(truncation_check(jacobi(sl2.g, 2), jacobi(sl2.g, 3)).ok());
  DGLA L = abelian_odd(2);
  JacobiComplex j1 = jacobi(L, 1), j2 = jacobi(L, 2);
  CHECK(truncation_check(j1, j2).ok());
  DeformationRing r1 = deformation_ring(j1), r2 = deformation_ring(j2);
  CHECK(r1.ring.dim == 3);  // square-zero extension by H^1*
  Mat f = ring_truncation(j1, j2, r1, r2);
  CHECK(f.at(0, 0) == 1);
  CHECK(rank_of(f) == 3);  // surjective onto R_1
  CHECK(algebra_hom_check(r2.ring, r1.ring, f).ok());
  // R_1 is square-zero: all products of maximal-ideal elements vanish
  for (int a = 1; a < 3; ++a)
    for (int b = 1; b < 3; ++b) CHECK(r1.ring.product[a][b] == Vec(3, 0));
}

TEST_CASE("module complexes: order-1 map is the action") {
  MatrixLie sl2 = sl2_standard();
  DGLA L = DGLA::of(sl2.g);
  DGModule M = DGModule::of(sl2.defining);
  JacobiComplex j = jacobi_module(L, M, 2);
  CHECK(!j.dc.validate());
  CHECK(!j.total.cx.validate());
  Mat h = j.dc.hor.at({-1, 0});
  REQUIRE(h.rows() == 2);
  REQUIRE(h.cols() == 6);
  for (int w = 0; w < 3; ++w)
    for (int e = 0; e < 2; ++e)
      for (int e2 = 0; e2 < 2; ++e2)
        CHECK(h.at(e2, w * 2 + e) == sl2.defining.action[w].at(e2, e));
  // order 1: two-term complex g (x) E -> E
  JacobiComplex j1 = jacobi_module(L, M, 1);
  CHECK(j1.total.cx.dim(-1) == 6);
  CHECK(j1.total.cx.dim(0) == 2);
}

TEST_CASE("squares vanish across the corpus up to order four") {
  MatrixLie sl2 = sl2_standard();
  GeometricModel gm = tensor_model(sl2, exterior_square_algebra());
  DGLA L = abelian_odd(2);
  DGModule M = trivial_module(L, 2);
  for (int m = 1; m <= 4; ++m) {
    CHECK(!jacobi(sl2.g, m).total.cx.validate());
    CHECK(!jacobi(gm, m).total.cx.validate());
    CHECK(!jacobi(L, m).total.cx.validate());
    CHECK(!jacobi_module(L, M, m).total.cx.validate());
    CHECK(!jacobi_module(DGLA::of(sl2.g), DGModule::of(sl2.defining), m)
               .total.cx.validate());
  }
}

TEST_CASE("obstruction map") {
  // zero bracket: zero map
  Obstruction ob = obstruction(abelian_odd(2));
  CHECK(ob.h1 == 2);
  CHECK(ob.h2 == 0);
  CHECK_FALSE(ob.nonzero);
  // point model: nothing in degree one
  CHECK(obstruction(DGLA::of(sl2_standard().g)).h1 == 0);
  // sl2 tensor <1; a, b; w>: the class of [e(x)a, f(x)b] = h(x)w survives
  GeometricModel gm = tensor_model(sl2_standard(), exterior_square_algebra());
  Obstruction ot = obstruction(gm.L);
  CHECK(ot.h1 == 6);
  CHECK(ot.h2 == 3);
  CHECK(ot.nonzero);
}

TEST_CASE("Poincare module of a trivial-action fixture is free of fiber rank") {
  DGLA L = abelian_odd(2);
  DGModule M = trivial_module(L, 2);
  PoincareModule pm = poincare_module(L, M, 2);
  CHECK(pm.ad.dim() == 6);
  CHECK(pm.g.gdim == std::vector<int>{2, 6, 12});
  CHECK(pm.p.dim == 12);
  CHECK(pm.fiber == 2);
  CHECK(pm.free);
  // the top of the tower is an honest module over R_2
  SModule top;
  top.dim = pm.g.gdim[2];
  top.action = pm.g.action[2];
  CHECK(validate_smodule(pm.ad, top).ok());
}

TEST_CASE("Poincare module base cases") {
  DGLA L = abelian_odd(2);
  DGModule M = trivial_module(L, 2);
  PoincareModule p0 = poincare_module(L, M, 0);
  CHECK(p0.p.dim == 2);
  CHECK(p0.fiber == 2);
  CHECK(p0.free);
  PoincareModule p1 = poincare_module(L, M, 1);
  CHECK(p1.ad.dim() == 3);
  CHECK(p1.p.dim == 6);
  CHECK(p1.fiber == 2);
  CHECK(p1.free);
  // rigid algebra with trivial coefficients: R_1 = C, P_1 = E
  MatrixLie sl2 = sl2_standard();
  DGLA Ls = DGLA::of(sl2.g);
  DGModule Ms = trivial_module(Ls, 2);
  PoincareModule ps = poincare_module(Ls, Ms, 1);
  CHECK(ps.ad.dim() == 1);
  CHECK(ps.p.dim == 2);
  CHECK(ps.fiber == 2);
  CHECK(ps.free);
}
