#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defcalc/multilinear.hpp"

using namespace defcalc;

TEST_CASE("power basis dimensions follow the graded count") {
  CHECK(power_basis(PowerKind::exterior, {0, 0, 0}, 2).dim() == 3);
  // degree-1 concentrated: exterior square behaves symmetrically
  CHECK(power_basis(PowerKind::exterior, {1, 1}, 2).dim() == 3);
  CHECK(power_basis(PowerKind::exterior, {0, 0}, 3).dim() == 0);
  CHECK(power_basis(PowerKind::symmetric, {0, 0}, 3).dim() == 4);
  // symmetric power of odd generators is exterior-like
  CHECK(power_basis(PowerKind::symmetric, {1, 1}, 2).dim() == 1);
}

TEST_CASE("canonical ordering signs") {
  Degs ungraded = {0, 0};
  auto c = canon_word(PowerKind::exterior, ungraded, {1, 0});
  CHECK(c.sign == -1);
  CHECK(c.word == Word{0, 1});
  c = canon_word(PowerKind::exterior, ungraded, {0, 0});
  CHECK(c.sign == 0);

  Degs odd = {1, 1};
  c = canon_word(PowerKind::exterior, odd, {1, 0});
  CHECK(c.sign == 1);
  c = canon_word(PowerKind::exterior, odd, {0, 0});
  CHECK(c.sign == 1);
}

TEST_CASE("bracket differential on abelian input vanishes") {
  auto L = DGLA::of(LieModel::abelian(3));
  auto l2 = power_basis(PowerKind::exterior, L.degs, 2);
  auto l1 = power_basis(PowerKind::exterior, L.degs, 1);
  CHECK(ce_differential(L, l2, l1, nullptr).is_zero());
}

TEST_CASE("sl2 bracket read-off at i = 2") {
  auto sl2 = sl2_standard();
  auto L = DGLA::of(sl2.g);
  auto l2 = power_basis(PowerKind::exterior, L.degs, 2);
  auto l1 = power_basis(PowerKind::exterior, L.degs, 1);
  Mat d = ce_differential(L, l2, l1, nullptr);
  // h^e |-> [h,e] = 2e
  int src = l2.index.at({0, 1});
  CHECK(d.at(1, src) == 2);
  CHECK(d.at(0, src) == 0);
  CHECK(d.at(2, src) == 0);
}

TEST_CASE("action term at i = 1 is exactly the action") {
  auto sl2 = sl2_standard();
  auto L = DGLA::of(sl2.g);
  auto M = DGModule::of(sl2.defining);
  auto l1 = power_basis(PowerKind::exterior, L.degs, 1);
  auto l0 = power_basis(PowerKind::exterior, L.degs, 0);
  Mat d = ce_differential(L, l1, l0, &M);
  // e (x) v |-> e.v = u  (u = basis 0, v = basis 1 of C^2)
  int src = l1.index.at({1}) * 2 + 1;
  CHECK(d.at(0, src) == 1);
  CHECK(d.at(1, src) == 0);
}

TEST_CASE("bracket/action differential squares to zero") {
  auto sl2 = sl2_standard();
  auto L = DGLA::of(sl2.g);
  std::vector<PowerBasis> pb;
  for (int i = 0; i <= 3; ++i) pb.push_back(power_basis(PowerKind::exterior, L.degs, i));
  for (int i = 3; i >= 2; --i) {
    Mat a = ce_differential(L, pb[i], pb[i - 1], nullptr);
    Mat b = ce_differential(L, pb[i - 1], pb[i - 2], nullptr);
    CHECK((b * a).is_zero());
  }
  auto M = DGModule::of(sl2.defining);
  for (int i = 3; i >= 2; --i) {
    Mat a = ce_differential(L, pb[i], pb[i - 1], &M);
    Mat b = ce_differential(L, pb[i - 1], pb[i - 2], &M);
    CHECK((b * a).is_zero());
  }
  auto ad = DGModule::of(adjoint_rep(sl2.g));
  for (int i = 3; i >= 2; --i) {
    Mat a = ce_differential(L, pb[i], pb[i - 1], &ad);
    Mat b = ce_differential(L, pb[i - 1], pb[i - 2], &ad);
    CHECK((b * a).is_zero());
  }
}

TEST_CASE("deconcat ungraded and Koszul-flipped") {
  Degs ungraded = {0, 0};
  auto l2 = power_basis(PowerKind::exterior, ungraded, 2);
  auto l1 = power_basis(PowerKind::exterior, ungraded, 1);
  Mat d = deconcat(l2, l1, l1);
  // x^y |-> x(x)y - y(x)x
  CHECK(d.at(0 * 2 + 1, 0) == 1);
  CHECK(d.at(1 * 2 + 0, 0) == -1);

  Degs odd = {1, 1};
  auto o2 = power_basis(PowerKind::exterior, odd, 2);
  auto o1 = power_basis(PowerKind::exterior, odd, 1);
  Mat od = deconcat(o2, o1, o1);
  int xy = o2.index.at({0, 1});
  CHECK(od.at(0 * 2 + 1, xy) == 1);
  CHECK(od.at(1 * 2 + 0, xy) == 1);
}

TEST_CASE("deconcat is coassociative") {
  Degs ungraded = {0, 0, 0};
  auto l3 = power_basis(PowerKind::exterior, ungraded, 3);
  auto l2 = power_basis(PowerKind::exterior, ungraded, 2);
  auto l1 = power_basis(PowerKind::exterior, ungraded, 1);
  // (Delta_{1,1} (x) id) Delta_{2,1} = (id (x) Delta_{1,1}) Delta_{1,2}
  Mat a = deconcat(l3, l2, l1);
  Mat b = deconcat(l3, l1, l2);
  Mat d11 = deconcat(l2, l1, l1);
  int n1 = l1.dim(), n2 = l2.dim();
  Mat lhs(n1 * n1 * n1, l3.dim()), rhs(n1 * n1 * n1, l3.dim());
  for (int s = 0; s < l3.dim(); ++s)
    for (int i2 = 0; i2 < n2; ++i2)
      for (int i1 = 0; i1 < n1; ++i1) {
        if (a.at(i2 * n1 + i1, s) != 0)
          for (int u = 0; u < n1; ++u)
            for (int v = 0; v < n1; ++v)
              lhs.at((u * n1 + v) * n1 + i1, s) += a.at(i2 * n1 + i1, s) * d11.at(u * n1 + v, i2);
        if (b.at(i1 * n2 + i2, s) != 0)
          for (int u = 0; u < n1; ++u)
            for (int v = 0; v < n1; ++v)
              rhs.at((i1 * n1 + u) * n1 + v, s) += b.at(i1 * n2 + i2, s) * d11.at(u * n1 + v, i2);
      }
  CHECK(lhs == rhs);
}

TEST_CASE("deconcat is a chain map with sign (-1)^a") {
  auto sl2 = sl2_standard();
  auto L = DGLA::of(sl2.g);
  std::vector<PowerBasis> pb;
  for (int i = 0; i <= 3; ++i) pb.push_back(power_basis(PowerKind::exterior, L.degs, i));
  // Delta_{1,1} d = (d (x) id) Delta_{2,1} + (-1)^1 (id (x) d) Delta_{1,2}
  Mat lhs = deconcat(pb[2], pb[1], pb[1]) * ce_differential(L, pb[3], pb[2], nullptr);
  Mat d21 = deconcat(pb[3], pb[2], pb[1]);
  Mat d12 = deconcat(pb[3], pb[1], pb[2]);
  Mat dmat = ce_differential(L, pb[2], pb[1], nullptr);
  int n1 = pb[1].dim(), n2 = pb[2].dim();
  Mat rhs(n1 * n1, pb[3].dim());
  for (int s = 0; s < pb[3].dim(); ++s) {
    for (int i2 = 0; i2 < n2; ++i2)
      for (int i1 = 0; i1 < n1; ++i1) {
        if (d21.at(i2 * n1 + i1, s) != 0)
          for (int u = 0; u < n1; ++u)
            rhs.at(u * n1 + i1, s) += d21.at(i2 * n1 + i1, s) * dmat.at(u, i2);
        if (d12.at(i1 * n2 + i2, s) != 0)
          for (int u = 0; u < n1; ++u)
            rhs.at(i1 * n1 + u, s) -= d12.at(i1 * n2 + i2, s) * dmat.at(u, i2);
      }
  }
  CHECK(lhs == rhs);
}

TEST_CASE("power_map is functorial") {
  Degs d2 = {0, 0};
  auto l2 = power_basis(PowerKind::exterior, d2, 2);
  CHECK(power_map(l2, l2, Mat::identity(2)) == Mat::identity(l2.dim()));
  Mat f = Mat::from_rows({{q(1), q(1)}, {q(0), q(1)}}, 2);
  Mat g = Mat::from_rows({{q(2), q(0)}, {q(1), q(1)}}, 2);
  CHECK(power_map(l2, l2, f * g) == power_map(l2, l2, f) * power_map(l2, l2, g));
}

TEST_CASE("trace on the symmetric square of sl2") {
  auto sl2 = sl2_standard();
  Degs degs(3, 0);
  auto s2 = power_basis(PowerKind::symmetric, degs, 2);
  Mat tr = trace_on_sigma2(sl2, s2);
  CHECK(tr.at(0, s2.index.at(Word{1, 2})) == 1);  // (e,f) -> 1
  CHECK(tr.at(0, s2.index.at(Word{0, 0})) == 2);  // (h,h) -> 2
  CHECK(tr.at(0, s2.index.at(Word{1, 1})) == 0);  // (e,e) -> 0
}

TEST_CASE("mixed power dimension") {
  // kernel of S^2 V (x) V -> S^3 V for dim V = n has dim n(n^2-1)/3
  CHECK(sigma21_basis(2).cols() == 2);
  CHECK(sigma21_basis(3).cols() == 8);
}

TEST_CASE("graded power dims match closed form on fuzzed shapes") {
  // graded count: choose(k_even, strict) * multichoose(k_odd, repeats)
  auto choose = [](long n, long k) {
    if (k < 0 || k > n) return 0L;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  std::vector<Degs> shapes = {{0, 0, 0, 1}, {1, 1, 0}, {1, 1, 1}, {0, 1, 2, 3}, {2, 2, 1}};
  for (const auto& degs : shapes) {
    long even = 0, odd = 0;
    for (int d : degs) (d % 2 == 0 ? even : odd)++;
    for (int i = 0; i <= 4; ++i) {
      long expect = 0;
      for (int a = 0; a <= i; ++a)
        expect += choose(even, a) * choose(odd + (i - a) - 1, i - a);
      CHECK(power_basis(PowerKind::exterior, degs, i).dim() == expect);
    }
  }
}
