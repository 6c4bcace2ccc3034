#include "defcalc/jacobi.hpp"

#include <map>
#include <stdexcept>

namespace defcalc {

namespace {

// position of each block element inside its (p,q) slice
std::vector<std::vector<int>> slice_positions(const JacobiComplex& j) {
  std::vector<std::vector<int>> pos(j.m + 1);
  std::map<Bidegree, int> count;
  for (int i = j.lo(); i <= j.m; ++i) {
    pos[i].resize(j.block_dim(i));
    for (int k = 0; k < j.block_dim(i); ++k) pos[i][k] = count[{-i, j.qdeg[i][k]}]++;
  }
  return pos;
}

JacobiComplex assemble(const DGLA& L, const DGModule* M, int m) {
  if (m < 0) throw std::invalid_argument("jacobi: order must be nonnegative");
  JacobiComplex j;
  j.m = m;
  j.with_module = M != nullptr;
  j.mdim = M ? M->dim() : 1;
  j.layer.resize(m + 1);
  j.qdeg.resize(m + 1);
  for (int i = j.lo(); i <= m; ++i) {
    j.layer[i] = power_basis(PowerKind::exterior, L.degs, i);
    for (int w = 0; w < j.layer[i].dim(); ++w)
      for (int e = 0; e < j.mdim; ++e)
        j.qdeg[i].push_back(j.layer[i].word_degree(j.layer[i].words[w]) +
                            (M ? M->degs[e] : 0));
  }
  auto pos = slice_positions(j);
  for (int i = j.lo(); i <= m; ++i)
    for (int k = 0; k < j.block_dim(i); ++k) j.dc.dims[{-i, j.qdeg[i][k]}]++;
  for (int i = j.lo(); i <= m; ++i) {
    Mat vert = internal_differential(L, j.layer[i], M);
    Mat hor = i > j.lo() + 0 && i >= 1 && (i > 1 || M)
                  ? ce_differential(L, j.layer[i], j.layer[i - 1], M)
                  : Mat(0, 0);
    for (int k = 0; k < j.block_dim(i); ++k) {
      int q = j.qdeg[i][k];
      // vertical slice (-i, q) -> (-i, q+1)
      {
        Bidegree b{-i, q};
        auto& mat = j.dc.vert
                        .try_emplace(b, Mat(j.dc.dim({-i, q + 1}), j.dc.dim(b)))
                        .first->second;
        for (int r = 0; r < j.block_dim(i); ++r)
          if (j.qdeg[i][r] == q + 1 && vert.at(r, k) != 0)
            mat.at(pos[i][r], pos[i][k]) = vert.at(r, k);
      }
      // horizontal slice (-i, q) -> (-(i-1), q)
      if (hor.rows() > 0) {
        Bidegree b{-i, q};
        auto& mat =
            j.dc.hor.try_emplace(b, Mat(j.dc.dim({-(i - 1), q}), j.dc.dim(b)))
                .first->second;
        for (int r = 0; r < j.block_dim(i - 1); ++r)
          if (j.qdeg[i - 1][r] == q && hor.at(r, k) != 0)
            mat.at(pos[i - 1][r], pos[i][k]) = hor.at(r, k);
      }
    }
  }
  j.total = totalize(j.dc);
  return j;
}

// cohomology of the total complex in one degree, with empty defaults
DegreeCohomology h_at(const JacobiComplex& j, int n) {
  auto h = cohomology(j.total.cx);
  auto it = h.find(n);
  if (it != h.end()) return it->second;
  DegreeCohomology out;
  out.reps = Mat(j.total.cx.dim(n), 0);
  out.proj = Mat(0, j.total.cx.dim(n));
  return out;
}

}  // namespace

std::pair<int, int> JacobiComplex::coord(int i, int k) const {
  int q = qdeg[i][k];
  auto it = total.layout.find({-i, q});
  // recompute the in-slice position
  int p = 0;
  for (int r = 0; r < k; ++r)
    if (qdeg[i][r] == q) ++p;
  return {it->second.first, it->second.second + p};
}

JacobiComplex jacobi(const DGLA& L, int m) { return assemble(L, nullptr, m); }

JacobiComplex jacobi(const LieModel& g, int m) { return jacobi(DGLA::of(g), m); }

JacobiComplex jacobi(const GeometricModel& gm, int m) { return jacobi(gm.L, m); }

JacobiComplex jacobi_module(const DGLA& L, const DGModule& M, int m) {
  return assemble(L, &M, m);
}

JacobiComplex jacobi_module(const GeometricModel& gm, int m) {
  if (!gm.M) throw std::invalid_argument("jacobi_module: model carries no module");
  return assemble(gm.L, &*gm.M, m);
}

ValidationReport truncation_check(const JacobiComplex& small, const JacobiComplex& big) {
  ValidationReport rep;
  if (small.lo() != big.lo() || small.mdim != big.mdim || small.m > big.m) {
    rep.issues.push_back({"truncation", "incompatible complexes"});
    return rep;
  }
  // coordinate inclusion per total degree
  std::map<int, Mat> inc;
  for (const auto& [n, dim] : big.total.cx.dims) inc.emplace(n, Mat(dim, small.total.cx.dim(n)));
  for (const auto& [n, dim] : small.total.cx.dims)
    inc.try_emplace(n, Mat(big.total.cx.dim(n), dim));
  for (int i = small.lo(); i <= small.m; ++i)
    for (int k = 0; k < small.block_dim(i); ++k) {
      auto [n, cs] = small.coord(i, k);
      auto [nb, cb] = big.coord(i, k);
      inc.at(n).at(cb, cs) = 1;
    }
  bool ok = true;
  for (const auto& [n, mat] : inc) {
    auto next = inc.find(n + 1);
    Mat rhs = next == inc.end() ? Mat(big.total.cx.dim(n + 1), small.total.cx.dim(n))
                                : next->second * small.total.cx.diff(n);
    if (!(big.total.cx.diff(n) * mat == rhs)) {
      ok = false;
      rep.issues.push_back({"truncation chain map", "degree " + std::to_string(n)});
    }
  }
  if (ok) rep.passed.push_back("truncation chain map");
  return rep;
}

DeformationRing deformation_ring(const JacobiComplex& j) {
  if (j.with_module)
    throw std::invalid_argument("deformation_ring: expects trivial coefficients");
  DeformationRing r;
  r.m = j.m;
  DegreeCohomology h0 = h_at(j, 0);
  r.vdim = h0.dim;
  r.vreps = h0.reps;
  r.vproj = h0.proj;
  int n = 1 + r.vdim;
  r.ring.dim = n;
  r.ring.unit = 0;
  r.ring.labels.push_back("1");
  for (int k = 0; k < r.vdim; ++k) r.ring.labels.push_back("t" + std::to_string(k));
  r.ring.product.assign(n, std::vector<Vec>(n, Vec(n, 0)));
  for (int a = 0; a < n; ++a) {
    r.ring.product[0][a][a] = 1;
    r.ring.product[a][0][a] = 1;
  }
  r.ring.product[0][0] = Vec(n, 0);
  r.ring.product[0][0][0] = 1;
  // xi_a xi_b = sum_l Delta(v_l)_{ab} xi_l with Delta the class-level
  // unshuffle: split each word of lambda^i into two nonempty degree-0 pieces
  for (int l = 0; l < r.vdim; ++l)
    for (int i = 2; i <= j.m; ++i) {
      for (int k = 0; k < j.block_dim(i); ++k) {
        auto [n0, idx] = j.coord(i, k);
        if (n0 != 0) continue;
        Q c = r.vreps.at(idx, l);
        if (c == 0) continue;
        for (int a = 1; a < i; ++a) {
          PowerBasis left = power_basis(PowerKind::exterior, j.layer[i].degs, a);
          PowerBasis right = power_basis(PowerKind::exterior, j.layer[i].degs, i - a);
          Mat dec = deconcat(j.layer[i], left, right);
          for (int li = 0; li < left.dim(); ++li) {
            if (left.word_degree(left.words[li]) != a) continue;
            for (int ri = 0; ri < right.dim(); ++ri) {
              Q s = dec.at(li * right.dim() + ri, k);
              if (s == 0) continue;
              if (right.word_degree(right.words[ri]) != i - a) continue;
              auto [nl, cl] = j.coord(a, li);
              auto [nr, cr] = j.coord(i - a, ri);
              for (int p = 0; p < r.vdim; ++p) {
                if (r.vproj.at(p, cl) == 0) continue;
                for (int q = 0; q < r.vdim; ++q)
                  r.ring.product[1 + p][1 + q][1 + l] +=
                      c * s * r.vproj.at(p, cl) * r.vproj.at(q, cr);
              }
            }
          }
        }
      }
    }
  return r;
}

Mat ring_truncation(const JacobiComplex& small, const JacobiComplex& big,
                    const DeformationRing& rs, const DeformationRing& rb) {
  // V_small -> V_big induced by the chain inclusion in degree 0
  Mat vmap(rb.vdim, rs.vdim);
  for (int l = 0; l < rs.vdim; ++l) {
    Vec chain(big.total.cx.dim(0), 0);
    for (int i = small.lo(); i <= small.m; ++i)
      for (int k = 0; k < small.block_dim(i); ++k) {
        auto [n, cs] = small.coord(i, k);
        if (n != 0) continue;
        auto [nb, cb] = big.coord(i, k);
        chain[cb] = rs.vreps.at(cs, l);
      }
    Vec cls = rb.vproj.apply(chain);
    for (int p = 0; p < rb.vdim; ++p) vmap.at(p, l) = cls[p];
  }
  // ring map R_big -> R_small: unit to unit, xi^big_p to sum_l vmap(p,l) xi^small_l
  Mat f(1 + rs.vdim, 1 + rb.vdim);
  f.at(0, 0) = 1;
  for (int p = 0; p < rb.vdim; ++p)
    for (int l = 0; l < rs.vdim; ++l) f.at(1 + l, 1 + p) = vmap.at(p, l);
  return f;
}

Obstruction obstruction(const DGLA& L) {
  // cohomology of the underlying complex (L, d)
  ChainComplex c;
  std::map<int, std::vector<int>> by_deg;
  for (int i = 0; i < L.dim(); ++i) by_deg[L.degs[i]].push_back(i);
  for (const auto& [deg, idx] : by_deg) c.dims[deg] = int(idx.size());
  for (const auto& [deg, idx] : by_deg) {
    auto up = by_deg.find(deg + 1);
    if (up == by_deg.end()) continue;
    Mat d(int(up->second.size()), int(idx.size()));
    for (size_t cc = 0; cc < idx.size(); ++cc)
      for (size_t rr = 0; rr < up->second.size(); ++rr)
        d.at(int(rr), int(cc)) = L.d.at(up->second[rr], idx[cc]);
    c.d[deg] = d;
  }
  auto h = cohomology(c);
  Obstruction ob;
  auto h1 = h.find(1);
  auto h2 = h.find(2);
  ob.h1 = h1 == h.end() ? 0 : h1->second.dim;
  ob.h2 = h2 == h.end() ? 0 : h2->second.dim;
  // lift H^1 representatives to L coordinates
  ob.h1reps = Mat(L.dim(), ob.h1);
  auto deg1 = by_deg.find(1);
  for (int k = 0; k < ob.h1; ++k)
    for (size_t r = 0; deg1 != by_deg.end() && r < deg1->second.size(); ++r)
      ob.h1reps.at(deg1->second[r], k) = h1->second.reps.at(int(r), k);
  int pairs = ob.h1 * (ob.h1 + 1) / 2;
  ob.quad = Mat(ob.h2, pairs);
  auto deg2 = by_deg.find(2);
  int col = 0;
  for (int a = 0; a < ob.h1; ++a)
    for (int b = a; b < ob.h1; ++b, ++col) {
      Vec br(L.dim(), 0);
      for (int s = 0; s < L.dim(); ++s) {
        if (ob.h1reps.at(s, a) == 0) continue;
        for (int t = 0; t < L.dim(); ++t) {
          if (ob.h1reps.at(t, b) == 0) continue;
          Q coef = ob.h1reps.at(s, a) * ob.h1reps.at(t, b);
          for (int u = 0; u < L.dim(); ++u) br[u] += coef * L.bracket[s][t][u];
        }
      }
      if (ob.h2 == 0 || deg2 == by_deg.end()) continue;
      Vec slice(int(deg2->second.size()), 0);
      for (size_t r = 0; r < deg2->second.size(); ++r) slice[r] = br[deg2->second[r]];
      Vec cls = h2->second.proj.apply(slice);
      for (int r = 0; r < ob.h2; ++r) {
        ob.quad.at(r, col) = cls[r];
        if (cls[r] != 0) ob.nonzero = true;
      }
    }
  return ob;
}

namespace {

// contraction of the leading lambda^a factor with the dual class xi_j,
// as a matrix on the degree-0 chains of J_i(g,E)
Mat contract(const JacobiComplex& je, const JacobiComplex& jg,
             const DeformationRing& r, int xi) {
  int n = je.total.cx.dim(0);
  Mat out(n, n);
  for (int i = 1; i <= je.m; ++i)
    for (int k = 0; k < je.block_dim(i); ++k) {
      auto [n0, src] = je.coord(i, k);
      if (n0 != 0) continue;
      int w = k / je.mdim, e = k % je.mdim;
      for (int a = 1; a <= i; ++a) {
        PowerBasis left = power_basis(PowerKind::exterior, je.layer[i].degs, a);
        PowerBasis right = power_basis(PowerKind::exterior, je.layer[i].degs, i - a);
        Mat dec = deconcat(je.layer[i], left, right);
        for (int li = 0; li < left.dim(); ++li) {
          if (left.word_degree(left.words[li]) != a) continue;
          auto [nl, cl] = jg.coord(a, li);
          Q xival = r.vproj.at(xi, cl);
          if (xival == 0) continue;
          for (int ri = 0; ri < right.dim(); ++ri) {
            Q s = dec.at(li * right.dim() + ri, w);
            if (s == 0) continue;
            auto [nr, dst] = je.coord(i - a, ri * je.mdim + e);
            out.at(dst, src) += xival * s;
          }
        }
      }
    }
  return out;
}

}  // namespace

PoincareModule poincare_module(const DGLA& L, const DGModule& E, int m) {
  PoincareModule pm;
  pm.m = m;
  JacobiComplex jg = jacobi(L, m);
  pm.r = deformation_ring(jg);
  pm.ad = adapt(pm.r.ring);
  std::vector<JacobiComplex> je;
  std::vector<DegreeCohomology> h;
  for (int i = 0; i <= m; ++i) {
    je.push_back(jacobi_module(L, E, i));
    h.push_back(h_at(je[i], 0));
  }
  pm.g.m = m;
  for (int i = 0; i <= m; ++i) pm.g.gdim.push_back(h[i].dim);
  // actions of the original coordinates (unit, then the dual classes)
  std::vector<std::vector<Mat>> orig(m + 1);
  for (int i = 0; i <= m; ++i) {
    orig[i].push_back(Mat::identity(h[i].dim));
    for (int x = 0; x < pm.r.vdim; ++x)
      orig[i].push_back(h[i].proj * contract(je[i], jg, pm.r, x) * h[i].reps);
  }
  pm.g.action.resize(m + 1);
  for (int i = 0; i <= m; ++i)
    for (int a = 0; a < pm.ad.dim(); ++a) {
      Mat act(h[i].dim, h[i].dim);
      for (int o = 0; o < pm.ad.dim(); ++o) {
        Q c = pm.ad.from_adapted.at(o, a);
        if (c != 0) act = act + orig[i][o].scaled(c);
      }
      pm.g.action[i].push_back(act);
    }
  // chain inclusion G^{i-1} -> G^i and the contraction symbol
  pm.g.incl.push_back(Mat(h[0].dim, 0));
  pm.g.symbol.push_back(Mat(0, 0));
  for (int i = 1; i <= m; ++i) {
    Mat inc(je[i].total.cx.dim(0), je[i - 1].total.cx.dim(0));
    for (int b = 0; b < i; ++b)
      for (int k = 0; k < je[i - 1].block_dim(b); ++k) {
        auto [ns, cs] = je[i - 1].coord(b, k);
        if (ns != 0) continue;
        auto [nb, cb] = je[i].coord(b, k);
        inc.at(cb, cs) = 1;
      }
    pm.g.incl.push_back(h[i].proj * inc * h[i - 1].reps);
    // symbol: component at dual coordinate a is the action of the adapted
    // basis element e_a, landed in G^{i-1}
    int dprev = pm.ad.sdim(i - 1);
    Mat sym((pm.ad.sdim(i) - 1) * h[i - 1].dim, h[i].dim);
    Mat down(je[i - 1].total.cx.dim(0), je[i].total.cx.dim(0));
    for (int b = 0; b < i; ++b)
      for (int k = 0; k < je[i - 1].block_dim(b); ++k) {
        auto [ns, cs] = je[i - 1].coord(b, k);
        if (ns != 0) continue;
        auto [nb, cb] = je[i].coord(b, k);
        down.at(cs, cb) = 1;
      }
    (void)dprev;
    for (int a = 1; a < pm.ad.sdim(i); ++a) {
      Mat chain(je[i].total.cx.dim(0), je[i].total.cx.dim(0));
      for (int o = 1; o < pm.ad.dim(); ++o) {
        Q c = pm.ad.from_adapted.at(o, a);
        if (c != 0) chain = chain + contract(je[i], jg, pm.r, o - 1).scaled(c);
      }
      Mat piece = h[i - 1].proj * down * chain * h[i].reps;
      for (int r = 0; r < h[i - 1].dim; ++r)
        for (int cc = 0; cc < h[i].dim; ++cc)
          sym.at((a - 1) * h[i - 1].dim + r, cc) = piece.at(r, cc);
    }
    pm.g.symbol.push_back(sym);
  }
  pm.p = quasi_scalar(pm.ad, pm.g, m);
  // fiber and exact freeness decision: generators lifting a fiber basis
  // always generate, so freeness is a dimension count
  Mat mp(pm.p.dim, 0);
  for (int a = 1; a < pm.ad.dim(); ++a) mp = mp.hstack(pm.p.action[a]);
  pm.fiber = pm.p.dim - rank_of(mp);
  pm.free = pm.p.dim == pm.fiber * pm.ad.dim();
  return pm;
}

PoincareModule poincare_module(const GeometricModel& gm, int m) {
  if (!gm.M) throw std::invalid_argument("poincare_module: model carries no module");
  return poincare_module(gm.L, *gm.M, m);
}

}  // namespace defcalc
