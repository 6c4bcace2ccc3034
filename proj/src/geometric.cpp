#include "defcalc/geometric.hpp"

#include <string>

namespace defcalc {

namespace {

Q sign_pow(int e) { return e % 2 == 0 ? Q(1) : Q(-1); }

std::string pair_witness(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::string idx(const char* base, int i) { return base + std::to_string(i); }

bool vec_zero(const Vec& v) {
  for (const Q& c : v)
    if (c != 0) return false;
  return true;
}

Vec lin(const std::vector<Vec>& table, const Vec& coeffs, int dim) {
  Vec out(dim, 0);
  for (int i = 0; i < int(coeffs.size()); ++i) {
    if (coeffs[i] == 0) continue;
    for (int k = 0; k < dim; ++k) out[k] += coeffs[i] * table[i][k];
  }
  return out;
}

// is v supported only on basis elements of the given degree?
bool homogeneous(const Vec& v, const Degs& degs, int deg) {
  for (int i = 0; i < int(v.size()); ++i)
    if (v[i] != 0 && degs[i] != deg) return false;
  return true;
}

}  // namespace

Vec DGAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      for (int k = 0; k < dim(); ++k) out[k] += a[i] * b[j] * product[i][j][k];
    }
  }
  return out;
}

Vec DGAlgebra::unit_vec() const {
  Vec e(dim(), 0);
  e[unit] = 1;
  return e;
}

DGAlgebra DGAlgebra::scalars() {
  DGAlgebra a;
  a.degs = {0};
  a.unit = 0;
  a.product = {{{Q(1)}}};
  a.d = Mat(1, 1);
  return a;
}

Vec GeometricModel::pair(const Vec& x, const Vec& y) const {
  Vec out(A.dim(), 0);
  for (int i = 0; i < L.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < L.dim(); ++j) {
      if (y[j] == 0) continue;
      for (int k = 0; k < A.dim(); ++k) out[k] += x[i] * y[j] * pairing[i][j][k];
    }
  }
  return out;
}

ValidationReport validate_geometric_model(const GeometricModel& gm) {
  ValidationReport rep;
  const DGLA& L = gm.L;
  const DGAlgebra& A = gm.A;
  int nl = L.dim(), na = A.dim();
  auto brk = [&](const Vec& x, const Vec& y) {
    Vec out(nl, 0);
    for (int i = 0; i < nl; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < nl; ++j) {
        if (y[j] == 0) continue;
        for (int k = 0; k < nl; ++k) out[k] += x[i] * y[j] * L.bracket[i][j][k];
      }
    }
    return out;
  };
  auto basis = [](int n, int i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };

  // bracket: degree, graded antisymmetry, graded Jacobi
  bool anti_ok = true, jac_ok = true, bdeg_ok = true;
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j) {
      const Vec& b = L.bracket[i][j];
      if (!homogeneous(b, L.degs, L.degs[i] + L.degs[j])) {
        bdeg_ok = false;
        rep.issues.push_back({"bracket degree", pair_witness(idx("l", i), idx("l", j))});
      }
      Vec rhs = L.bracket[j][i];
      Q s = sign_pow(L.degs[i] * L.degs[j]);
      bool bad = false;
      for (int k = 0; k < nl; ++k) bad = bad || b[k] != -s * rhs[k];
      if (bad) {
        anti_ok = false;
        rep.issues.push_back(
            {"graded antisymmetry", pair_witness(idx("l", i), idx("l", j))});
      }
    }
  for (int i = 0; i < nl && jac_ok; ++i)
    for (int j = 0; j < nl && jac_ok; ++j)
      for (int k = 0; k < nl && jac_ok; ++k) {
        Vec t1 = brk(L.bracket[i][j], basis(nl, k));
        Vec t2 = brk(L.bracket[j][k], basis(nl, i));
        Vec t3 = brk(L.bracket[k][i], basis(nl, j));
        Q s1 = sign_pow(L.degs[i] * L.degs[k]);
        Q s2 = sign_pow(L.degs[j] * L.degs[i]);
        Q s3 = sign_pow(L.degs[k] * L.degs[j]);
        Vec sum(nl, 0);
        for (int a = 0; a < nl; ++a) sum[a] = s1 * t1[a] + s2 * t2[a] + s3 * t3[a];
        if (!vec_zero(sum)) {
          jac_ok = false;
          rep.issues.push_back({"graded Jacobi", "(" + idx("l", i) + "," + idx("l", j) +
                                                     "," + idx("l", k) + ")"});
        }
      }
  if (anti_ok) rep.passed.push_back("graded antisymmetry");
  if (jac_ok) rep.passed.push_back("graded Jacobi");
  if (bdeg_ok) rep.passed.push_back("bracket degree");

  // differentials square to zero
  if ((L.d * L.d).is_zero())
    rep.passed.push_back("d_L squared");
  else
    rep.issues.push_back({"d_L squared", "d_L^2 != 0"});
  if ((A.d * A.d).is_zero())
    rep.passed.push_back("d_A squared");
  else
    rep.issues.push_back({"d_A squared", "d_A^2 != 0"});

  // Leibniz for d_L over the bracket
  bool leib_l = true;
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j) {
      Vec lhs = L.d.apply(L.bracket[i][j]);
      Vec r1 = brk(L.d.apply(basis(nl, i)), basis(nl, j));
      Vec r2 = brk(basis(nl, i), L.d.apply(basis(nl, j)));
      Q s = sign_pow(L.degs[i]);
      bool bad = false;
      for (int k = 0; k < nl; ++k) bad = bad || lhs[k] != r1[k] + s * r2[k];
      if (bad) {
        leib_l = false;
        rep.issues.push_back({"Leibniz d_L", pair_witness(idx("l", i), idx("l", j))});
      }
    }
  if (leib_l) rep.passed.push_back("Leibniz d_L");

  // algebra: unit, degrees, graded commutativity, associativity, Leibniz
  bool unit_ok = A.degs[A.unit] == 0;
  for (int i = 0; i < na; ++i) {
    Vec e = basis(na, i);
    if (A.mul(A.unit_vec(), e) != e || A.mul(e, A.unit_vec()) != e) unit_ok = false;
  }
  if (unit_ok)
    rep.passed.push_back("unit");
  else
    rep.issues.push_back({"unit", "1 is not a degree-0 unit"});
  bool comm_ok = true, adeg_ok = true, assoc_ok = true;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (!homogeneous(A.product[i][j], A.degs, A.degs[i] + A.degs[j])) {
        adeg_ok = false;
        rep.issues.push_back({"product degree", pair_witness(idx("a", i), idx("a", j))});
      }
      Q s = sign_pow(A.degs[i] * A.degs[j]);
      bool bad = false;
      for (int k = 0; k < na; ++k) bad = bad || A.product[i][j][k] != s * A.product[j][i][k];
      if (bad) {
        comm_ok = false;
        rep.issues.push_back(
            {"graded commutativity", pair_witness(idx("a", i), idx("a", j))});
      }
    }
  for (int i = 0; i < na && assoc_ok; ++i)
    for (int j = 0; j < na && assoc_ok; ++j)
      for (int k = 0; k < na && assoc_ok; ++k) {
        Vec lhs = A.mul(A.product[i][j], basis(na, k));
        Vec rhs = A.mul(basis(na, i), A.product[j][k]);
        if (lhs != rhs) {
          assoc_ok = false;
          rep.issues.push_back({"associativity", "(" + idx("a", i) + "," + idx("a", j) +
                                                     "," + idx("a", k) + ")"});
        }
      }
  if (comm_ok) rep.passed.push_back("graded commutativity");
  if (adeg_ok) rep.passed.push_back("product degree");
  if (assoc_ok) rep.passed.push_back("associativity");
  bool leib_a = true;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      Vec lhs = A.d.apply(A.product[i][j]);
      Vec r1 = A.mul(A.d.apply(basis(na, i)), basis(na, j));
      Vec r2 = A.mul(basis(na, i), A.d.apply(basis(na, j)));
      Q s = sign_pow(A.degs[i]);
      bool bad = false;
      for (int k = 0; k < na; ++k) bad = bad || lhs[k] != r1[k] + s * r2[k];
      if (bad) {
        leib_a = false;
        rep.issues.push_back({"Leibniz d_A", pair_witness(idx("a", i), idx("a", j))});
      }
    }
  if (leib_a) rep.passed.push_back("Leibniz d_A");

  // optional dg-module
  if (gm.M) {
    const DGModule& M = *gm.M;
    int nm = M.dim();
    bool mod_ok = true, mod_d_ok = (M.d * M.d).is_zero();
    for (int i = 0; i < nl && mod_ok; ++i)
      for (int j = 0; j < nl && mod_ok; ++j) {
        Mat lhs(nm, nm);
        for (int k = 0; k < nl; ++k)
          if (L.bracket[i][j][k] != 0) lhs = lhs + M.action[k].scaled(L.bracket[i][j][k]);
        Mat rhs = M.action[i] * M.action[j] -
                  (M.action[j] * M.action[i]).scaled(sign_pow(L.degs[i] * L.degs[j]));
        if (lhs != rhs) {
          mod_ok = false;
          rep.issues.push_back(
              {"module bracket", pair_witness(idx("l", i), idx("l", j))});
        }
      }
    bool mod_leib = true;
    for (int i = 0; i < nl; ++i) {
      Mat dl(nm, nm);
      Vec dx = L.d.apply(basis(nl, i));
      for (int k = 0; k < nl; ++k)
        if (dx[k] != 0) dl = dl + M.action[k].scaled(dx[k]);
      Mat lhs = M.d * M.action[i];
      Mat rhs = dl + (M.action[i] * M.d).scaled(sign_pow(L.degs[i]));
      if (lhs != rhs) {
        mod_leib = false;
        rep.issues.push_back({"module Leibniz", idx("l", i)});
      }
    }
    if (mod_ok) rep.passed.push_back("module bracket");
    if (mod_leib) rep.passed.push_back("module Leibniz");
    if (mod_d_ok)
      rep.passed.push_back("d_M squared");
    else
      rep.issues.push_back({"d_M squared", "d_M^2 != 0"});
  }

  // pairing
  if (gm.has_pairing()) {
    bool sym_ok = true, inv_ok = true, compat_ok = true, pdeg_ok = true;
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nl; ++j) {
        if (!homogeneous(gm.pairing[i][j], A.degs, L.degs[i] + L.degs[j])) {
          pdeg_ok = false;
          rep.issues.push_back({"pairing degree", pair_witness(idx("l", i), idx("l", j))});
        }
        Q s = sign_pow(L.degs[i] * L.degs[j]);
        bool bad = false;
        for (int k = 0; k < na; ++k)
          bad = bad || gm.pairing[i][j][k] != s * gm.pairing[j][i][k];
        if (bad) {
          sym_ok = false;
          rep.issues.push_back(
              {"pairing symmetry", pair_witness(idx("l", i), idx("l", j))});
        }
        Vec lhs = A.d.apply(gm.pairing[i][j]);
        Vec r1 = gm.pair(L.d.apply(basis(nl, i)), basis(nl, j));
        Vec r2 = gm.pair(basis(nl, i), L.d.apply(basis(nl, j)));
        Q t = sign_pow(L.degs[i]);
        bool cbad = false;
        for (int k = 0; k < na; ++k) cbad = cbad || lhs[k] != r1[k] + t * r2[k];
        if (cbad) {
          compat_ok = false;
          rep.issues.push_back(
              {"pairing/differential compatibility", pair_witness(idx("l", i), idx("l", j))});
        }
      }
    for (int i = 0; i < nl && inv_ok; ++i)
      for (int j = 0; j < nl && inv_ok; ++j)
        for (int k = 0; k < nl && inv_ok; ++k) {
          Vec t1 = gm.pair(L.bracket[i][j], basis(nl, k));
          Vec t2 = gm.pair(basis(nl, j), L.bracket[i][k]);
          Q s = sign_pow(L.degs[i] * L.degs[j]);
          bool bad = false;
          for (int a = 0; a < na; ++a) bad = bad || t1[a] + s * t2[a] != 0;
          if (bad) {
            inv_ok = false;
            rep.issues.push_back({"pairing invariance", "(" + idx("l", i) + "," +
                                                            idx("l", j) + "," +
                                                            idx("l", k) + ")"});
          }
        }
    if (pdeg_ok) rep.passed.push_back("pairing degree");
    if (sym_ok) rep.passed.push_back("pairing symmetry");
    if (inv_ok) rep.passed.push_back("pairing invariance");
    if (compat_ok) rep.passed.push_back("pairing/differential compatibility");
  }
  return rep;
}

MatrixLie sl_gl_of(int target_dim, bool traceless) {
  return traceless ? sl_of(target_dim) : gl_of(target_dim);
}

DGAlgebra exterior_square_algebra() {
  DGAlgebra a;
  a.degs = {0, 1, 1, 2};
  a.unit = 0;
  a.product.assign(4, std::vector<Vec>(4, Vec(4, 0)));
  for (int i = 0; i < 4; ++i) {
    a.product[0][i][i] = 1;
    a.product[i][0][i] = 1;
  }
  a.product[1][2][3] = 1;   // ab = w
  a.product[2][1][3] = -1;  // ba = -w
  a.d = Mat(4, 4);
  return a;
}

GeometricModel tensor_model(const MatrixLie& g, const DGAlgebra& a) {
  GeometricModel gm;
  int ng = g.g.dim, na = a.dim();
  int n = ng * na;  // basis x_i (x) a_j at index i*na + j
  gm.A = a;
  gm.L.degs.assign(n, 0);
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < na; ++j) gm.L.degs[i * na + j] = a.degs[j];
  gm.L.bracket.assign(n, std::vector<Vec>(n, Vec(n, 0)));
  gm.pairing.assign(n, std::vector<Vec>(n, Vec(na, 0)));
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < ng; ++k)
        for (int l = 0; l < na; ++l) {
          const Vec& b = g.g.brk(i, k);
          const Vec& p = a.product[j][l];
          for (int x = 0; x < ng; ++x)
            for (int y = 0; y < na; ++y)
              gm.L.bracket[i * na + j][k * na + l][x * na + y] = b[x] * p[y];
          Mat prod = g.defining.action[i] * g.defining.action[k];
          Q tr = 0;
          for (int t = 0; t < prod.rows(); ++t) tr += prod.at(t, t);
          for (int y = 0; y < na; ++y)
            gm.pairing[i * na + j][k * na + l][y] = tr * p[y];
        }
  gm.L.d = Mat(n, n);
  return gm;
}

}  // namespace defcalc
