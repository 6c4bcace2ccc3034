#include "defcalc/lie.hpp"

#include <cassert>

namespace defcalc {

LieModel LieModel::abelian(int n) {
  LieModel g;
  g.dim = n;
  g.bracket.assign(n, std::vector<Vec>(n, Vec(n)));
  return g;
}

Vec LieModel::brk_vec(const Vec& a, const Vec& b) const {
  Vec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      Q c = a[i] * b[j];
      for (int k = 0; k < dim; ++k)
        if (bracket[i][j][k] != 0) out[k] += c * bracket[i][j][k];
    }
  }
  return out;
}

ValidationReport validate_lie(const LieModel& g) {
  ValidationReport rep;
  bool anti_ok = true, jacobi_ok = true;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      bool bad = false;
      for (int k = 0; k < g.dim; ++k)
        if (g.bracket[i][j][k] != -g.bracket[j][i][k]) bad = true;
      if (bad) {
        rep.issues.push_back({"antisymmetry", "(" + g.label(i) + "," + g.label(j) + ")"});
        anti_ok = false;
      }
    }
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) {
        Vec ei(g.dim), ej(g.dim), ek(g.dim);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        Vec s = g.brk_vec(g.brk(i, j), ek);
        Vec t = g.brk_vec(g.brk(j, k), ei);
        Vec u = g.brk_vec(g.brk(k, i), ej);
        for (int l = 0; l < g.dim; ++l)
          if (s[l] + t[l] + u[l] != 0) {
            rep.issues.push_back(
                {"jacobi", "(" + g.label(i) + "," + g.label(j) + "," + g.label(k) + ")"});
            jacobi_ok = false;
            break;
          }
      }
  if (anti_ok) rep.passed.push_back("antisymmetry");
  if (jacobi_ok) rep.passed.push_back("jacobi");
  return rep;
}

ValidationReport validate_rep(const LieModel& g, const Representation& r) {
  ValidationReport rep;
  bool hom_ok = true;
  for (int i = 0; i < g.dim && hom_ok; ++i)
    for (int j = 0; j < g.dim && hom_ok; ++j) {
      Mat lhs(r.target_dim, r.target_dim);
      for (int k = 0; k < g.dim; ++k)
        if (g.bracket[i][j][k] != 0) lhs = lhs + r.action[k].scaled(g.bracket[i][j][k]);
      Mat rhs = r.action[i] * r.action[j] - r.action[j] * r.action[i];
      if (!(lhs == rhs)) {
        rep.issues.push_back({"homomorphism", "(" + g.label(i) + "," + g.label(j) + ")"});
        hom_ok = false;
      }
    }
  if (hom_ok) rep.passed.push_back("homomorphism");
  // kernel of x -> rho0(x): stack the flattened action matrices as columns
  Mat flat(r.target_dim * r.target_dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int a = 0; a < r.target_dim; ++a)
      for (int b = 0; b < r.target_dim; ++b)
        flat.at(a * r.target_dim + b, i) = r.action[i].at(a, b);
  bool faithful = rank_of(flat) == g.dim;
  if (faithful)
    rep.passed.push_back("faithful");
  else if (r.claimed_faithful)
    rep.issues.push_back({"faithful", "kernel of rho0 is nonzero"});
  return rep;
}

Representation trivial_rep(const LieModel& g, int target_dim) {
  Representation r;
  r.target_dim = target_dim;
  r.action.assign(g.dim, Mat(target_dim, target_dim));
  return r;
}

Representation adjoint_rep(const LieModel& g) {
  Representation r;
  r.target_dim = g.dim;
  for (int i = 0; i < g.dim; ++i) {
    Mat m(g.dim, g.dim);
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) m.at(k, j) = g.bracket[i][j][k];
    r.action.push_back(m);
  }
  return r;
}

namespace {

// build a LieModel from explicit basis matrices (commutator bracket)
MatrixLie from_matrices(const std::vector<Mat>& basis, std::vector<std::string> labels, int n) {
  MatrixLie out;
  int d = int(basis.size());
  out.g.dim = d;
  out.g.labels = std::move(labels);
  Mat flat(n * n, d);
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) flat.at(a * n + b, i) = basis[i].at(a, b);
  out.g.bracket.assign(d, std::vector<Vec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat c = basis[i] * basis[j] - basis[j] * basis[i];
      Vec rhs(n * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rhs[a * n + b] = c.at(a, b);
      auto x = solve(flat, rhs);
      assert(x);
      out.g.bracket[i][j] = *x;
    }
  out.defining.target_dim = n;
  out.defining.action = basis;
  out.defining.claimed_faithful = true;
  return out;
}

}  // namespace

MatrixLie gl_of(int n) {
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat e(n, n);
      e.at(a, b) = 1;
      basis.push_back(e);
      labels.push_back("E" + std::to_string(a) + std::to_string(b));
    }
  return from_matrices(basis, labels, n);
}

MatrixLie sl_of(int n) {
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      Mat e(n, n);
      e.at(a, b) = 1;
      basis.push_back(e);
      labels.push_back("E" + std::to_string(a) + std::to_string(b));
    }
  for (int a = 0; a + 1 < n; ++a) {
    Mat h(n, n);
    h.at(a, a) = 1;
    h.at(a + 1, a + 1) = -1;
    basis.push_back(h);
    labels.push_back("H" + std::to_string(a));
  }
  return from_matrices(basis, labels, n);
}

MatrixLie sl2_standard() {
  Mat h(2, 2), e(2, 2), f(2, 2);
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  e.at(0, 1) = 1;
  f.at(1, 0) = 1;
  return from_matrices({h, e, f}, {"h", "e", "f"}, 2);
}

}  // namespace defcalc
