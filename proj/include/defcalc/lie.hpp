#pragma once
// Finite-dimensional Lie algebras by structure constants, representations by
// action matrices, and the gl/sl constructors with their defining
// representations.
#include <string>
#include <vector>

#include "defcalc/matrix.hpp"

namespace defcalc {

struct ValidationIssue {
  std::string check;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<std::string> passed;  // names of checks that came back clean
  bool ok() const { return issues.empty(); }
};

struct LieModel {
  int dim = 0;
  std::vector<std::string> labels;
  // bracket[i][j] = coefficient vector of [x_i, x_j]
  std::vector<std::vector<Vec>> bracket;

  static LieModel abelian(int n);
  const Vec& brk(int i, int j) const { return bracket[i][j]; }
  Vec brk_vec(const Vec& a, const Vec& b) const;
  std::string label(int i) const {
    return i < int(labels.size()) ? labels[i] : "x" + std::to_string(i);
  }
};

ValidationReport validate_lie(const LieModel& g);

struct Representation {
  int target_dim = 0;
  std::vector<Mat> action;  // action[i] = matrix of x_i on the module
  bool claimed_faithful = false;
};

ValidationReport validate_rep(const LieModel& g, const Representation& r);

Representation trivial_rep(const LieModel& g, int target_dim = 1);
Representation adjoint_rep(const LieModel& g);

struct MatrixLie {
  LieModel g;
  Representation defining;  // the tautological action on C^n
};

MatrixLie gl_of(int n);
MatrixLie sl_of(int n);
// sl2 in the (h, e, f) basis with [h,e] = 2e, [h,f] = -2f, [e,f] = h,
// plus its standard representation on C^2 (basis u, v; e·v = u)
MatrixLie sl2_standard();

}  // namespace defcalc
