#pragma once

#include <vector>

#include "defcalc/artin.hpp"
#include "defcalc/lie.hpp"
#include "defcalc/matrix.hpp"

namespace defcalc {

// A truncated polynomial algebra together with its vector fields: the
// finite-dimensional stand-in for a manifold with its tangent sheaf. The
// fields form the free module on the coordinate directions; the basis field
// with index j * a.dim + c is (monomial c) * d_j
struct LieRinehartModel {
  ArtinAlgebra a;
  int vars = 0;
  int order = 0;
  std::vector<int> degree;                // monomial degree of each algebra basis element
  std::vector<Mat> partial;               // coordinate partial-derivative matrices
  int tdim = 0;
  std::vector<Mat> taction;               // action matrices of the basis fields
  std::vector<std::vector<Vec>> bracket;  // [s][t] -> coordinates of [field s, field t]
  std::vector<std::vector<Vec>> module;   // [c][t] -> coordinates of monomial_c * field t
};

LieRinehartModel truncated_poly_model(int vars, int order);

// Leibniz on all basis pairs whose product stays below the truncation order,
// closure and antisymmetry of the bracket table, module table consistency
ValidationReport validate_lr(const LieRinehartModel& m);

// Differential forms in coordinate normal form: a degree-i form is a sum of
// f_I dx_I over strictly increasing direction words I, with coordinates
// (generator index) * a.dim + algebra coordinate
struct FormSpace {
  int top = 0;
  std::vector<std::vector<std::vector<int>>> gens;  // direction words per degree
  std::vector<Mat> d;  // coordinate exterior derivative per degree < top
  int adim = 0;
  int dim(int i) const {
    return (i < 0 || i >= int(gens.size())) ? 0 : int(gens[i].size()) * adim;
  }
};

FormSpace form_space(const LieRinehartModel& m, int top);

// evaluation of a form on a tuple of basis fields, extended linearly over the
// algebra in every slot
Vec eval_form(const LieRinehartModel& m, const FormSpace& f, int i, const Vec& form,
              const std::vector<int>& tuple);

// wedge of basis fields expanded into the coordinate normal form of degree i
Vec expand_wedge(const LieRinehartModel& m, const FormSpace& f,
                 const std::vector<int>& tuple);

// First-order operators on the degree-i forms: the direct sum of a first-order
// block T (x) wedge (coordinates ((j * W + I) * adim + c)) and a zeroth-order
// block wedge (coordinates W * ... offset first_dim)
struct FirstOrderOps {
  int i = 0;
  int first_dim = 0;   // vars * W * adim
  int zeroth_dim = 0;  // W * adim
  Mat phi;             // splitting: wedge degree i+1 -> pair coordinates
  Mat incl;            // inclusion of the (i+1)-wedges into T (x) wedge
  Mat tmap;            // transpose of d: pairs -> (S^2 T + T) (x) wedge_{i-1}
};

FirstOrderOps first_order_ops(const LieRinehartModel& m, const FormSpace& f, int i);

// result of applying a first-order operator (in pair coordinates) to a form
Vec apply_op(const LieRinehartModel& m, const FormSpace& f, int i, const Vec& op,
             const Vec& form);

// raw termwise evaluation of the splitting formula
//   phi(v_0 ^ ... ^ v_i)(w) = sum (-1)^j v_j w(..j..)
//                           + sum_{j<k} (-1)^{j+k} w([v_j,v_k], ..j..k..)
// on a tuple of basis fields; not linear over the algebra on truncated models
Vec phi_eval(const LieRinehartModel& m, const FormSpace& f, int i,
             const std::vector<int>& tuple, const Vec& form);

// exterior derivative computed through the splitting and the scalar part of
// the operator extension of the form
Vec d_via_phi(const LieRinehartModel& m, const FormSpace& f, int i, const Vec& form);

struct KernelReport {
  int dim_image = 0;
  int dim_kernel = 0;
  bool equal = false;
};

KernelReport kernel_characterization(const LieRinehartModel& m, const FormSpace& f, int i);

// per-identity report over all degrees up to top
ValidationReport cartan_report(const LieRinehartModel& m, int top);

}  // namespace defcalc
