#pragma once
// Truncated universal enveloping algebras with PBW straightening, the
// embedding into graded operators on the symmetric algebra of a module, and
// graded traces in both readings (block contraction and the trace-extension
// derivation of U(gl)).
#include <map>
#include <vector>

#include "defcalc/lie.hpp"
#include "defcalc/multilinear.hpp"

namespace defcalc {

struct PbwAlgebra {
  LieModel g;
  int m = 0;                // order bound
  std::vector<Word> basis;  // weakly increasing words of length <= m, by (length, lex)
  std::map<Word, int> index;

  int dim() const { return int(basis.size()); }
  int order(int i) const { return int(basis[i].size()); }
  // rewrite an arbitrary word into the PBW basis, truncating past order m
  Vec straighten(const Word& w) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec unit() const;
};

PbwAlgebra pbw(const LieModel& g, int m);

// degree-preserving operator on S^0(E)..S^N(E)
struct GradedOperator {
  int edim = 0;
  std::vector<Mat> comp;  // comp[i] acts on S^i(E)

  int window() const { return int(comp.size()) - 1; }
  bool is_zero() const;
  GradedOperator operator*(const GradedOperator& o) const;  // composition
  GradedOperator operator+(const GradedOperator& o) const;
  GradedOperator scaled(const Q& c) const;
  bool operator==(const GradedOperator& o) const = default;
};

GradedOperator identity_operator(int edim, int N);
GradedOperator zero_operator(int edim, int N);

// symmetric power basis of an ungraded module
PowerBasis sym_power(int edim, int i);

// derivation extension of a single action matrix to all S^i, i <= N
GradedOperator derivation_operator(const Mat& action, int N);

// rho of an element of the truncated enveloping algebra
GradedOperator rho(const PbwAlgebra& u_alg, const Representation& e, const Vec& u, int N);

Vec flatten(const GradedOperator& op);

// graded trace by block contraction: tr^i(phi) = sum_b d_b . phi^{i+1} . mu_b
GradedOperator graded_trace(const GradedOperator& op);

// the same contraction as a linear map End(S^{i+1}) -> End(S^i), and the
// interior-multiplication criterion as a map End(S^{i+1}) -> one value per
// length-i word; equal row spaces make the two readings equivalent
Mat trace_contraction_map(int edim, int i);
Mat trace_criterion_map(int edim, int i);

// degree -1 derivation of the truncated enveloping algebra extending
// x -> trace(rho0(x)) on generators
Mat trace_derivation_matrix(const PbwAlgebra& u_alg, const Representation& defining);

// coordinates of each generator of a matrix Lie algebra in the E_ab basis of
// gl(n), row-major
std::vector<Vec> gl_coordinates(const MatrixLie& g);

// image of a word under the algebra map sending letter l to gens[l]
Vec word_image(const PbwAlgebra& target, const std::vector<Vec>& gens, const Word& w);

// The traceless-subalgebra comparison has two readings: the contraction trace
// (which no nonzero rho image annihilates beyond the bottom block) and the
// trace derivation on the enveloping algebra of gl (whose kernel contains all
// of U(sl)). Both dimensions are reported rather than asserting one.
struct TracelessReport {
  int window = 0;
  bool stabilized = false;
  int pbw_dim_sl = 0;
  int rho_sl_rank = 0;                // rank of rho(U^m(sl)) as operators
  int rho_sl_aug_rank = 0;            // same, augmentation ideal only
  int rho_gl_aug_rank = 0;            // rank of rho(aug U^m(gl))
  int contraction_traceless_dim = 0;  // contraction-trace kernel inside rho(aug U(gl))
  int derivation_traceless_dim = 0;   // kernel of the trace derivation on aug U(gl)
  bool sl_aug_in_derivation_kernel = false;
};

TracelessReport traceless_image_check(int n, int m, int initial_window = -1);

}  // namespace defcalc
