#pragma once
// Geometric models: a DGLA together with a graded-commutative dg algebra, an
// optional dg-module, and an A-valued invariant pairing. The validator checks
// every axiom exhaustively on basis elements.
#include <optional>

#include "defcalc/multilinear.hpp"

namespace defcalc {

struct DGAlgebra {
  Degs degs;
  int unit = 0;  // index of the multiplicative unit (degree 0)
  std::vector<std::vector<Vec>> product;  // product[i][j] = coords of e_i e_j
  Mat d;

  int dim() const { return int(degs.size()); }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec unit_vec() const;
  // scalars as a one-element algebra
  static DGAlgebra scalars();
};

struct GeometricModel {
  DGLA L;
  DGAlgebra A;
  std::optional<DGModule> M;
  // pairing[i][j] = coords in A of tr(l_i, l_j); empty means no pairing
  std::vector<std::vector<Vec>> pairing;

  bool has_pairing() const { return !pairing.empty(); }
  Vec pair(const Vec& x, const Vec& y) const;
};

ValidationReport validate_geometric_model(const GeometricModel& gm);

// the four-dimensional graded-commutative algebra <1; a, b; w> with
// ab = -ba = w, a^2 = b^2 = 0, zero differential
DGAlgebra exterior_square_algebra();

// g tensor A for a degree-0 matrix Lie algebra: basis x_i (x) a_j of degree
// |a_j|, bracket [x(x)al, y(x)be] = [x,y](x)(al be), pairing
// tr(x(x)al, y(x)be) = trace(xy)(al be)
GeometricModel tensor_model(const MatrixLie& g, const DGAlgebra& a);

// gl(E) or its traceless subalgebra for E of the given dimension
MatrixLie sl_gl_of(int target_dim, bool traceless);

}  // namespace defcalc
