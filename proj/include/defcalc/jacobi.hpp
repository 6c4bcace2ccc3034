#pragma once
// Jacobi complexes J_m over Lie/DGLA models, the deformation space V_m = H^0,
// the deformation ring R_m = C (+) V_m^*, the bracket-induced obstruction map
// S^2 H^1 -> H^2, and the Poincare module P_m(E) = C^m(G^m) built from the
// cohomology tower G^i = H^0(J_i(g,E)) over R_m.
#include <utility>
#include <vector>

#include "defcalc/artin.hpp"
#include "defcalc/complex.hpp"
#include "defcalc/geometric.hpp"
#include "defcalc/multilinear.hpp"

namespace defcalc {

// Layers lambda^i (tensor the module, when present) at complex degree -i,
// sliced by internal degree into a double complex and totalized with the
// (-1)^p Koszul sign.
struct JacobiComplex {
  int m = 0;
  bool with_module = false;
  int mdim = 1;  // module dimension; 1 placeholder when no module
  std::vector<PowerBasis> layer;       // layer[i] for i in [lo(), m]
  std::vector<std::vector<int>> qdeg;  // internal degree per block element
  DoubleComplex dc;
  TotalComplex total;

  int lo() const { return with_module ? 0 : 1; }
  int block_dim(int i) const { return layer[i].dim() * mdim; }
  // (total degree, index inside that degree) of element j of block i
  std::pair<int, int> coord(int i, int j) const;
};

JacobiComplex jacobi(const DGLA& L, int m);
JacobiComplex jacobi(const LieModel& g, int m);
JacobiComplex jacobi(const GeometricModel& gm, int m);
JacobiComplex jacobi_module(const DGLA& L, const DGModule& M, int m);
JacobiComplex jacobi_module(const GeometricModel& gm, int m);

// coordinate inclusion of the truncation J_small into J_big commutes with the
// total differentials in every degree
ValidationReport truncation_check(const JacobiComplex& small, const JacobiComplex& big);

struct DeformationRing {
  int m = 0;
  int vdim = 0;   // dim V_m = dim H^0(J_m)
  Mat vreps;      // degree-0 chain coords x vdim, cocycle representatives
  Mat vproj;      // vdim x degree-0 chain coords, class projection
  ArtinAlgebra ring;  // dim 1 + vdim; coordinate 0 = unit, 1+k dual to class k
};

// ring structure on C (+) V_m^* dual to the unshuffle coproduct on classes;
// requires trivial coefficients
DeformationRing deformation_ring(const JacobiComplex& j);

// matrix of the surjection R_big -> R_small induced by truncation
// (columns = coordinates of the images of R_big's basis)
Mat ring_truncation(const JacobiComplex& small, const JacobiComplex& big,
                    const DeformationRing& rs, const DeformationRing& rb);

// the quadratic map S^2 H^1 -> H^2 induced by the bracket on cohomology
// representatives; columns indexed by pairs a <= b in lexicographic order
struct Obstruction {
  int h1 = 0, h2 = 0;
  Mat h1reps;  // L coords x h1
  Mat quad;    // h2 x number of pairs
  bool nonzero = false;
};

Obstruction obstruction(const DGLA& L);

// P_m(E) = C^m(G^m): the quasi-scalar module of the tower G^i = H^0(J_i(g,E))
// over the deformation ring, with exact freeness decision
struct PoincareModule {
  int m = 0;
  DeformationRing r;
  AdaptedArtin ad;  // R_m in adapted form
  MOSModule g;      // the cohomology tower with its R_m-module structure
  QuasiScalar p;    // P_m with its R_m-action
  int fiber = 0;    // dim P_m (x)_{R_m} C
  bool free = false;
};

PoincareModule poincare_module(const DGLA& L, const DGModule& E, int m);
PoincareModule poincare_module(const GeometricModel& gm, int m);

}  // namespace defcalc
