#pragma once
// The trace 2-form on degree-1 cohomology of a geometric model, the
// module-map identity for the pairing on the symmetric square, the chain-level
// closedness composite with its independent Cartan-expansion oracle, and
// scalar forms obtained by applying a functional on H^2 of the algebra.
#include <vector>

#include "defcalc/geometric.hpp"
#include "defcalc/jacobi.hpp"

namespace defcalc {

struct TraceForm {
  int h1 = 0;        // dim H^1 of the Lie side
  int h2 = 0;        // dim H^2 of the algebra side
  Mat h1reps;        // L coords x h1
  std::vector<int> deg2;  // A coordinates of internal degree 2
  Mat h2reps, h2proj;     // in the deg2 slice coordinates
  std::vector<std::vector<Vec>> value;  // value[i][j] in H^2(A) coords
};

// throws std::invalid_argument when the pairing is absent or not invariant
TraceForm tau(const GeometricModel& gm);

// tr composed with the action of the algebra on its symmetric square is zero:
// tr([A,B] C) + (sign) tr(B [A,C]) = 0 on all basis triples
ValidationReport module_map_check(const GeometricModel& gm);

struct DTauReport {
  TraceForm form;
  bool obstructed = false;
  ValidationReport checks;  // the chain-level facts behind the composite
  Mat composite;            // h2 x (strictly increasing triples of H^1 classes)
  Mat oracle;               // A-chain values of the Cartan expansion per triple
  bool composite_zero = false;
  bool oracle_zero = false;
  bool agree = false;  // both routes report the same vanishing
};

// d(tau) through the chain composite sigma^3 L [2] -> J_1(L, sigma^2 L) ->
// J_1(L, A) -> H^2(A), cross-checked against the expansion
// -tau([x,y],z) + tau([x,z],y) - tau([y,z],x) on representatives
DTauReport dtau(const GeometricModel& gm);

// entrywise application of a functional on H^2(A) to the trace form
Mat eta_scalar_form(const TraceForm& t, const Vec& eta);

struct NondegeneracyReport {
  Q det = 0;
  bool even = false;
  Q pfaffian = 0;
  bool nondegenerate = false;
};

// exact determinant (and Pfaffian in even dimension) of an alternating matrix
NondegeneracyReport nondegeneracy(const Mat& alt);

}  // namespace defcalc
