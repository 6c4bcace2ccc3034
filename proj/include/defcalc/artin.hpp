#pragma once
// Artin local algebras and the order-symbolic machinery over them: dual
// towers B_0^i = S_i^*, B^i = (m/m^{i+1})^*, symbol maps, transpose modules
// B^i(E) = B_0^i (x)_S E, quasi-scalar modules C^m(G), and the two duality
// maps. Everything is computed in an adapted basis ordered by m-adic layer,
// which turns all quotients S_i and m/m^{i+1} into coordinate slices.
#include <string>
#include <vector>

#include "defcalc/lie.hpp"

namespace defcalc {

struct ArtinAlgebra {
  int dim = 0;
  int unit = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> product;  // product[i][j] = coords of e_i e_j

  Vec mul(const Vec& a, const Vec& b) const;
  Vec unit_vec() const;
  Mat mult_op(const Vec& a) const;  // multiplication by a as a matrix

  // C[x_1..vars] / m^(order+1), monomial basis by (degree, lex)
  static ArtinAlgebra truncated_poly(int vars, int order);
};

// monomials of degree <= order as sorted variable-index words, in the
// (degree, lex) order used by ArtinAlgebra::truncated_poly
std::vector<std::vector<int>> truncated_poly_monomials(int vars, int order);

// f (dst.dim x src.dim) is a unital algebra homomorphism: f(1) = 1 and
// f(e_a e_b) = f(e_a) f(e_b) on all basis pairs
ValidationReport algebra_hom_check(const ArtinAlgebra& src, const ArtinAlgebra& dst,
                                   const Mat& f);

struct ArtinInfo {
  ValidationReport report;
  Mat m_basis;         // columns span the maximal ideal (when local)
  int nilpotency = 0;  // smallest k with m^k = 0
};

ArtinInfo artin_validate(const ArtinAlgebra& s);

// the algebra rewritten so that coordinate 0 is the unit and the coordinates
// of layer j span a complement of m^{j+1} in m^j; then S_i is the span of the
// coordinates of layer <= i and m^{i+1} the span of those of layer > i
struct AdaptedArtin {
  ArtinAlgebra s;
  std::vector<int> layer;
  int nilpotency = 0;
  Mat to_adapted, from_adapted;

  int dim() const { return s.dim; }
  int sdim(int i) const;  // dim S_i
  // multiply and project into S_i (kill layers > i)
  Vec mul_trunc(const Vec& a, const Vec& b, int i) const;
};

AdaptedArtin adapt(const ArtinAlgebra& s);  // throws on invalid or non-local input

// B_0^i has the dual coordinates 0..sdim(i)-1, B^i the dual coordinates
// 1..sdim(i)-1. The symbol map sends D to D.mu with mu the multiplication
// (m/m^{i+1}) (x) S_{i-1} -> S_i; target index (a-1)*sdim(i-1) + b.
Mat symbol_map(const AdaptedArtin& s, int i);
// factoring through F_i: components with layer(a) + layer(b) > i all vanish
bool symbol_factors(const AdaptedArtin& s, int i);

// a finite S-module by action matrices, one per adapted basis element
struct SModule {
  int dim = 0;
  std::vector<Mat> action;

  static SModule free_module(const AdaptedArtin& s, int rank);
  static SModule residue(const AdaptedArtin& s);  // C with m acting as zero
};

ValidationReport validate_smodule(const AdaptedArtin& s, const SModule& e);

// the transpose tower G^i = B^i(E), with the data needed to evaluate on it
struct MOSModule {
  int m = 0;
  std::vector<int> gdim;
  std::vector<Mat> incl;                 // G^{i-1} -> G^i for i >= 1
  std::vector<std::vector<Mat>> action;  // right S_i-action per adapted basis elt
  std::vector<Mat> symbol;               // G^i -> B^i (x) G^{i-1} for i >= 1
  // presentation of G^i as a quotient of B_0^i (x) E (generator c*edim+k)
  std::vector<Mat> proj, lift;
};

MOSModule transpose_module(const AdaptedArtin& s, const SModule& e, int m);

// solution space of the quasi-scalar constraints: right S-linear chains
// phi^i: B_0^i -> G^i compatible with inclusions and symbols, projected to
// the top map phi^m
struct QuasiScalar {
  int m = 0;
  int dim = 0;
  Mat basis;                // columns: flattened phi^m, entry order r*sdim(m)+c
  std::vector<Mat> action;  // right S_m-action per adapted basis elt
};

QuasiScalar quasi_scalar(const AdaptedArtin& s, const MOSModule& g, int m);

// E -> C^m(B^m(E)), e |-> (D |-> class of D (x) e), in C^m coordinates
Mat double_dual_map(const AdaptedArtin& s, const SModule& e, const MOSModule& bme,
                    const QuasiScalar& c);
// B^m(C^m(G)) -> G^m, class of D (x) phi |-> phi(D)
Mat evaluation_map(const AdaptedArtin& s, const QuasiScalar& c, const MOSModule& bmc,
                   const MOSModule& g);

}  // namespace defcalc
