#pragma once
// Graded exterior/symmetric powers with deterministic bases and Koszul signs,
// the bracket/action differentials on them, and the unshuffle coproduct.
#include <map>
#include <vector>

#include "defcalc/lie.hpp"
#include "defcalc/matrix.hpp"

namespace defcalc {

using Degs = std::vector<int>;
using Word = std::vector<int>;

enum class PowerKind { exterior, symmetric };

// Adjacent transposition sign. Exterior: -(-1)^{ab}; symmetric: (-1)^{ab}.
// A letter may repeat iff its self-swap sign is +1 (odd degree for exterior,
// even for symmetric).
Q swap_sign(PowerKind k, int da, int db);

struct PowerBasis {
  PowerKind kind = PowerKind::exterior;
  Degs degs;  // degree of each generator of the underlying space
  int power = 0;
  std::vector<Word> words;  // lexicographic
  std::map<Word, int> index;

  int dim() const { return int(words.size()); }
  int word_degree(const Word& w) const {
    int s = 0;
    for (int l : w) s += degs[l];
    return s;
  }
};

PowerBasis power_basis(PowerKind kind, const Degs& degs, int i);

// sort a word into canonical form; sign = 0 means the element is zero
struct Canon {
  Q sign;
  Word word;
};
Canon canon_word(PowerKind kind, const Degs& degs, Word w);

// A DGLA presented on a homogeneous basis; a plain Lie algebra is the
// degree-0, d = 0 case.
struct DGLA {
  Degs degs;
  std::vector<std::vector<Vec>> bracket;
  Mat d;  // internal differential, degree +1

  int dim() const { return int(degs.size()); }
  static DGLA of(const LieModel& g);
};

struct DGModule {
  Degs degs;
  std::vector<Mat> action;  // one matrix per basis element of the DGLA
  Mat d;

  int dim() const { return int(degs.size()); }
  static DGModule of(const Representation& r);
};

// Bracket-plus-action differential lambda^i (x) M -> lambda^{i-1} (x) M.
// Pass a null module for trivial coefficients (then the target of i = 1 is
// the zero-dimensional lambda^0 (x) 0 convention: callers use lambda^0 = C
// only when a module is present; without one the complex stops at lambda^1).
Mat ce_differential(const DGLA& L, const PowerBasis& src, const PowerBasis& dst,
                    const DGModule* M);

// internal (vertical) differential on lambda^i (x) M, degree +1 in the
// internal grading
Mat internal_differential(const DGLA& L, const PowerBasis& pb, const DGModule* M);

// unshuffle lambda^i -> lambda^a (x) lambda^{i-a}; target index is
// (index in lambda^a) * dim(lambda^{i-a}) + (index in lambda^{i-a})
Mat deconcat(const PowerBasis& src, const PowerBasis& left, const PowerBasis& right);

// functorial extension of a degree-preserving map to the power
Mat power_map(const PowerBasis& src, const PowerBasis& dst, const Mat& f);

// trace form on the symmetric square of a matrix Lie algebra:
// row vector with entry trace(rho(x_a) rho(x_b)) per basis word {a,b}
Mat trace_on_sigma2(const MatrixLie& g, const PowerBasis& sigma2);

// basis of the mixed power inside S^2 V (x) V: kernel of the symmetrization
// into S^3 V (columns span the subspace)
Mat sigma21_basis(int n);

}  // namespace defcalc
