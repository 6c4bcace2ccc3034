#pragma once
// Cochain complexes (differentials raise degree; negative degrees allowed) and
// double complexes with the (-1)^p totalization sign.
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "defcalc/matrix.hpp"

namespace defcalc {

struct ChainComplex {
  std::map<int, int> dims;  // degree -> dimension (absent = 0)
  std::map<int, Mat> d;     // d[k]: degree k -> k+1

  int dim(int k) const {
    auto it = dims.find(k);
    return it == dims.end() ? 0 : it->second;
  }
  // differential out of degree k, materialized with correct shape
  Mat diff(int k) const {
    auto it = d.find(k);
    if (it != d.end()) return it->second;
    return Mat(dim(k + 1), dim(k));
  }
  // nullopt if valid; otherwise a message naming the offending degree
  std::optional<std::string> validate() const;
};

struct DegreeCohomology {
  int dim = 0;
  Mat reps;  // space_dim x dim, columns are cocycle representatives
  Mat proj;  // dim x space_dim; proj*reps = id, proj*d_in = 0
};

// throws std::invalid_argument citing the offending degree if d^2 != 0
std::map<int, DegreeCohomology> cohomology(const ChainComplex& c);

using Bidegree = std::pair<int, int>;

struct DoubleComplex {
  std::map<Bidegree, int> dims;
  std::map<Bidegree, Mat> hor;   // (p,q) -> (p+1,q)
  std::map<Bidegree, Mat> vert;  // (p,q) -> (p,q+1)

  int dim(Bidegree b) const {
    auto it = dims.find(b);
    return it == dims.end() ? 0 : it->second;
  }
  Mat hdiff(Bidegree b) const;
  Mat vdiff(Bidegree b) const;
  // squares vanish and the raw differentials commute; the (-1)^p totalization
  // sign is what makes them anticommute
  std::optional<std::string> validate() const;
};

struct TotalComplex {
  ChainComplex cx;
  // bidegree -> (total degree, offset of the block inside that degree)
  std::map<Bidegree, std::pair<int, int>> layout;
};

// blocks of total degree p+q ordered by ascending p; vertical scaled by (-1)^p
TotalComplex totalize(const DoubleComplex& dc);

}  // namespace defcalc
