#pragma once
// Exact matrices over Q with deterministic elimination. Dense storage is fine
// at desk-model scale; the sparse triplet form is the serialization format.
#include <optional>
#include <vector>

#include "defcalc/scalar.hpp"

namespace defcalc {

using Vec = std::vector<Q>;

struct Triplet {
  int r = 0, c = 0;
  Q v;
  bool operator==(const Triplet& o) const { return r == o.r && c == o.c && v == o.v; }
};

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static Mat identity(int n);
  static Mat from_triplets(int rows, int cols, const std::vector<Triplet>& ts);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);
  static Mat col(const Vec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Q& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Q& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  bool is_zero() const;
  std::vector<Triplet> triplets() const;  // row-major order, zero entries dropped

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Q& c) const;
  Vec apply(const Vec& v) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const = default;

  Mat hstack(const Mat& o) const;  // [this | o]
  Mat vstack(const Mat& o) const;  // [this ; o]
  Mat columns(const std::vector<int>& idx) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Q> a_;
};

struct Eliminated {
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each of the first `rank` rows
  Mat rref;
};

// Gauss–Jordan with deterministic pivoting (first nonzero down the column,
// columns left to right); exact over Q.
Eliminated rref(const Mat& m);

struct RankKernelImage {
  int rank = 0;
  Mat kernel;  // cols x nullity, columns form the reduced kernel basis
  Mat image;   // rows x rank, columns form the reduced column-space basis
};
RankKernelImage rank_kernel_image(const Mat& m);

int rank_of(const Mat& m);
Mat kernel_of(const Mat& m);

// one solution of m x = b, if any
std::optional<Vec> solve(const Mat& m, const Vec& b);
// X with m X = rhs, if any
std::optional<Mat> solve(const Mat& m, const Mat& rhs);
std::optional<Mat> inverse(const Mat& m);

// subspaces are given by matrices whose columns span them
Mat column_space_basis(const Mat& m);  // canonical reduced basis
bool subspace_contained(const Mat& sub, const Mat& big);
bool same_subspace(const Mat& a, const Mat& b);

}  // namespace defcalc
