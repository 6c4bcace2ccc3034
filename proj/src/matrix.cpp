#include "defcalc/matrix.hpp"

#include <cassert>

namespace defcalc {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_triplets(int rows, int cols, const std::vector<Triplet>& ts) {
  Mat m(rows, cols);
  for (const auto& t : ts) {
    assert(t.r >= 0 && t.r < rows && t.c >= 0 && t.c < cols);
    m.at(t.r, t.c) += t.v;
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(int(rows.size()), cols);
  for (int r = 0; r < int(rows.size()); ++r) {
    assert(int(rows[r].size()) == cols);
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::col(const Vec& v) {
  Mat m(int(v.size()), 1);
  for (int r = 0; r < m.rows(); ++r) m.at(r, 0) = v[r];
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<Triplet> Mat::triplets() const {
  std::vector<Triplet> ts;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0) ts.push_back({r, c, at(r, c)});
  return ts;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Q& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < o.cols_; ++c)
        if (o.at(k, c) != 0) m.at(r, c) += x * o.at(k, c);
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Mat Mat::scaled(const Q& c) const {
  Mat m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

Vec Mat::apply(const Vec& v) const {
  assert(int(v.size()) == cols_);
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
  return out;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Mat Mat::hstack(const Mat& o) const {
  assert(rows_ == o.rows_);
  Mat m(rows_, cols_ + o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
  }
  return m;
}

Mat Mat::vstack(const Mat& o) const {
  assert(cols_ == o.cols_);
  Mat m(rows_ + o.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (int r = 0; r < o.rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(rows_ + r, c) = o.at(r, c);
  return m;
}

Mat Mat::columns(const std::vector<int>& idx) const {
  Mat m(rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j)
    for (int r = 0; r < rows_; ++r) m.at(r, j) = at(r, idx[j]);
  return m;
}

Eliminated rref(const Mat& m) {
  Eliminated e;
  e.rref = m;
  Mat& a = e.rref;
  int pr = 0;
  for (int c = 0; c < a.cols() && pr < a.rows(); ++c) {
    int pivot = -1;
    for (int r = pr; r < a.rows(); ++r)
      if (a.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != pr)
      for (int k = 0; k < a.cols(); ++k) std::swap(a.at(pivot, k), a.at(pr, k));
    Q inv = 1 / a.at(pr, c);
    for (int k = c; k < a.cols(); ++k) a.at(pr, k) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pr || a.at(r, c) == 0) continue;
      Q f = a.at(r, c);
      for (int k = c; k < a.cols(); ++k) a.at(r, k) -= f * a.at(pr, k);
    }
    e.pivots.push_back(c);
    ++pr;
  }
  e.rank = pr;
  return e;
}

RankKernelImage rank_kernel_image(const Mat& m) {
  RankKernelImage out;
  Eliminated e = rref(m);
  out.rank = e.rank;

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  out.kernel = Mat(m.cols(), int(free_cols.size()));
  for (int j = 0; j < int(free_cols.size()); ++j) {
    int fc = free_cols[j];
    out.kernel.at(fc, j) = 1;
    for (int pr = 0; pr < e.rank; ++pr) out.kernel.at(e.pivots[pr], j) = -e.rref.at(pr, fc);
  }

  // reduced basis of the column space: row-reduce the transpose
  Eliminated et = rref(m.transpose());
  out.image = Mat(m.rows(), et.rank);
  for (int r = 0; r < et.rank; ++r)
    for (int c = 0; c < m.rows(); ++c) out.image.at(c, r) = et.rref.at(r, c);
  return out;
}

int rank_of(const Mat& m) { return rref(m).rank; }

Mat kernel_of(const Mat& m) { return rank_kernel_image(m).kernel; }

std::optional<Mat> solve(const Mat& m, const Mat& rhs) {
  assert(m.rows() == rhs.rows());
  Eliminated e = rref(m.hstack(rhs));
  // inconsistent iff some pivot falls in the rhs block
  for (int c : e.pivots)
    if (c >= m.cols()) return std::nullopt;
  Mat x(m.cols(), rhs.cols());
  for (int pr = 0; pr < e.rank; ++pr)
    for (int j = 0; j < rhs.cols(); ++j) x.at(e.pivots[pr], j) = e.rref.at(pr, m.cols() + j);
  return x;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  auto x = solve(m, Mat::col(b));
  if (!x) return std::nullopt;
  Vec v(m.cols());
  for (int r = 0; r < m.cols(); ++r) v[r] = x->at(r, 0);
  return v;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Mat::identity(m.rows()));
  if (!x || !(m * *x == Mat::identity(m.rows()))) return std::nullopt;
  return x;
}

Mat column_space_basis(const Mat& m) { return rank_kernel_image(m).image; }

bool subspace_contained(const Mat& sub, const Mat& big) {
  assert(sub.rows() == big.rows());
  return rank_of(big) == rank_of(big.hstack(sub));
}

bool same_subspace(const Mat& a, const Mat& b) {
  return subspace_contained(a, b) && subspace_contained(b, a);
}

}  // namespace defcalc
