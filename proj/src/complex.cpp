#include "defcalc/complex.hpp"

#include <stdexcept>

namespace defcalc {

std::optional<std::string> ChainComplex::validate() const {
  for (const auto& [k, m] : d) {
    if (m.cols() != dim(k) || m.rows() != dim(k + 1))
      return "differential shape mismatch at degree " + std::to_string(k);
  }
  for (const auto& [k, m] : d) {
    if (!(diff(k + 1) * m).is_zero())
      return "d^2 != 0 at degree " + std::to_string(k);
  }
  return std::nullopt;
}

std::map<int, DegreeCohomology> cohomology(const ChainComplex& c) {
  if (auto err = c.validate()) throw std::invalid_argument(*err);
  std::map<int, DegreeCohomology> out;
  for (const auto& [k, n] : c.dims) {
    if (n == 0) continue;
    Mat ker = kernel_of(c.diff(k));
    Mat im = column_space_basis(c.dim(k - 1) ? c.diff(k - 1) : Mat(n, 0));

    // grow [im] to [im | reps] spanning ker, then to a full basis of the space
    Mat f = im;
    int r = rank_of(f);
    std::vector<int> rep_cols;
    for (int j = 0; j < ker.cols(); ++j) {
      Mat cand = f.hstack(ker.columns({j}));
      if (rank_of(cand) > r) {
        f = cand;
        ++r;
        rep_cols.push_back(f.cols() - 1);
      }
    }
    DegreeCohomology h;
    h.dim = int(rep_cols.size());
    h.reps = f.columns(rep_cols);
    for (int j = 0; j < n && r < n; ++j) {
      Mat e(n, 1);
      e.at(j, 0) = 1;
      Mat cand = f.hstack(e);
      if (rank_of(cand) > r) {
        f = cand;
        ++r;
      }
    }
    Mat finv = *inverse(f);
    h.proj = Mat(h.dim, n);
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < n; ++j) h.proj.at(i, j) = finv.at(rep_cols[i], j);
    out[k] = std::move(h);
  }
  return out;
}

Mat DoubleComplex::hdiff(Bidegree b) const {
  auto it = hor.find(b);
  if (it != hor.end()) return it->second;
  return Mat(dim({b.first + 1, b.second}), dim(b));
}

Mat DoubleComplex::vdiff(Bidegree b) const {
  auto it = vert.find(b);
  if (it != vert.end()) return it->second;
  return Mat(dim({b.first, b.second + 1}), dim(b));
}

std::optional<std::string> DoubleComplex::validate() const {
  auto where = [](Bidegree b) {
    return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
  };
  for (const auto& [b, m] : hor)
    if (m.cols() != dim(b) || m.rows() != dim({b.first + 1, b.second}))
      return "horizontal shape mismatch at " + where(b);
  for (const auto& [b, m] : vert)
    if (m.cols() != dim(b) || m.rows() != dim({b.first, b.second + 1}))
      return "vertical shape mismatch at " + where(b);
  for (const auto& [b, n] : dims) {
    if (n == 0) continue;
    auto [p, q] = b;
    if (!(hdiff({p + 1, q}) * hdiff(b)).is_zero())
      return "horizontal^2 != 0 at " + where(b);
    if (!(vdiff({p, q + 1}) * vdiff(b)).is_zero())
      return "vertical^2 != 0 at " + where(b);
    if (!(vdiff({p + 1, q}) * hdiff(b) == hdiff({p, q + 1}) * vdiff(b)))
      return "sign convention violated at " + where(b);
  }
  return std::nullopt;
}

TotalComplex totalize(const DoubleComplex& dc) {
  if (auto err = dc.validate()) throw std::invalid_argument(*err);
  TotalComplex t;
  std::map<int, int> cursor;  // total degree -> next free offset
  for (const auto& [b, n] : dc.dims) {
    if (n == 0) continue;
    int deg = b.first + b.second;
    t.layout[b] = {deg, cursor[deg]};
    cursor[deg] += n;
  }
  t.cx.dims = cursor;
  for (const auto& [deg, n] : t.cx.dims) t.cx.d[deg] = Mat(cursor.count(deg + 1) ? cursor[deg + 1] : 0, n);
  auto place = [&](Bidegree src, Bidegree dst, const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return;
    auto [sdeg, soff] = t.layout.at(src);
    auto [ddeg, doff] = t.layout.at(dst);
    Mat& d = t.cx.d[sdeg];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) d.at(doff + r, soff + c) += m.at(r, c);
  };
  for (const auto& [b, n] : dc.dims) {
    if (n == 0) continue;
    auto [p, q] = b;
    if (dc.dim({p + 1, q})) place(b, {p + 1, q}, dc.hdiff(b));
    if (dc.dim({p, q + 1})) {
      Mat v = dc.vdiff(b);
      place(b, {p, q + 1}, p % 2 == 0 ? v : v.scaled(-1));
    }
  }
  return t;
}

}  // namespace defcalc
