#include "defcalc/enveloping.hpp"

#include <algorithm>
#include <stdexcept>

namespace defcalc {

namespace {

// all weakly increasing words of length len over n letters, lexicographic
void sorted_words(int n, int len, Word& cur, std::vector<Word>& out) {
  if (int(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int a = lo; a < n; ++a) {
    cur.push_back(a);
    sorted_words(n, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PbwAlgebra pbw(const LieModel& g, int m) {
  PbwAlgebra u;
  u.g = g;
  u.m = m;
  for (int len = 0; len <= m; ++len) {
    Word cur;
    sorted_words(g.dim, len, cur, u.basis);
  }
  for (int i = 0; i < int(u.basis.size()); ++i) u.index[u.basis[i]] = i;
  return u;
}

Vec PbwAlgebra::straighten(const Word& w) const {
  int desc = -1;
  for (int i = 0; i + 1 < int(w.size()); ++i)
    if (w[i] > w[i + 1]) {
      desc = i;
      break;
    }
  if (desc < 0) {
    Vec out(basis.size(), 0);
    if (int(w.size()) <= m) out[index.at(w)] = 1;
    return out;
  }
  Word swapped = w;
  std::swap(swapped[desc], swapped[desc + 1]);
  Vec out = straighten(swapped);
  const Vec& c = g.brk(w[desc], w[desc + 1]);
  Word shorter;
  shorter.reserve(w.size() - 1);
  for (int i = 0; i < int(w.size()); ++i)
    if (i != desc + 1) shorter.push_back(w[i]);
  for (int k = 0; k < g.dim; ++k) {
    if (c[k] == 0) continue;
    shorter[desc] = k;
    Vec part = straighten(shorter);
    for (int i = 0; i < int(out.size()); ++i) out[i] += c[k] * part[i];
  }
  return out;
}

Vec PbwAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out(basis.size(), 0);
  for (int i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      Word cat = basis[i];
      cat.insert(cat.end(), basis[j].begin(), basis[j].end());
      Vec part = straighten(cat);
      Q c = a[i] * b[j];
      for (int k = 0; k < dim(); ++k) out[k] += c * part[k];
    }
  }
  return out;
}

Vec PbwAlgebra::unit() const {
  Vec e(basis.size(), 0);
  e[index.at({})] = 1;
  return e;
}

bool GradedOperator::is_zero() const {
  for (const Mat& c : comp)
    if (!c.is_zero()) return false;
  return true;
}

GradedOperator GradedOperator::operator*(const GradedOperator& o) const {
  if (edim != o.edim || comp.size() != o.comp.size())
    throw std::invalid_argument("graded operator shape mismatch");
  GradedOperator r{edim, {}};
  for (int i = 0; i < int(comp.size()); ++i) r.comp.push_back(comp[i] * o.comp[i]);
  return r;
}

GradedOperator GradedOperator::operator+(const GradedOperator& o) const {
  if (edim != o.edim || comp.size() != o.comp.size())
    throw std::invalid_argument("graded operator shape mismatch");
  GradedOperator r{edim, {}};
  for (int i = 0; i < int(comp.size()); ++i) r.comp.push_back(comp[i] + o.comp[i]);
  return r;
}

GradedOperator GradedOperator::scaled(const Q& c) const {
  GradedOperator r{edim, {}};
  for (const Mat& b : comp) r.comp.push_back(b.scaled(c));
  return r;
}

PowerBasis sym_power(int edim, int i) {
  return power_basis(PowerKind::symmetric, Degs(edim, 0), i);
}

GradedOperator identity_operator(int edim, int N) {
  GradedOperator r{edim, {}};
  for (int i = 0; i <= N; ++i) r.comp.push_back(Mat::identity(sym_power(edim, i).dim()));
  return r;
}

GradedOperator zero_operator(int edim, int N) {
  GradedOperator r{edim, {}};
  for (int i = 0; i <= N; ++i) {
    int d = sym_power(edim, i).dim();
    r.comp.push_back(Mat(d, d));
  }
  return r;
}

GradedOperator derivation_operator(const Mat& action, int N) {
  int n = action.rows();
  GradedOperator r{n, {}};
  for (int i = 0; i <= N; ++i) {
    PowerBasis pb = sym_power(n, i);
    Mat c(pb.dim(), pb.dim());
    for (int wi = 0; wi < pb.dim(); ++wi) {
      const Word& w = pb.words[wi];
      for (int j = 0; j < i; ++j)
        for (int a = 0; a < n; ++a) {
          Q v = action.at(a, w[j]);
          if (v == 0) continue;
          Word t = w;
          t[j] = a;
          std::sort(t.begin(), t.end());
          c.at(pb.index.at(t), wi) += v;
        }
    }
    r.comp.push_back(c);
  }
  return r;
}

GradedOperator rho(const PbwAlgebra& u_alg, const Representation& e, const Vec& u, int N) {
  std::vector<GradedOperator> gen;
  gen.reserve(e.action.size());
  for (const Mat& a : e.action) gen.push_back(derivation_operator(a, N));
  GradedOperator out = zero_operator(e.target_dim, N);
  for (int i = 0; i < u_alg.dim(); ++i) {
    if (u[i] == 0) continue;
    GradedOperator term = identity_operator(e.target_dim, N);
    for (int l : u_alg.basis[i]) term = term * gen[l];
    out = out + term.scaled(u[i]);
  }
  return out;
}

Vec flatten(const GradedOperator& op) {
  Vec v;
  for (const Mat& c : op.comp)
    for (int r = 0; r < c.rows(); ++r)
      for (int k = 0; k < c.cols(); ++k) v.push_back(c.at(r, k));
  return v;
}

namespace {

// mu_b: S^i -> S^{i+1}, multiply by e_b; del_b: S^{i+1} -> S^i, d/de_b
Mat mul_by(int edim, int b, int i) {
  PowerBasis src = sym_power(edim, i), dst = sym_power(edim, i + 1);
  Mat r(dst.dim(), src.dim());
  for (int wi = 0; wi < src.dim(); ++wi) {
    Word t = src.words[wi];
    t.push_back(b);
    std::sort(t.begin(), t.end());
    r.at(dst.index.at(t), wi) = 1;
  }
  return r;
}

Mat del_by(int edim, int b, int i) {
  PowerBasis src = sym_power(edim, i + 1), dst = sym_power(edim, i);
  Mat r(dst.dim(), src.dim());
  for (int wi = 0; wi < src.dim(); ++wi) {
    const Word& w = src.words[wi];
    int mult = int(std::count(w.begin(), w.end(), b));
    if (mult == 0) continue;
    Word t;
    bool dropped = false;
    for (int l : w) {
      if (l == b && !dropped) {
        dropped = true;
        continue;
      }
      t.push_back(l);
    }
    r.at(dst.index.at(t), wi) = mult;
  }
  return r;
}

}  // namespace

GradedOperator graded_trace(const GradedOperator& op) {
  if (op.comp.empty()) throw std::invalid_argument("empty graded operator");
  GradedOperator r{op.edim, {}};
  for (int i = 0; i + 1 < int(op.comp.size()); ++i) {
    int d = sym_power(op.edim, i).dim();
    Mat c(d, d);
    for (int b = 0; b < op.edim; ++b)
      c = c + del_by(op.edim, b, i) * op.comp[i + 1] * mul_by(op.edim, b, i);
    r.comp.push_back(c);
  }
  return r;
}

Mat trace_contraction_map(int edim, int i) {
  int ds = sym_power(edim, i + 1).dim();
  int dt = sym_power(edim, i).dim();
  std::vector<Mat> mu, del;
  for (int b = 0; b < edim; ++b) {
    mu.push_back(mul_by(edim, b, i));
    del.push_back(del_by(edim, b, i));
  }
  Mat out(dt * dt, ds * ds);
  for (int r = 0; r < ds; ++r)
    for (int c = 0; c < ds; ++c)
      for (int b = 0; b < edim; ++b)
        for (int rp = 0; rp < dt; ++rp) {
          Q l = del[b].at(rp, r);
          if (l == 0) continue;
          for (int cp = 0; cp < dt; ++cp)
            out.at(rp * dt + cp, r * ds + c) += l * mu[b].at(c, cp);
        }
  return out;
}

Mat trace_criterion_map(int edim, int i) {
  PowerBasis mid = sym_power(edim, i + 1);
  PowerBasis low = sym_power(edim, i);
  int ds = mid.dim();
  // one row per pair (I, J): trace over E of iota_J . phi . mu_I, where mu_I
  // multiplies E into S^{i+1} by the word I and iota_J takes iterated partial
  // derivatives back down to E
  Mat out(low.dim() * low.dim(), ds * ds);
  std::vector<Mat> dword(low.dim());
  for (int ji = 0; ji < low.dim(); ++ji) {
    const Word& w = low.words[ji];
    Mat d = Mat::identity(ds);
    for (int j = 0; j < int(w.size()); ++j)
      d = del_by(edim, w[j], int(w.size()) - j) * d;
    dword[ji] = d;  // S^{i+1} -> E
  }
  for (int ii = 0; ii < low.dim(); ++ii)
    for (int ji = 0; ji < low.dim(); ++ji)
      for (int a = 0; a < edim; ++a) {
        Word s = low.words[ii];
        s.push_back(a);
        std::sort(s.begin(), s.end());
        int c = mid.index.at(s);
        for (int r = 0; r < ds; ++r)
          out.at(ii * low.dim() + ji, r * ds + c) += dword[ji].at(a, r);
      }
  return out;
}

Mat trace_derivation_matrix(const PbwAlgebra& u_alg, const Representation& defining) {
  std::vector<Q> tr(u_alg.g.dim, 0);
  for (int a = 0; a < u_alg.g.dim; ++a)
    for (int k = 0; k < defining.action[a].rows(); ++k) tr[a] += defining.action[a].at(k, k);
  Mat out(u_alg.dim(), u_alg.dim());
  for (int i = 0; i < u_alg.dim(); ++i) {
    const Word& w = u_alg.basis[i];
    for (int j = 0; j < int(w.size()); ++j) {
      if (tr[w[j]] == 0) continue;
      Word t;
      for (int l = 0; l < int(w.size()); ++l)
        if (l != j) t.push_back(w[l]);
      out.at(u_alg.index.at(t), i) += tr[w[j]];
    }
  }
  return out;
}

namespace {

int operator_span_rank(const std::vector<GradedOperator>& ops) {
  if (ops.empty()) return 0;
  std::vector<Vec> rows;
  rows.reserve(ops.size());
  for (const GradedOperator& op : ops) rows.push_back(flatten(op));
  return rank_of(Mat::from_rows(rows, int(rows[0].size())));
}

}  // namespace

std::vector<Vec> gl_coordinates(const MatrixLie& g) {
  std::vector<Vec> out;
  for (const Mat& x : g.defining.action) {
    Vec c;
    for (int a = 0; a < x.rows(); ++a)
      for (int b = 0; b < x.cols(); ++b) c.push_back(x.at(a, b));
    out.push_back(c);
  }
  return out;
}

Vec word_image(const PbwAlgebra& target, const std::vector<Vec>& gens, const Word& w) {
  Vec out = target.unit();
  for (int l : w) {
    Vec gen(target.dim(), 0);
    for (int a = 0; a < int(gens[l].size()); ++a) gen[target.index.at({a})] = gens[l][a];
    out = target.mul(out, gen);
  }
  return out;
}

TracelessReport traceless_image_check(int n, int m, int initial_window) {
  MatrixLie sl = sl_of(n), gl = gl_of(n);
  PbwAlgebra usl = pbw(sl.g, m), ugl = pbw(gl.g, m);
  TracelessReport rep;
  rep.pbw_dim_sl = usl.dim();
  int N = initial_window < 0 ? m + 2 : initial_window;
  int prev = -1;
  for (;; ++N) {
    std::vector<GradedOperator> ops;
    for (int i = 0; i < usl.dim(); ++i) {
      Vec u(usl.dim(), 0);
      u[i] = 1;
      ops.push_back(rho(usl, sl.defining, u, N));
    }
    int r = operator_span_rank(ops);
    if (r == prev) {
      rep.stabilized = true;
      rep.window = N - 1;
      rep.rho_sl_rank = r;
      break;
    }
    prev = r;
    if (N > m + 8) {  // give up rather than loop forever on a bad input
      rep.window = N;
      rep.rho_sl_rank = r;
      break;
    }
  }
  int N0 = rep.window;
  // augmentation ideals: basis words of length >= 1
  std::vector<GradedOperator> sl_aug, gl_aug;
  std::vector<Vec> gl_rows, gl_trace_rows;
  for (int i = 0; i < usl.dim(); ++i) {
    if (usl.basis[i].empty()) continue;
    Vec u(usl.dim(), 0);
    u[i] = 1;
    sl_aug.push_back(rho(usl, sl.defining, u, N0));
  }
  for (int i = 0; i < ugl.dim(); ++i) {
    if (ugl.basis[i].empty()) continue;
    Vec u(ugl.dim(), 0);
    u[i] = 1;
    GradedOperator op = rho(ugl, gl.defining, u, N0);
    gl_aug.push_back(op);
    gl_rows.push_back(flatten(op));
    gl_trace_rows.push_back(flatten(graded_trace(op)));
  }
  rep.rho_sl_aug_rank = operator_span_rank(sl_aug);
  rep.rho_gl_aug_rank = rank_of(Mat::from_rows(gl_rows, int(gl_rows[0].size())));
  int ops_count = int(gl_rows.size());
  int ker_full = ops_count - rep.rho_gl_aug_rank;
  int ker_trace =
      ops_count - rank_of(Mat::from_rows(gl_trace_rows, int(gl_trace_rows[0].size())));
  rep.contraction_traceless_dim = ker_trace - ker_full;
  // derivation reading: kernel of the trace derivation restricted to the
  // augmentation ideal of U^m(gl)
  Mat t = trace_derivation_matrix(ugl, gl.defining);
  std::vector<int> aug_cols;
  for (int i = 0; i < ugl.dim(); ++i)
    if (!ugl.basis[i].empty()) aug_cols.push_back(i);
  Mat t_aug = t.columns(aug_cols);
  rep.derivation_traceless_dim = int(aug_cols.size()) - rank_of(t_aug);
  rep.sl_aug_in_derivation_kernel = true;
  std::vector<Vec> sl_gens = gl_coordinates(sl);
  for (int i = 0; i < usl.dim(); ++i) {
    if (usl.basis[i].empty()) continue;
    Vec img = word_image(ugl, sl_gens, usl.basis[i]);
    for (const Q& c : t.apply(img))
      if (c != 0) rep.sl_aug_in_derivation_kernel = false;
  }
  return rep;
}

}  // namespace defcalc
