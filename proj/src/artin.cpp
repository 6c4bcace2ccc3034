#include "defcalc/artin.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace defcalc {

namespace {

using Word = std::vector<int>;

void monomials(int vars, int maxdeg, Word& cur, std::vector<Word>& out) {
  if (int(cur.size()) == maxdeg) return;
  int lo = cur.empty() ? 0 : cur.back();
  for (int a = lo; a < vars; ++a) {
    cur.push_back(a);
    out.push_back(cur);
    monomials(vars, maxdeg, cur, out);
    cur.pop_back();
  }
}

std::string monomial_label(const Word& w) {
  static const char* names = "xyzw";
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += (w[i] < 4) ? std::string(1, names[w[i]]) : "x" + std::to_string(w[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::optional<Q> rational_sqrt(const Q& x) {
  if (x < 0) return std::nullopt;
  mpz_class num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Q(rn) / Q(rd);
}

struct Quot {
  Mat proj;  // q x n
  Mat lift;  // n x q, proj * lift = id
};

Quot quotient_by(const Mat& sub, int n) {
  Quot q;
  if (sub.cols() == 0) {
    q.proj = Mat::identity(n);
    q.lift = Mat::identity(n);
    return q;
  }
  Eliminated el = rref(sub.transpose());
  std::vector<char> is_piv(n, 0);
  for (int p : el.pivots) is_piv[p] = 1;
  std::vector<int> freec;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) freec.push_back(j);
  Mat f(n, n);
  for (int r = 0; r < el.rank; ++r)
    for (int j = 0; j < n; ++j) f.at(j, r) = el.rref.at(r, j);
  for (int k = 0; k < int(freec.size()); ++k) f.at(freec[k], el.rank + k) = 1;
  auto finv = inverse(f);
  if (!finv) throw std::logic_error("quotient basis change not invertible");
  q.proj = Mat(int(freec.size()), n);
  for (int k = 0; k < int(freec.size()); ++k)
    for (int j = 0; j < n; ++j) q.proj.at(k, j) = finv->at(el.rank + k, j);
  q.lift = Mat(n, int(freec.size()));
  for (int k = 0; k < int(freec.size()); ++k) q.lift.at(freec[k], k) = 1;
  return q;
}

}  // namespace

Vec ArtinAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      for (int k = 0; k < dim; ++k) out[k] += a[i] * b[j] * product[i][j][k];
    }
  }
  return out;
}

Vec ArtinAlgebra::unit_vec() const {
  Vec e(dim, 0);
  e[unit] = 1;
  return e;
}

Mat ArtinAlgebra::mult_op(const Vec& a) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col(dim, 0);
    col[j] = 1;
    Vec p = mul(a, col);
    for (int i = 0; i < dim; ++i) m.at(i, j) = p[i];
  }
  return m;
}

std::vector<std::vector<int>> truncated_poly_monomials(int vars, int order) {
  std::vector<Word> mons = {{}};
  Word cur;
  monomials(vars, order, cur, mons);
  std::stable_sort(mons.begin(), mons.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return mons;
}

ArtinAlgebra ArtinAlgebra::truncated_poly(int vars, int order) {
  std::vector<Word> mons = truncated_poly_monomials(vars, order);
  std::map<Word, int> index;
  for (int i = 0; i < int(mons.size()); ++i) index[mons[i]] = i;
  ArtinAlgebra s;
  s.dim = int(mons.size());
  s.unit = 0;
  for (const Word& w : mons) s.labels.push_back(monomial_label(w));
  s.product.assign(s.dim, std::vector<Vec>(s.dim, Vec(s.dim, 0)));
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) {
      Word w = mons[i];
      w.insert(w.end(), mons[j].begin(), mons[j].end());
      std::sort(w.begin(), w.end());
      if (int(w.size()) <= order) s.product[i][j][index.at(w)] = 1;
    }
  return s;
}

ValidationReport algebra_hom_check(const ArtinAlgebra& src, const ArtinAlgebra& dst,
                                   const Mat& f) {
  ValidationReport rep;
  if (f.rows() != dst.dim || f.cols() != src.dim) {
    rep.issues.push_back({"homomorphism shape", "matrix does not match the algebras"});
    return rep;
  }
  if (f.apply(src.unit_vec()) != dst.unit_vec())
    rep.issues.push_back({"unit", "f(1) != 1"});
  auto unit_at = [](int i, int n) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };
  bool mult = true;
  for (int a = 0; a < src.dim && mult; ++a)
    for (int b = 0; b < src.dim && mult; ++b) {
      Vec lhs = f.apply(src.product[a][b]);
      Vec rhs = dst.mul(f.apply(unit_at(a, src.dim)), f.apply(unit_at(b, src.dim)));
      if (lhs != rhs) {
        mult = false;
        rep.issues.push_back({"multiplicativity",
                              src.labels[a] + " * " + src.labels[b]});
      }
    }
  if (rep.ok()) rep.passed.push_back("algebra homomorphism");
  return rep;
}

ArtinInfo artin_validate(const ArtinAlgebra& s) {
  ArtinInfo info;
  ValidationReport& rep = info.report;
  int n = s.dim;
  auto basis = [&](int i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };
  bool comm = true, assoc = true, unit_ok = true;
  for (int i = 0; i < n; ++i) {
    if (s.mul(s.unit_vec(), basis(i)) != basis(i)) unit_ok = false;
    for (int j = 0; j < n; ++j) {
      if (s.product[i][j] != s.product[j][i]) {
        comm = false;
        rep.issues.push_back({"commutativity", "(" + s.labels[i] + "," + s.labels[j] + ")"});
      }
      for (int k = 0; k < n && assoc; ++k)
        if (s.mul(s.product[i][j], basis(k)) != s.mul(basis(i), s.product[j][k])) {
          assoc = false;
          rep.issues.push_back({"associativity", "(" + s.labels[i] + "," + s.labels[j] +
                                                     "," + s.labels[k] + ")"});
        }
    }
  }
  if (comm) rep.passed.push_back("commutativity");
  if (assoc) rep.passed.push_back("associativity");
  if (unit_ok)
    rep.passed.push_back("unit");
  else
    rep.issues.push_back({"unit", "unit element fails"});
  if (!comm || !assoc || !unit_ok) return info;

  // trace form t(a,b) = trace of multiplication by ab; its radical is the
  // nilradical in characteristic zero, which for a local algebra is m
  Mat t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat op = s.mult_op(s.product[i][j]);
      Q tr = 0;
      for (int k = 0; k < n; ++k) tr += op.at(k, k);
      t.at(i, j) = tr;
    }
  Mat rad = kernel_of(t);
  if (rad.cols() != n - 1) {
    // not local: look for an idempotent witness inside a plane spanned by the
    // unit and a single basis element whose square stays in that plane
    std::string witness = "radical dimension " + std::to_string(rad.cols()) +
                          " (expected " + std::to_string(n - 1) + ")";
    for (int b = 0; b < n && comm; ++b) {
      if (b == s.unit) continue;
      Vec sq = s.product[b][b];
      bool in_plane = true;
      for (int k = 0; k < n; ++k)
        if (k != s.unit && k != b && sq[k] != 0) in_plane = false;
      if (!in_plane) continue;
      Q c0 = sq[s.unit], c1 = sq[b];
      auto root = rational_sqrt(c1 * c1 + 4 * c0);
      if (!root || *root == 0) continue;
      Q beta = 1 / *root, alpha = (1 - beta * c1) / 2;
      Vec e(n, 0);
      e[s.unit] = alpha;
      e[b] = beta;
      if (s.mul(e, e) == e && e != s.unit_vec()) {
        witness = "idempotent " + to_string(alpha) + "*1 + " + to_string(beta) + "*" +
                  s.labels[b];
        break;
      }
    }
    rep.issues.push_back({"local", witness});
    return info;
  }
  info.m_basis = rad;
  // nilpotency of m
  Mat power = rad;
  int k = 1;
  while (power.cols() > 0 && k <= n) {
    std::vector<Vec> prods;
    for (int a = 0; a < rad.cols(); ++a)
      for (int b = 0; b < power.cols(); ++b) {
        Vec va(n, 0), vb(n, 0);
        for (int r = 0; r < n; ++r) {
          va[r] = rad.at(r, a);
          vb[r] = power.at(r, b);
        }
        prods.push_back(s.mul(va, vb));
      }
    Mat pm(n, int(prods.size()));
    for (int c = 0; c < int(prods.size()); ++c)
      for (int r = 0; r < n; ++r) pm.at(r, c) = prods[c][r];
    power = column_space_basis(pm);
    ++k;
  }
  if (power.cols() > 0) {
    rep.issues.push_back({"nilpotent maximal ideal", "m^" + std::to_string(k) + " != 0"});
    return info;
  }
  info.nilpotency = k;
  rep.passed.push_back("local with nilpotent maximal ideal");
  return info;
}

int AdaptedArtin::sdim(int i) const {
  int d = 0;
  for (int l : layer)
    if (l <= i) ++d;
  return d;
}

Vec AdaptedArtin::mul_trunc(const Vec& a, const Vec& b, int i) const {
  Vec out = s.mul(a, b);
  for (int c = 0; c < s.dim; ++c)
    if (layer[c] > i) out[c] = 0;
  return out;
}

AdaptedArtin adapt(const ArtinAlgebra& in) {
  ArtinInfo info = artin_validate(in);
  if (!info.report.ok())
    throw std::invalid_argument("not a valid Artin local algebra: " +
                                info.report.issues.front().check + " at " +
                                info.report.issues.front().witness);
  int n = in.dim;
  // m^j bases
  std::vector<Mat> powers = {Mat::identity(n), column_space_basis(info.m_basis)};
  while (powers.back().cols() > 0) {
    const Mat& m1 = powers[1];
    const Mat& mj = powers.back();
    std::vector<Vec> prods;
    for (int a = 0; a < m1.cols(); ++a)
      for (int b = 0; b < mj.cols(); ++b) {
        Vec va(n, 0), vb(n, 0);
        for (int r = 0; r < n; ++r) {
          va[r] = m1.at(r, a);
          vb[r] = mj.at(r, b);
        }
        prods.push_back(in.mul(va, vb));
      }
    Mat pm(n, int(prods.size()));
    for (int c = 0; c < int(prods.size()); ++c)
      for (int r = 0; r < n; ++r) pm.at(r, c) = prods[c][r];
    powers.push_back(column_space_basis(pm));
  }
  int nu = int(powers.size()) - 1;  // m^nu = 0

  AdaptedArtin ad;
  ad.nilpotency = nu;
  Mat w(n, n);
  std::vector<int> layers;
  w.at(in.unit, 0) = 1;
  layers.push_back(0);
  int col = 1;
  // greedy complements of m^{j+1} inside m^j, top layer growing downward
  for (int j = 1; j < int(powers.size()) - 1; ++j) {
    Mat span = powers[j + 1];
    for (int c = 0; c < powers[j].cols(); ++c) {
      Mat cand(n, span.cols() + 1);
      for (int r = 0; r < n; ++r) {
        for (int cc = 0; cc < span.cols(); ++cc) cand.at(r, cc) = span.at(r, cc);
        cand.at(r, span.cols()) = powers[j].at(r, c);
      }
      if (rank_of(cand) > span.cols()) {
        span = column_space_basis(cand);
        for (int r = 0; r < n; ++r) w.at(r, col) = powers[j].at(r, c);
        layers.push_back(j);
        ++col;
      }
    }
  }
  if (col != n) throw std::logic_error("adapted basis incomplete");
  auto winv = inverse(w);
  if (!winv) throw std::logic_error("adapted basis not invertible");
  ad.to_adapted = *winv;
  ad.from_adapted = w;
  ad.layer = layers;
  ad.s.dim = n;
  ad.s.unit = 0;
  for (int i = 0; i < n; ++i) ad.s.labels.push_back("g" + std::to_string(i));
  ad.s.product.assign(n, std::vector<Vec>(n, Vec(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec vi(n, 0), vj(n, 0);
      for (int r = 0; r < n; ++r) {
        vi[r] = w.at(r, i);
        vj[r] = w.at(r, j);
      }
      Vec p = ad.to_adapted.apply(in.mul(vi, vj));
      ad.s.product[i][j] = p;
    }
  return ad;
}

Mat symbol_map(const AdaptedArtin& s, int i) {
  int di = s.sdim(i), dprev = s.sdim(i - 1);
  Mat out((di - 1) * dprev, di);
  for (int a = 1; a < di; ++a)
    for (int b = 0; b < dprev; ++b) {
      Vec ea(s.dim(), 0), eb(s.dim(), 0);
      ea[a] = 1;
      eb[b] = 1;
      Vec p = s.mul_trunc(ea, eb, i);
      for (int c = 0; c < di; ++c) out.at((a - 1) * dprev + b, c) = p[c];
    }
  return out;
}

bool symbol_factors(const AdaptedArtin& s, int i) {
  Mat sm = symbol_map(s, i);
  int dprev = s.sdim(i - 1);
  for (int a = 1; a < s.sdim(i); ++a)
    for (int b = 0; b < dprev; ++b)
      if (s.layer[a] + s.layer[b] > i)
        for (int c = 0; c < sm.cols(); ++c)
          if (sm.at((a - 1) * dprev + b, c) != 0) return false;
  return true;
}

SModule SModule::free_module(const AdaptedArtin& s, int rank) {
  SModule e;
  e.dim = rank * s.dim();
  for (int a = 0; a < s.dim(); ++a) {
    Vec ea(s.dim(), 0);
    ea[a] = 1;
    Mat op = s.s.mult_op(ea);
    Mat big(e.dim, e.dim);
    for (int r = 0; r < rank; ++r)
      for (int x = 0; x < s.dim(); ++x)
        for (int y = 0; y < s.dim(); ++y)
          big.at(r * s.dim() + x, r * s.dim() + y) = op.at(x, y);
    e.action.push_back(big);
  }
  return e;
}

SModule SModule::residue(const AdaptedArtin& s) {
  SModule e;
  e.dim = 1;
  for (int a = 0; a < s.dim(); ++a)
    e.action.push_back(a == 0 ? Mat::identity(1) : Mat(1, 1));
  return e;
}

ValidationReport validate_smodule(const AdaptedArtin& s, const SModule& e) {
  ValidationReport rep;
  bool ok = e.action[0] == Mat::identity(e.dim);
  if (!ok) rep.issues.push_back({"module unit", "1 does not act as identity"});
  bool mult_ok = true;
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b) {
      Mat lhs = e.action[a] * e.action[b];
      Mat rhs(e.dim, e.dim);
      for (int c = 0; c < s.dim(); ++c)
        if (s.s.product[a][b][c] != 0)
          rhs = rhs + e.action[c].scaled(s.s.product[a][b][c]);
      if (lhs != rhs) {
        mult_ok = false;
        rep.issues.push_back({"module multiplicativity",
                              "(g" + std::to_string(a) + ",g" + std::to_string(b) + ")"});
      }
    }
  if (ok) rep.passed.push_back("module unit");
  if (mult_ok) rep.passed.push_back("module multiplicativity");
  return rep;
}

MOSModule transpose_module(const AdaptedArtin& s, const SModule& e, int m) {
  MOSModule g;
  g.m = m;
  int ed = e.dim;
  for (int i = 0; i <= m; ++i) {
    int di = s.sdim(i);
    int fdim = di * ed;  // free cover B_0^i (x) E, generator index c*ed + k
    std::vector<Vec> rels;
    for (int c = 0; c < di; ++c)
      for (int a = 1; a < s.dim(); ++a)
        for (int k = 0; k < ed; ++k) {
          // (delta_c . g_a) (x) e_k  -  delta_c (x) g_a e_k
          Vec rel(fdim, 0);
          for (int b = 0; b < di; ++b) {
            Vec ea(s.dim(), 0), eb(s.dim(), 0);
            ea[a] = 1;
            eb[b] = 1;
            Q v = s.mul_trunc(ea, eb, i)[c];
            if (v != 0) rel[b * ed + k] += v;
          }
          for (int l = 0; l < ed; ++l) rel[c * ed + l] -= e.action[a].at(l, k);
          bool nz = false;
          for (const Q& q : rel) nz = nz || q != 0;
          if (nz) rels.push_back(rel);
        }
    Mat sub(fdim, int(rels.size()));
    for (int c = 0; c < int(rels.size()); ++c)
      for (int r = 0; r < fdim; ++r) sub.at(r, c) = rels[c][r];
    Quot q = quotient_by(sub, fdim);
    g.proj.push_back(q.proj);
    g.lift.push_back(q.lift);
    g.gdim.push_back(q.proj.rows());
  }
  // inclusions from the coordinate inclusion B_0^{i-1} c B_0^i
  g.incl.push_back(Mat(0, 0));
  for (int i = 1; i <= m; ++i) {
    int dprev = s.sdim(i - 1);
    Mat inc_free(s.sdim(i) * ed, dprev * ed);
    for (int c = 0; c < dprev; ++c)
      for (int k = 0; k < ed; ++k) inc_free.at(c * ed + k, c * ed + k) = 1;
    g.incl.push_back(g.proj[i] * inc_free * g.lift[i - 1]);
  }
  // right action through the E factor
  g.action.assign(m + 1, {});
  for (int i = 0; i <= m; ++i)
    for (int a = 0; a < s.dim(); ++a) {
      int di = s.sdim(i);
      Mat act_free(di * ed, di * ed);
      for (int c = 0; c < di; ++c)
        for (int k = 0; k < ed; ++k)
          for (int l = 0; l < ed; ++l)
            act_free.at(c * ed + l, c * ed + k) = e.action[a].at(l, k);
      g.action[i].push_back(g.proj[i] * act_free * g.lift[i]);
    }
  // symbol maps induced by sigma (x) id_E
  g.symbol.push_back(Mat(0, 0));
  for (int i = 1; i <= m; ++i) {
    int di = s.sdim(i), dprev = s.sdim(i - 1);
    Mat sm = symbol_map(s, i);  // rows (a-1)*dprev + b, cols c
    Mat big((di - 1) * g.gdim[i - 1], di * ed);
    for (int c = 0; c < di; ++c)
      for (int k = 0; k < ed; ++k)
        for (int a = 1; a < di; ++a)
          for (int b = 0; b < dprev; ++b) {
            Q v = sm.at((a - 1) * dprev + b, c);
            if (v == 0) continue;
            for (int r = 0; r < g.gdim[i - 1]; ++r)
              big.at((a - 1) * g.gdim[i - 1] + r, c * ed + k) +=
                  v * g.proj[i - 1].at(r, b * ed + k);
          }
    g.symbol.push_back(big * g.lift[i]);
  }
  return g;
}

QuasiScalar quasi_scalar(const AdaptedArtin& s, const MOSModule& g, int m) {
  // unknowns: phi^i as gdim[i] x sdim(i) matrices, flattened row-major and
  // stacked over i
  std::vector<int> offset(m + 2, 0);
  for (int i = 0; i <= m; ++i) offset[i + 1] = offset[i] + g.gdim[i] * s.sdim(i);
  int total = offset[m + 1];
  auto var = [&](int i, int r, int c) { return offset[i] + r * s.sdim(i) + c; };
  std::vector<Vec> rows;
  auto add_row = [&](Vec&& row) {
    for (const Q& q : row)
      if (q != 0) {
        rows.push_back(std::move(row));
        return;
      }
  };
  for (int i = 0; i <= m; ++i) {
    int di = s.sdim(i);
    // right S-linearity: phi(delta_c . g_a) = phi(delta_c) . g_a
    for (int c = 0; c < di; ++c)
      for (int a = 1; a < s.dim(); ++a)
        for (int r = 0; r < g.gdim[i]; ++r) {
          Vec row(total, 0);
          for (int b = 0; b < di; ++b) {
            Vec ea(s.dim(), 0), eb(s.dim(), 0);
            ea[a] = 1;
            eb[b] = 1;
            Q v = s.mul_trunc(ea, eb, i)[c];
            if (v != 0) row[var(i, r, b)] += v;
          }
          for (int rp = 0; rp < g.gdim[i]; ++rp)
            row[var(i, rp, c)] -= g.action[i][a].at(r, rp);
          add_row(std::move(row));
        }
    if (i == 0) continue;
    int dprev = s.sdim(i - 1);
    // inclusion square
    for (int b = 0; b < dprev; ++b)
      for (int r = 0; r < g.gdim[i]; ++r) {
        Vec row(total, 0);
        row[var(i, r, b)] += 1;
        for (int rp = 0; rp < g.gdim[i - 1]; ++rp)
          row[var(i - 1, rp, b)] -= g.incl[i].at(r, rp);
        add_row(std::move(row));
      }
    // symbol square: sigma_G . phi^i = (id (x) phi^{i-1}) . sigma^i
    Mat sm = symbol_map(s, i);
    for (int c = 0; c < di; ++c)
      for (int a = 1; a < di; ++a)
        for (int r = 0; r < g.gdim[i - 1]; ++r) {
          Vec row(total, 0);
          for (int rp = 0; rp < g.gdim[i]; ++rp)
            row[var(i, rp, c)] += g.symbol[i].at((a - 1) * g.gdim[i - 1] + r, rp);
          for (int b = 0; b < dprev; ++b) {
            Q v = sm.at((a - 1) * dprev + b, c);
            if (v != 0)
              for (int rp = 0; rp < g.gdim[i - 1]; ++rp)
                if (rp == r) row[var(i - 1, rp, b)] -= v;
          }
          add_row(std::move(row));
        }
  }
  Mat system = Mat::from_rows(rows, total);
  Mat sols = kernel_of(system);  // total x nsol
  // project chains to the top map phi^m
  int top = g.gdim[m] * s.sdim(m);
  Mat proj(top, sols.cols());
  for (int c = 0; c < sols.cols(); ++c)
    for (int r = 0; r < top; ++r) proj.at(r, c) = sols.at(offset[m] + r, c);
  QuasiScalar out;
  out.m = m;
  out.basis = column_space_basis(proj);
  out.dim = out.basis.cols();
  // right S_m-action: (phi . g_a)(delta_c) = phi(delta_c . g_a)
  int dm = s.sdim(m);
  for (int a = 0; a < s.dim(); ++a) {
    Mat img(top, out.dim);
    for (int k = 0; k < out.dim; ++k)
      for (int r = 0; r < g.gdim[m]; ++r)
        for (int c = 0; c < dm; ++c) {
          Q acc = 0;
          for (int b = 0; b < dm; ++b) {
            Vec ea(s.dim(), 0), eb(s.dim(), 0);
            ea[a] = 1;
            eb[b] = 1;
            Q v = s.mul_trunc(ea, eb, m)[c];
            if (v != 0) acc += v * out.basis.at(r * dm + b, k);
          }
          img.at(r * dm + c, k) = acc;
        }
    auto coords = solve(out.basis, img);
    if (!coords) throw std::logic_error("quasi-scalar module not closed under S-action");
    out.action.push_back(*coords);
  }
  return out;
}

Mat double_dual_map(const AdaptedArtin& s, const SModule& e, const MOSModule& bme,
                    const QuasiScalar& c) {
  int dm = s.sdim(c.m);
  Mat img(bme.gdim[c.m] * dm, e.dim);
  for (int k = 0; k < e.dim; ++k)
    for (int cc = 0; cc < dm; ++cc)
      for (int r = 0; r < bme.gdim[c.m]; ++r)
        img.at(r * dm + cc, k) = bme.proj[c.m].at(r, cc * e.dim + k);
  auto coords = solve(c.basis, img);
  if (!coords) throw std::logic_error("double dual image not quasi-scalar");
  return *coords;
}

Mat evaluation_map(const AdaptedArtin& s, const QuasiScalar& c, const MOSModule& bmc,
                   const MOSModule& g) {
  int dm = s.sdim(c.m);
  // on the free cover B_0^m (x) C^m: delta_c (x) phi_k -> phi_k(delta_c)
  Mat free_map(g.gdim[c.m], dm * c.dim);
  for (int cc = 0; cc < dm; ++cc)
    for (int k = 0; k < c.dim; ++k)
      for (int r = 0; r < g.gdim[c.m]; ++r)
        free_map.at(r, cc * c.dim + k) = c.basis.at(r * dm + cc, k);
  return free_map * bmc.lift[c.m];
}

}  // namespace defcalc
