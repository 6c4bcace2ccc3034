#include "defcalc/multilinear.hpp"

#include <cassert>

namespace defcalc {

Q swap_sign(PowerKind k, int da, int db) {
  Q koszul = (da * db) % 2 == 0 ? 1 : -1;
  return k == PowerKind::exterior ? -koszul : koszul;
}

namespace {

bool repeat_allowed(PowerKind k, int deg) { return swap_sign(k, deg, deg) == 1; }

void enumerate(PowerKind kind, const Degs& degs, int i, int from, Word& cur,
               std::vector<Word>& out) {
  if (int(cur.size()) == i) {
    out.push_back(cur);
    return;
  }
  for (int l = from; l < int(degs.size()); ++l) {
    if (!cur.empty() && cur.back() == l && !repeat_allowed(kind, degs[l])) continue;
    cur.push_back(l);
    enumerate(kind, degs, i, l, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PowerBasis power_basis(PowerKind kind, const Degs& degs, int i) {
  PowerBasis pb;
  pb.kind = kind;
  pb.degs = degs;
  pb.power = i;
  Word cur;
  enumerate(kind, degs, i, 0, cur, pb.words);
  for (int j = 0; j < int(pb.words.size()); ++j) pb.index[pb.words[j]] = j;
  return pb;
}

Canon canon_word(PowerKind kind, const Degs& degs, Word w) {
  Q sign = 1;
  // bubble sort, tracking the Koszul sign of each adjacent transposition
  for (size_t pass = 0; pass + 1 < w.size() || pass == 0; ++pass) {
    bool moved = false;
    for (size_t l = 0; l + 1 < w.size(); ++l) {
      if (w[l] > w[l + 1]) {
        sign *= swap_sign(kind, degs[w[l]], degs[w[l + 1]]);
        std::swap(w[l], w[l + 1]);
        moved = true;
      }
    }
    if (!moved) break;
  }
  for (size_t l = 0; l + 1 < w.size(); ++l)
    if (w[l] == w[l + 1] && !repeat_allowed(kind, degs[w[l]])) return {Q(0), {}};
  return {sign, w};
}

DGLA DGLA::of(const LieModel& g) {
  DGLA L;
  L.degs.assign(g.dim, 0);
  L.bracket = g.bracket;
  L.d = Mat(g.dim, g.dim);
  return L;
}

DGModule DGModule::of(const Representation& r) {
  DGModule M;
  M.degs.assign(r.target_dim, 0);
  M.action = r.action;
  M.d = Mat(r.target_dim, r.target_dim);
  return M;
}

namespace {

// sign for moving letter j of `w` to the front
Q move_front_sign(PowerKind kind, const Degs& degs, const Word& w, int j) {
  Q s = 1;
  for (int l = 0; l < j; ++l) s *= swap_sign(kind, degs[w[l]], degs[w[j]]);
  return s;
}

}  // namespace

Mat ce_differential(const DGLA& L, const PowerBasis& src, const PowerBasis& dst,
                    const DGModule* M) {
  int mdim = M ? M->dim() : 1;
  Mat out(dst.dim() * mdim, src.dim() * mdim);
  const Degs& degs = L.degs;
  auto kind = PowerKind::exterior;
  for (int wi = 0; wi < src.dim(); ++wi) {
    const Word& w = src.words[wi];
    int i = int(w.size());
    // bracket terms: contract letters j < k
    for (int j = 0; j < i; ++j)
      for (int k = j + 1; k < i; ++k) {
        Q s = move_front_sign(kind, degs, w, j);
        for (int l = 0; l < k; ++l)
          if (l != j) s *= swap_sign(kind, degs[w[l]], degs[w[k]]);
        Word rest;
        for (int l = 0; l < i; ++l)
          if (l != j && l != k) rest.push_back(w[l]);
        const Vec& br = L.bracket[w[j]][w[k]];
        for (int t = 0; t < L.dim(); ++t) {
          if (br[t] == 0) continue;
          Word nw;
          nw.push_back(t);
          nw.insert(nw.end(), rest.begin(), rest.end());
          Canon c = canon_word(kind, degs, nw);
          if (c.sign == 0) continue;
          int ti = dst.index.at(c.word);
          Q coef = s * br[t] * c.sign;
          for (int m = 0; m < mdim; ++m) out.at(ti * mdim + m, wi * mdim + m) += coef;
        }
      }
    // action terms: a letter acts on the module
    if (M) {
      for (int j = 0; j < i; ++j) {
        Q s = move_front_sign(kind, degs, w, j);
        int other = 0;
        for (int l = 0; l < i; ++l)
          if (l != j) other += degs[w[l]];
        if ((degs[w[j]] * other) % 2 != 0) s = -s;
        Word rest;
        for (int l = 0; l < i; ++l)
          if (l != j) rest.push_back(w[l]);
        Canon c = canon_word(kind, degs, rest);
        if (c.sign == 0) continue;
        int ti = dst.index.at(c.word);
        const Mat& act = M->action[w[j]];
        for (int m = 0; m < mdim; ++m)
          for (int m2 = 0; m2 < mdim; ++m2)
            if (act.at(m2, m) != 0)
              out.at(ti * mdim + m2, wi * mdim + m) += s * c.sign * act.at(m2, m);
      }
    }
  }
  return out;
}

Mat internal_differential(const DGLA& L, const PowerBasis& pb, const DGModule* M) {
  int mdim = M ? M->dim() : 1;
  Mat out(pb.dim() * mdim, pb.dim() * mdim);
  const Degs& degs = L.degs;
  auto kind = PowerKind::exterior;
  for (int wi = 0; wi < pb.dim(); ++wi) {
    const Word& w = pb.words[wi];
    int total = 0;
    for (int l : w) total += degs[l];
    for (int j = 0; j < int(w.size()); ++j) {
      int prefix = 0;
      for (int l = 0; l < j; ++l) prefix += degs[w[l]];
      Q s = prefix % 2 == 0 ? 1 : -1;
      for (int t = 0; t < L.dim(); ++t) {
        if (L.d.at(t, w[j]) == 0) continue;
        Word nw = w;
        nw[j] = t;
        Canon c = canon_word(kind, degs, nw);
        if (c.sign == 0) continue;
        int ti = pb.index.at(c.word);
        Q coef = s * L.d.at(t, w[j]) * c.sign;
        for (int m = 0; m < mdim; ++m) out.at(ti * mdim + m, wi * mdim + m) += coef;
      }
    }
    if (M) {
      Q s = total % 2 == 0 ? 1 : -1;
      for (int m = 0; m < mdim; ++m)
        for (int m2 = 0; m2 < mdim; ++m2)
          if (M->d.at(m2, m) != 0) out.at(wi * mdim + m2, wi * mdim + m) += s * M->d.at(m2, m);
    }
  }
  return out;
}

Mat deconcat(const PowerBasis& src, const PowerBasis& left, const PowerBasis& right) {
  int a = left.power, b = right.power;
  assert(a + b == src.power);
  Mat out(left.dim() * right.dim(), src.dim());
  const Degs& degs = src.degs;
  auto kind = src.kind;
  int i = src.power;
  for (int wi = 0; wi < src.dim(); ++wi) {
    const Word& w = src.words[wi];
    // choose the positions going left; both halves keep their order
    std::vector<int> sel(i, 0);
    std::fill(sel.begin(), sel.begin() + a, 1);
    // iterate over position subsets in a deterministic order
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
      if (int(cur.size()) == a) {
        subsets.push_back(cur);
        return;
      }
      for (int p = from; p < i; ++p) {
        cur.push_back(p);
        self(self, p + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (const auto& S : subsets) {
      std::vector<bool> in_s(i, false);
      for (int p : S) in_s[p] = true;
      // Koszul sign of pulling the selected letters to the front
      Q sign = 1;
      for (int p : S)
        for (int l = 0; l < p; ++l)
          if (!in_s[l]) sign *= swap_sign(kind, degs[w[l]], degs[w[p]]);
      Word lw, rw;
      for (int p = 0; p < i; ++p) (in_s[p] ? lw : rw).push_back(w[p]);
      out.at(left.index.at(lw) * right.dim() + right.index.at(rw), wi) += sign;
    }
  }
  return out;
}

Mat power_map(const PowerBasis& src, const PowerBasis& dst, const Mat& f) {
  Mat out(dst.dim(), src.dim());
  for (int wi = 0; wi < src.dim(); ++wi) {
    const Word& w = src.words[wi];
    // expand f letterwise
    std::vector<std::pair<Q, Word>> terms = {{Q(1), {}}};
    for (int l : w) {
      std::vector<std::pair<Q, Word>> next;
      for (const auto& [c, partial] : terms)
        for (int t = 0; t < f.rows(); ++t) {
          if (f.at(t, l) == 0) continue;
          Word nw = partial;
          nw.push_back(t);
          next.push_back({c * f.at(t, l), nw});
        }
      terms = std::move(next);
    }
    for (auto& [c, word] : terms) {
      Canon cn = canon_word(dst.kind, dst.degs, word);
      if (cn.sign == 0) continue;
      out.at(dst.index.at(cn.word), wi) += c * cn.sign;
    }
  }
  return out;
}

Mat trace_on_sigma2(const MatrixLie& g, const PowerBasis& sigma2) {
  Mat out(1, sigma2.dim());
  for (int wi = 0; wi < sigma2.dim(); ++wi) {
    const Word& w = sigma2.words[wi];
    assert(w.size() == 2);
    Mat p = g.defining.action[w[0]] * g.defining.action[w[1]];
    Q tr = 0;
    for (int a = 0; a < p.rows(); ++a) tr += p.at(a, a);
    out.at(0, wi) = tr;
  }
  return out;
}

Mat sigma21_basis(int n) {
  Degs degs(n, 0);
  PowerBasis s2 = power_basis(PowerKind::symmetric, degs, 2);
  PowerBasis s3 = power_basis(PowerKind::symmetric, degs, 3);
  Mat mul(s3.dim(), s2.dim() * n);
  for (int wi = 0; wi < s2.dim(); ++wi)
    for (int v = 0; v < n; ++v) {
      Word w = s2.words[wi];
      w.push_back(v);
      Canon c = canon_word(PowerKind::symmetric, degs, w);
      assert(c.sign == 1);
      mul.at(s3.index.at(c.word), wi * n + v) += 1;
    }
  return kernel_of(mul);
}

}  // namespace defcalc
