// Acceptance harness: argv[1] selects one of the seven suites. Each suite
// prints its sub-checks, then a single "criterion N: PASS|FAIL" line; the
// exit status is 0 exactly when the suite passed.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "defcalc/cartan.hpp"
#include "defcalc/enveloping.hpp"
#include "defcalc/jacobi.hpp"
#include "defcalc/model_io.hpp"
#include "defcalc/traceform.hpp"

using namespace defcalc;

namespace {

struct Suite {
  bool ok = true;
  void check(const std::string& name, bool pass, const std::string& witness = "") {
    std::cout << "  [" << (pass ? "pass" : "FAIL") << "] " << name;
    if (!pass && !witness.empty()) std::cout << " -- " << witness;
    std::cout << "\n";
    ok = ok && pass;
  }
  void check(const std::string& prefix, const ValidationReport& vr) {
    check(prefix, vr.ok(),
          vr.issues.empty() ? "" : vr.issues[0].check + ": " + vr.issues[0].witness);
  }
};

// ---- shared fixtures ----

DGLA abelian_odd(int n) {
  DGLA L;
  L.degs.assign(n, 1);
  L.bracket.assign(n, std::vector<Vec>(n, Vec(n, 0)));
  L.d = Mat(n, n);
  return L;
}

DGModule trivial_module(const DGLA& L, int r) {
  DGModule M;
  M.degs.assign(r, 0);
  M.action.assign(L.dim(), Mat(r, r));
  M.d = Mat(r, r);
  return M;
}

int factorial_of_multiplicities(const Word& w) {
  int f = 1, run = 1;
  for (size_t i = 1; i < w.size(); ++i) {
    run = w[i] == w[i - 1] ? run + 1 : 1;
    f *= run;
  }
  return f;
}

DGAlgebra random_small_algebra(std::mt19937& rng, bool with_d) {
  std::uniform_int_distribution<int> coef(-2, 2);
  int k = 2, l = 1 + int(rng() % 2);
  DGAlgebra a;
  a.degs.push_back(0);
  for (int i = 0; i < k; ++i) a.degs.push_back(1);
  for (int i = 0; i < l; ++i) a.degs.push_back(2);
  int n = 1 + k + l;
  a.unit = 0;
  a.product.assign(n, std::vector<Vec>(n, Vec(n, 0)));
  for (int i = 0; i < n; ++i) {
    a.product[0][i][i] = 1;
    a.product[i][0][i] = 1;
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int w = 0; w < l; ++w) {
        Q c = coef(rng);
        a.product[i][j][1 + k + w] = c;
        a.product[j][i][1 + k + w] = -c;
      }
  a.d = Mat(n, n);
  if (with_d)
    for (int i = 1; i <= k; ++i)
      for (int w = 0; w < l; ++w) a.d.at(1 + k + w, i) = coef(rng);
  return a;
}

GeometricModel random_model(std::mt19937& rng, bool with_d) {
  DGAlgebra a = random_small_algebra(rng, with_d);
  GeometricModel gm = tensor_model(sl2_standard(), a);
  int na = a.dim();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < na; ++j)
      for (int y = 0; y < na; ++y)
        gm.L.d.at(i * na + y, i * na + j) = a.d.at(y, j);
  return gm;
}

GeometricModel omega_model() {
  return tensor_model(sl2_standard(), exterior_square_algebra());
}

std::map<int, int> graded_cohomology_dims(const Degs& degs, const Mat& d) {
  std::map<int, std::vector<int>> pos;
  for (size_t i = 0; i < degs.size(); ++i) pos[degs[i]].push_back(int(i));
  ChainComplex c;
  for (auto& [k, p] : pos) c.dims[k] = int(p.size());
  for (auto& [k, p] : pos) {
    auto up = pos.find(k + 1);
    if (up == pos.end()) continue;
    Mat blk(int(up->second.size()), int(p.size()));
    for (size_t r = 0; r < up->second.size(); ++r)
      for (size_t cc = 0; cc < p.size(); ++cc)
        blk.at(int(r), int(cc)) = d.at(up->second[r], p[cc]);
    c.d[k] = blk;
  }
  std::map<int, int> dims;
  for (auto& [k, hk] : cohomology(c)) dims[k] = hk.dim;
  return dims;
}

// ---- criterion 1: PBW and the operator embedding ----

bool criterion_1(Suite& s) {
  for (bool traceless : {true, false}) {
    MatrixLie g = traceless ? sl2_standard() : gl_of(2);
    std::string gn = traceless ? "sl2" : "gl2";
    for (int m = 1; m <= 3; ++m) {
      PbwAlgebra u = pbw(g.g, m);
      long long sym = 0;
      for (int i = 0; i <= m; ++i) {
        long long b = 1;
        for (int k = 1; k <= i; ++k) b = b * (g.g.dim + k - 1) / k;
        sym += b;
      }
      s.check("dim U^" + std::to_string(m) + "(" + gn + ") = sum dim S^i",
              sym == u.dim(),
              std::to_string(u.dim()) + " vs " + std::to_string(sym));

      // ranks at two consecutive windows; stabilization + injectivity
      auto rank_at = [&](int N) {
        std::vector<Vec> rows;
        int cols = 0;
        for (int i = 0; i < u.dim(); ++i) {
          Vec v(u.dim(), 0);
          v[i] = 1;
          Vec f = flatten(rho(u, g.defining, v, N));
          cols = int(f.size());
          rows.push_back(f);
        }
        return rank_of(Mat::from_rows(rows, cols));
      };
      int r0 = rank_at(m + 2), r1 = rank_at(m + 3);
      s.check("rho rank stabilized for " + gn + ", m=" + std::to_string(m), r0 == r1,
              std::to_string(r0) + " vs " + std::to_string(r1));
      // known failure on gl2 for m >= 2: E00 E11 - E01 E10 + E00 acts as zero
      // on every symmetric power, so the stabilized rank is short of dim U^m
      s.check("rho injective on U^" + std::to_string(m) + "(" + gn + ")",
              r0 == u.dim(),
              "stabilized rank " + std::to_string(r0) + " of " +
                  std::to_string(u.dim()) +
                  "; kernel contains E00 E11 - E01 E10 + E00");

      bool hom = true;
      for (int i = 0; i < g.g.dim && hom; ++i)
        for (int j = 0; j < g.g.dim && hom; ++j) {
          Vec xi(u.dim(), 0), xj(u.dim(), 0), br(u.dim(), 0);
          xi[u.index.at({i})] = 1;
          xj[u.index.at({j})] = 1;
          for (int k = 0; k < g.g.dim; ++k) br[u.index.at({k})] = g.g.brk(i, j)[k];
          GradedOperator a = rho(u, g.defining, xi, m + 2);
          GradedOperator b = rho(u, g.defining, xj, m + 2);
          GradedOperator comm = a * b + (b * a).scaled(-1);
          hom = (rho(u, g.defining, br, m + 2) + comm.scaled(-1)).is_zero();
        }
      s.check("rho([x,y]) = [rho x, rho y] on all pairs, " + gn +
                  ", m=" + std::to_string(m),
              hom);
    }
  }
  return s.ok;
}

// ---- criterion 2: graded trace ----

bool criterion_2(Suite& s) {
  MatrixLie gl2 = gl_of(2);
  PbwAlgebra u2 = pbw(gl2.g, 2);
  Mat t = trace_derivation_matrix(u2, gl2.defining);
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<int> coef(-3, 3);
  bool derivation = true;
  for (int k = 0; k < 100 && derivation; ++k) {
    Vec a(u2.dim(), 0), b(u2.dim(), 0);
    for (int i = 0; i < u2.dim(); ++i)
      if (u2.order(i) <= 1) {
        a[i] = coef(rng);
        b[i] = coef(rng);
      }
    Vec lhs = t.apply(u2.mul(a, b));
    Vec rl = u2.mul(t.apply(a), b), rr = u2.mul(a, t.apply(b));
    for (int i = 0; i < u2.dim(); ++i)
      derivation = derivation && lhs[i] == rl[i] + rr[i];
  }
  s.check("trace extension is a degree -1 derivation on 100 fuzzed pairs", derivation);

  // embed U^3(sl2) into U^3(gl2) and apply the trace derivation
  MatrixLie sl2 = sl2_standard();
  PbwAlgebra u3 = pbw(gl2.g, 3);
  Mat t3 = trace_derivation_matrix(u3, gl2.defining);
  std::vector<Vec> gens = gl_coordinates(sl2);
  PbwAlgebra usl = pbw(sl2.g, 3);
  bool killed = true;
  for (const Word& w : usl.basis) {
    if (w.empty()) continue;  // augmentation ideal only
    Vec img = word_image(u3, gens, w);
    for (const Q& c : t3.apply(img)) killed = killed && c == 0;
  }
  s.check("trace kills the augmentation-ideal PBW basis of U^3(sl2)", killed);

  // contraction vs interior-multiplication criterion on fuzzed operators
  bool agree = true;
  int fuzzed = 0;
  std::uniform_int_distribution<int> kc(-4, 4);
  for (int edim : {2, 3})
    for (int i = 0; i <= 2; ++i) {
      Mat tc = trace_contraction_map(edim, i);
      Mat cc = trace_criterion_map(edim, i);
      Mat kt = kernel_of(tc), kcm = kernel_of(cc);
      for (int k = 0; k < 17; ++k) {
        ++fuzzed;
        // a fuzzed operator annihilated by one reading must be annihilated
        // by the other, and a generic one must be seen by both
        Vec a(kt.cols(), 0), b(kcm.cols(), 0), gen(tc.cols(), 0);
        for (auto& c : a) c = kc(rng);
        for (auto& c : b) c = kc(rng);
        for (auto& c : gen) c = kc(rng);
        Vec va(tc.cols(), 0), vb(tc.cols(), 0);
        for (int r = 0; r < kt.rows(); ++r)
          for (int cidx = 0; cidx < kt.cols(); ++cidx) va[r] += kt.at(r, cidx) * a[cidx];
        for (int r = 0; r < kcm.rows(); ++r)
          for (int cidx = 0; cidx < kcm.cols(); ++cidx)
            vb[r] += kcm.at(r, cidx) * b[cidx];
        for (const Q& c : cc.apply(va)) agree = agree && c == 0;
        for (const Q& c : tc.apply(vb)) agree = agree && c == 0;
        bool tz = true, cz = true;
        for (const Q& c : tc.apply(gen)) tz = tz && c == 0;
        for (const Q& c : cc.apply(gen)) cz = cz && c == 0;
        agree = agree && tz == cz;
      }
    }
  s.check("contraction and interior-multiplication readings agree on " +
              std::to_string(fuzzed) + " fuzzed operators",
          agree && fuzzed >= 100);
  return s.ok;
}

// ---- criterion 3: the double-dual and evaluation isomorphisms ----

bool criterion_3(Suite& s) {
  for (int vars : {1, 2}) {
    // nilpotency index of C[x..]/(x..)^3 is 3; duality at every truncation
    for (int m = 1; m <= 2; ++m) {
      AdaptedArtin ad = adapt(ArtinAlgebra::truncated_poly(vars, m));
      for (int rank : {1, 2}) {
        std::string tag = "vars=" + std::to_string(vars) + ", m=" + std::to_string(m) +
                          ", rank=" + std::to_string(rank);
        SModule e = SModule::free_module(ad, rank);
        MOSModule bme = transpose_module(ad, e, m);
        QuasiScalar c = quasi_scalar(ad, bme, m);
        Mat dd = double_dual_map(ad, e, bme, c);
        auto inv = inverse(dd);
        bool iso = c.dim == e.dim && inv.has_value() &&
                   (*inv * dd == Mat::identity(e.dim));
        s.check("E -> C^m(B^m(E)) is an isomorphism with explicit inverse, " + tag, iso);

        SModule cmod{c.dim, c.action};
        MOSModule bmc = transpose_module(ad, cmod, m);
        Mat ev = evaluation_map(ad, c, bmc, bme);
        auto evinv = inverse(ev);
        bool eviso = evinv.has_value() && (*evinv * ev == Mat::identity(ev.cols()));
        s.check("B^m(C^m(G)) -> G is an isomorphism with explicit inverse, " + tag,
                eviso);
      }
    }
  }
  return s.ok;
}

// ---- criterion 4: the splitting calculus ----

bool criterion_4(Suite& s) {
  for (auto [vars, order] : {std::pair{1, 2}, {2, 2}}) {
    std::string tag = vars == 1 ? "one variable" : "two variables";
    LieRinehartModel m = truncated_poly_model(vars, order);
    s.check("model tables consistent, " + tag, validate_lr(m));
    s.check("splitting suite, " + tag, cartan_report(m, 2));
  }
  // worked value: phi_1(d ^ x d)(x dx) = 0 in one variable
  LieRinehartModel m = truncated_poly_model(1, 2);
  FormSpace f = form_space(m, 1);
  Vec form(3, 0);
  form[1] = 1;  // x dx
  Vec v = phi_eval(m, f, 1, {0, 1}, form);
  bool zero = true;
  for (const Q& c : v) zero = zero && c == 0;
  s.check("worked value phi_1(d ^ x d)(x dx) = 0", zero);
  return s.ok;
}

// ---- criterion 5: deformation rings and Poincare modules ----

bool criterion_5(Suite& s) {
  MatrixLie sl2 = sl2_standard();
  GeometricModel omega = omega_model();
  std::vector<std::pair<std::string, DGLA>> dglas = {
      {"sl2 point model", DGLA::of(sl2.g)},
      {"abelian rank 2", abelian_odd(2)},
      {"sl2 tensor <1;a,b;w>", omega.L}};
  for (auto& [name, L] : dglas)
    for (int m = 1; m <= 4; ++m) {
      JacobiComplex j = jacobi(L, m);
      auto err = j.total.cx.validate();
      s.check("D^2 = 0 on " + name + ", m=" + std::to_string(m), !err.has_value(),
              err.value_or(""));
    }
  {
    DGLA L = abelian_odd(2);
    DGModule M = trivial_module(L, 2);
    for (int m = 1; m <= 4; ++m) {
      auto err = jacobi_module(L, M, m).total.cx.validate();
      s.check("D^2 = 0 with module coefficients, m=" + std::to_string(m),
              !err.has_value(), err.value_or(""));
    }
  }

  for (int m = 1; m <= 3; ++m) {
    DeformationRing r = deformation_ring(jacobi(abelian_odd(2), m));
    ArtinInfo info = artin_validate(r.ring);
    s.check("R_" + std::to_string(m) + " ring axioms (abelian model)",
            info.report.ok());
    s.check("maximal ideal of R_" + std::to_string(m) + " has power m+1 zero",
            info.report.ok() && info.nilpotency <= m + 1,
            "nilpotency " + std::to_string(info.nilpotency));
  }

  {  // zero-bracket model realizes the truncated polynomial ring
    JacobiComplex j = jacobi(abelian_odd(2), 2);
    DeformationRing r = deformation_ring(j);
    ArtinAlgebra poly = ArtinAlgebra::truncated_poly(2, 2);
    auto mons = truncated_poly_monomials(2, 2);
    Mat f(poly.dim, r.ring.dim);
    f.at(0, 0) = 1;
    for (int l = 0; l < r.vdim; ++l)
      for (int i = 1; i <= j.m; ++i)
        for (int k = 0; k < j.block_dim(i); ++k) {
          auto [n, idx] = j.coord(i, k);
          if (n != 0 || r.vproj.at(l, idx) == 0) continue;
          const Word& w = j.layer[i].words[k];
          int mi = int(std::find(mons.begin(), mons.end(), w) - mons.begin());
          f.at(mi, 1 + l) += r.vproj.at(l, idx) / factorial_of_multiplicities(w);
        }
    s.check("R_2 of the zero-bracket model has dimension 6", r.ring.dim == 6,
            std::to_string(r.ring.dim));
    s.check("R_2 -> C[t1,t2]/(t1,t2)^3 is bijective", rank_of(f) == 6);
    s.check("R_2 -> C[t1,t2]/(t1,t2)^3 is an algebra map",
            algebra_hom_check(r.ring, poly, f));
  }

  for (int m = 1; m <= 3; ++m) {
    DeformationRing r = deformation_ring(jacobi(sl2.g, m));
    s.check("H^1(sl2, ad) = 0 forces R_" + std::to_string(m) + " = C",
            r.ring.dim == 1, "dim " + std::to_string(r.ring.dim));
  }

  {  // trivial-action fixtures: P_m is free of rank dim E_0
    DGLA L = abelian_odd(2);
    DGModule M = trivial_module(L, 2);
    for (int m = 0; m <= 2; ++m) {
      PoincareModule pm = poincare_module(L, M, m);
      s.check("P_" + std::to_string(m) + " free of rank dim E_0 (fiber check)",
              pm.free && pm.fiber == 2 && pm.p.dim == 2 * pm.ad.dim(),
              "dim " + std::to_string(pm.p.dim) + ", fiber " +
                  std::to_string(pm.fiber));
    }
    DGModule M1 = trivial_module(L, 1);
    PoincareModule pm = poincare_module(L, M1, 2);
    s.check("rank-1 trivial-action fixture is free with fiber 1",
            pm.free && pm.fiber == 1);
    // rigid algebra with trivial coefficients: R = C and P = E
    DGLA rig = DGLA::of(sl2.g);
    PoincareModule pr = poincare_module(rig, trivial_module(rig, 2), 2);
    s.check("rigid trivial-action fixture: P_2 = E over R_2 = C",
            pr.free && pr.fiber == 2 && pr.p.dim == 2 && pr.ad.dim() == 1);
  }
  return s.ok;
}

// ---- criterion 6: the trace form is closed ----

bool criterion_6(Suite& s) {
  GeometricModel omega = omega_model();
  s.check("module map identity on the omega fixture", module_map_check(omega));
  {
    GeometricModel sl3 = tensor_model(sl_of(3), exterior_square_algebra());
    s.check("module map identity on the sl3 tensor fixture", module_map_check(sl3));
  }

  DTauReport dt = dtau(omega);
  s.check("chain-level facts behind the composite (omega fixture)", dt.checks);
  bool bottom = false;
  for (const auto& n : dt.checks.passed)
    bottom = bottom || n == "bottom arrows compose to zero";
  s.check("bottom arrows compose to zero", bottom);
  s.check("d(tau) = 0 via the composite (omega fixture)", dt.composite_zero);
  s.check("d(tau) = 0 via the expansion oracle (omega fixture)", dt.oracle_zero);
  s.check("both routes agree (omega fixture)", dt.agree);

  bool alt = true;
  for (int i = 0; i < dt.form.h1; ++i)
    for (int j = 0; j < dt.form.h1; ++j) {
      Vec neg = dt.form.value[j][i];
      for (auto& c : neg) c = -c;
      alt = alt && dt.form.value[i][j] == neg;
    }
  s.check("tau is alternating", alt);

  std::mt19937 rng(12345);
  bool fuzz_ok = true;
  int produced = 0;
  while (produced < 20) {
    GeometricModel gm = random_model(rng, produced % 2 == 1);
    if (!validate_geometric_model(gm).ok()) continue;
    ++produced;
    s.check("module map identity on fuzzed model " + std::to_string(produced),
            module_map_check(gm));
    DTauReport d = dtau(gm);
    fuzz_ok = fuzz_ok && d.checks.ok() && d.composite_zero && d.oracle_zero && d.agree;
  }
  s.check("d(tau) = 0 both ways on 20 fuzzed invariant-pairing models", fuzz_ok);

  NondegeneracyReport nd = nondegeneracy(eta_scalar_form(dt.form, Vec{1}));
  s.check("scalar trace form nondegenerate on the symplectic fixture",
          nd.nondegenerate && nd.det != 0, "det " + to_string(nd.det));
  s.check("Pfaffian squares to the determinant", nd.even && nd.pfaffian * nd.pfaffian == nd.det);
  return s.ok;
}

// ---- criterion 7: determinism ----

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(DEFCALC_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

bool criterion_7(Suite& s) {
  const std::string dir = DEFCALC_MODEL_DIR;
  const std::vector<std::string> cmds = {
      "validate --model " + dir + "/sl2.model",
      "cohomology --model " + dir + "/sl2_omega.model",
      "enveloping --model " + dir + "/sl2.model --m 2",
      "artin --model " + dir + "/cx3_rank2.model",
      "cartan --model " + dir + "/cxy3.model",
      "deform --model " + dir + "/abelian2.model --m 2",
      "trace-form --model " + dir + "/sl2_omega.model --eta 1"};
  for (const auto& c : cmds) {
    std::string a = run_cli(c), b = run_cli(c);
    s.check("byte-identical reruns: " + c.substr(0, c.find(' ')), !a.empty() && a == b);
  }

  // metamorphic: a random degree-preserving change of basis of the omega
  // model must leave every cohomology dimension and every verdict unchanged
  GeometricModel gm = omega_model();
  int n = gm.L.dim();
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coef(-1, 1);
  Mat P, Pinv;
  while (true) {
    P = Mat::identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (r != c && gm.L.degs[r] == gm.L.degs[c] && rng() % 3 == 0)
          P.at(r, c) = coef(rng);
    auto inv = inverse(P);
    if (inv) {
      Pinv = *inv;
      break;
    }
  }
  GeometricModel tr = gm;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec acc(n, 0), pacc(gm.A.dim(), 0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (P.at(a, i) == 0 || P.at(b, j) == 0) continue;
          Q c = P.at(a, i) * P.at(b, j);
          for (int k = 0; k < n; ++k) acc[k] += c * gm.L.bracket[a][b][k];
          for (int k = 0; k < gm.A.dim(); ++k) pacc[k] += c * gm.pairing[a][b][k];
        }
      tr.L.bracket[i][j] = Pinv.apply(acc);
      tr.pairing[i][j] = pacc;
    }
  tr.L.d = Pinv * gm.L.d * P;
  s.check("transformed model is still a valid geometric model",
          validate_geometric_model(tr));
  s.check("cohomology dimensions invariant under change of basis",
          graded_cohomology_dims(gm.L.degs, gm.L.d) ==
              graded_cohomology_dims(tr.L.degs, tr.L.d));
  DTauReport d0 = dtau(gm), d1 = dtau(tr);
  s.check("trace-form verdicts invariant under change of basis",
          d0.form.h1 == d1.form.h1 && d0.form.h2 == d1.form.h2 &&
              d0.obstructed == d1.obstructed && d0.checks.ok() == d1.checks.ok() &&
              d0.composite_zero == d1.composite_zero &&
              d0.oracle_zero == d1.oracle_zero && d0.agree == d1.agree);
  // and on the Lie side: deformation-ring data of sl2 under a random basis
  MatrixLie sl2 = sl2_standard();
  DGLA L0 = DGLA::of(sl2.g);
  Mat Q3, Q3inv;
  while (true) {
    Q3 = Mat(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) Q3.at(r, c) = coef(rng);
    auto inv = inverse(Q3);
    if (inv) {
      Q3inv = *inv;
      break;
    }
  }
  DGLA L1 = L0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec acc(3, 0);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          Q c = Q3.at(a, i) * Q3.at(b, j);
          if (c == 0) continue;
          for (int k = 0; k < 3; ++k) acc[k] += c * L0.bracket[a][b][k];
        }
      L1.bracket[i][j] = Q3inv.apply(acc);
    }
  DeformationRing r0 = deformation_ring(jacobi(L0, 2));
  DeformationRing r1 = deformation_ring(jacobi(L1, 2));
  Obstruction o0 = obstruction(L0), o1 = obstruction(L1);
  s.check("deformation-ring invariants unchanged under change of basis",
          r0.vdim == r1.vdim && r0.ring.dim == r1.ring.dim && o0.h1 == o1.h1 &&
              o0.h2 == o1.h2 && o0.nonzero == o1.nonzero);
  return s.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1..7>\n";
    return 2;
  }
  int which = std::atoi(argv[1]);
  auto start = std::chrono::steady_clock::now();
  Suite s;
  bool ok = false;
  switch (which) {
    case 1: ok = criterion_1(s); break;
    case 2: ok = criterion_2(s); break;
    case 3: ok = criterion_3(s); break;
    case 4: ok = criterion_4(s); break;
    case 5: ok = criterion_5(s); break;
    case 6: ok = criterion_6(s); break;
    case 7: ok = criterion_7(s); break;
    default:
      std::cerr << "usage: acceptance <criterion 1..7>\n";
      return 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << "criterion " << which << ": " << (ok ? "PASS" : "FAIL") << " (" << ms
            << " ms)\n";
  return ok ? 0 : 1;
}
