// defcalc: model-file ingestion, subcommand dispatch, machine-readable reports.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "defcalc/cartan.hpp"
#include "defcalc/enveloping.hpp"
#include "defcalc/jacobi.hpp"
#include "defcalc/model_io.hpp"
#include "defcalc/report.hpp"
#include "defcalc/traceform.hpp"

using namespace defcalc;

namespace {

struct Options {
  std::string command;
  std::string model_path;
  std::string model_bytes;
  ModelFile model;
  int m = -1;  // -1 = per-command default
  std::vector<Q> eta;
  bool has_eta = false;
  std::string json_path;
};

// ---- helpers ----

ChainComplex graded_complex(const Degs& degs, const Mat& d) {
  std::map<int, std::vector<int>> pos;
  for (size_t i = 0; i < degs.size(); ++i) pos[degs[i]].push_back(int(i));
  ChainComplex c;
  for (auto& [k, p] : pos) c.dims[k] = int(p.size());
  for (auto& [k, p] : pos) {
    auto up = pos.find(k + 1);
    if (up == pos.end()) continue;
    Mat blk(int(up->second.size()), int(p.size()));
    for (size_t r = 0; r < up->second.size(); ++r)
      for (size_t cidx = 0; cidx < p.size(); ++cidx)
        blk.at(int(r), int(cidx)) = d.at(up->second[r], p[cidx]);
    c.d[k] = blk;
  }
  return c;
}

SModule adapted_module(const AdaptedArtin& ad, const std::vector<Mat>& raw) {
  SModule e;
  e.dim = raw.empty() ? 0 : raw[0].rows();
  for (int a = 0; a < ad.dim(); ++a) {
    Mat acc(e.dim, e.dim);
    for (int o = 0; o < ad.dim(); ++o)
      if (ad.from_adapted.at(o, a) != 0)
        acc = acc + raw[o].scaled(ad.from_adapted.at(o, a));
    e.action.push_back(acc);
  }
  return e;
}

OrderedJson cohomology_dims(const Degs& degs, const Mat& d) {
  ChainComplex c = graded_complex(degs, d);
  auto h = cohomology(c);
  OrderedJson out = OrderedJson::object();
  for (auto& [k, hk] : h)
    if (hk.dim > 0) out[std::to_string(k)] = hk.dim;
  return out;
}

// ---- subcommands ----

void run_validate(const Options& o, Report& rep) {
  const ModelFile& m = o.model;
  OrderedJson dims = OrderedJson::object();
  if (m.lie_algebra) {
    dims["lie_algebra"] = m.lie_algebra->dim;
    rep.add("lie_algebra", validate_lie(*m.lie_algebra));
  }
  if (m.representation) {
    dims["representation"] = m.representation->target_dim;
    rep.add("representation", validate_rep(*m.lie_algebra, *m.representation));
  }
  if (m.dgla || m.dg_algebra || !m.pairing.empty() || m.dg_module) {
    GeometricModel gm = m.geometric();
    dims["dgla"] = gm.L.dim();
    dims["dg_algebra"] = gm.A.dim();
    if (gm.M) dims["dg_module"] = gm.M->dim();
    rep.add("geometric model", validate_geometric_model(gm));
  }
  if (m.artin_algebra) {
    dims["artin_algebra"] = m.artin_algebra->dim;
    ArtinInfo info = artin_validate(*m.artin_algebra);
    rep.add("artin_algebra", info.report);
    if (info.report.ok()) dims["nilpotency"] = info.nilpotency;
  }
  if (m.module_over_artin) {
    AdaptedArtin ad = adapt(*m.artin_algebra);
    SModule e = adapted_module(ad, *m.module_over_artin);
    dims["module_over_artin"] = e.dim;
    rep.add("module_over_artin", validate_smodule(ad, e));
  }
  rep.results["dims"] = dims;
}

void run_cohomology(const Options& o, Report& rep) {
  DGLA L = o.model.dgla_view();
  ChainComplex cl = graded_complex(L.degs, L.d);
  rep.add("lie differential squares to zero", !cl.validate().has_value(),
          cl.validate().value_or(""));
  rep.results["lie"] = cohomology_dims(L.degs, L.d);
  if (o.model.dg_algebra) {
    const DGAlgebra& A = *o.model.dg_algebra;
    ChainComplex ca = graded_complex(A.degs, A.d);
    rep.add("algebra differential squares to zero", !ca.validate().has_value(),
            ca.validate().value_or(""));
    rep.results["algebra"] = cohomology_dims(A.degs, A.d);
  }
}

void run_enveloping(const Options& o, Report& rep) {
  if (!o.model.lie_algebra || !o.model.representation)
    throw ModelError(0, 0,
                     "enveloping requires [lie_algebra] and [representation] sections");
  const LieModel& g = *o.model.lie_algebra;
  const Representation& e = *o.model.representation;
  int m = o.m < 0 ? 3 : o.m;
  PbwAlgebra u = pbw(g, m);

  OrderedJson dims = OrderedJson::array();
  std::vector<int> per_order(m + 1, 0);
  for (const auto& w : u.basis) per_order[int(w.size())]++;
  long long sym_total = 0;
  for (int i = 0; i <= m; ++i) {
    // dim S^i(g) = C(g.dim + i - 1, i)
    long long b = 1;
    for (int k = 1; k <= i; ++k) b = b * (g.dim + k - 1) / k;
    sym_total += b;
    dims.push_back(per_order[i]);
  }
  rep.results["pbw_dims_per_order"] = dims;
  rep.results["pbw_dim_total"] = int(u.basis.size());
  rep.add("enveloping dimension matches the symmetric algebra",
          sym_total == int(u.basis.size()),
          "pbw " + std::to_string(u.basis.size()) + " vs sym " +
              std::to_string(sym_total));

  bool hom = true;
  std::string witness;
  for (int i = 0; i < g.dim && hom; ++i)
    for (int j = 0; j < g.dim && hom; ++j) {
      Vec xi(int(u.basis.size()), 0), xj(int(u.basis.size()), 0);
      xi[u.index.at({i})] = 1;
      xj[u.index.at({j})] = 1;
      Vec br(int(u.basis.size()), 0);
      for (int k = 0; k < g.dim; ++k) br[u.index.at({k})] = g.brk(i, j)[k];
      GradedOperator lhs = rho(u, e, br, m);
      GradedOperator a = rho(u, e, xi, m), b = rho(u, e, xj, m);
      GradedOperator comm = a * b + (b * a).scaled(-1);
      if (!(lhs + comm.scaled(-1)).is_zero()) {
        hom = false;
        witness = "generators (" + g.label(i) + ", " + g.label(j) + ")";
      }
    }
  rep.add("rho is a Lie algebra homomorphism", hom, witness);

  std::vector<Vec> rows;
  int cols = 0;
  for (size_t k = 0; k < u.basis.size(); ++k) {
    Vec uk(int(u.basis.size()), 0);
    uk[k] = 1;
    Vec f = flatten(rho(u, e, uk, m));
    cols = int(f.size());
    rows.push_back(f);
  }
  int r = rank_of(Mat::from_rows(rows, cols));
  rep.results["rho_rank"] = r;
  rep.add("rho is injective on the truncated enveloping algebra",
          r == int(u.basis.size()),
          "rank " + std::to_string(r) + " of " + std::to_string(u.basis.size()));
}

void run_artin(const Options& o, Report& rep) {
  if (!o.model.artin_algebra)
    throw ModelError(0, 0, "artin requires an [artin_algebra] section");
  ArtinInfo info = artin_validate(*o.model.artin_algebra);
  rep.add("artin_algebra", info.report);
  if (!info.report.ok()) return;
  AdaptedArtin ad = adapt(*o.model.artin_algebra);
  SModule e = o.model.module_over_artin
                  ? adapted_module(ad, *o.model.module_over_artin)
                  : SModule::free_module(ad, 1);
  int top = o.m < 0 ? ad.nilpotency - 1 : o.m;
  rep.results["nilpotency"] = ad.nilpotency;
  rep.results["module_dim"] = e.dim;
  OrderedJson orders = OrderedJson::array();
  // the duality maps compare E with order-i operators; below nilpotency - 1
  // they cannot see all of a free module, so start where the tower is full
  for (int i = ad.nilpotency - 1; i <= top; ++i) {
    MOSModule g = transpose_module(ad, e, i);
    QuasiScalar c = quasi_scalar(ad, g, i);
    Mat dd = double_dual_map(ad, e, g, c);
    OrderedJson entry = OrderedJson::object();
    entry["m"] = i;
    OrderedJson tower = OrderedJson::array();
    for (int gd : g.gdim) tower.push_back(gd);
    entry["tower_dims"] = tower;
    entry["quasi_scalar_dim"] = c.dim;
    entry["double_dual"] = json_of(dd);
    auto inv = inverse(dd);
    bool dd_iso = c.dim == e.dim && inv.has_value();
    if (inv) entry["double_dual_inverse"] = json_of(*inv);
    rep.add("double dual map is an isomorphism (m=" + std::to_string(i) + ")", dd_iso,
            "quasi-scalar dim " + std::to_string(c.dim) + ", module dim " +
                std::to_string(e.dim));

    SModule cmod{c.dim, c.action};
    MOSModule bmc = transpose_module(ad, cmod, i);
    Mat ev = evaluation_map(ad, c, bmc, g);
    auto evinv = inverse(ev);
    entry["evaluation"] = json_of(ev);
    if (evinv) entry["evaluation_inverse"] = json_of(*evinv);
    rep.add("evaluation map is an isomorphism (m=" + std::to_string(i) + ")",
            evinv.has_value(),
            "rank " + std::to_string(rank_of(ev)) + " of " + std::to_string(ev.rows()));
    orders.push_back(entry);
  }
  rep.results["duality"] = orders;
}

void run_cartan(const Options& o, Report& rep) {
  if (!o.model.artin_algebra)
    throw ModelError(0, 0, "cartan requires an [artin_algebra] section");
  const ArtinAlgebra& S = *o.model.artin_algebra;
  int vars = -1, order = -1;
  for (int v = 1; v <= 3 && vars < 0; ++v)
    for (int k = 1; k <= 6 && vars < 0; ++k) {
      ArtinAlgebra t = ArtinAlgebra::truncated_poly(v, k);
      if (t.dim == S.dim && t.unit == S.unit && t.product == S.product) {
        vars = v;
        order = k;
      }
    }
  if (vars < 0)
    throw ModelError(0, 0, "cartan requires a truncated polynomial algebra fixture");
  rep.results["vars"] = vars;
  rep.results["order"] = order;
  LieRinehartModel m = truncated_poly_model(vars, order);
  int top = o.m < 0 ? 2 : o.m;
  rep.results["top_degree"] = top;
  FormSpace f = form_space(m, top);
  OrderedJson fd = OrderedJson::array();
  for (int i = 0; i <= top; ++i) fd.push_back(int(f.gens[i].size()) * m.a.dim);
  rep.results["form_dims"] = fd;
  rep.add("", cartan_report(m, top));
}

void run_deform(const Options& o, Report& rep) {
  DGLA L = o.model.dgla_view();
  int m = o.m < 0 ? 2 : o.m;
  JacobiComplex jc = jacobi(L, m);
  OrderedJson layers = OrderedJson::array();
  for (int i = 1; i <= m; ++i) layers.push_back(jc.block_dim(i));
  rep.results["layer_dims"] = layers;
  auto err = jc.total.cx.validate();
  rep.add("total differential squares to zero", !err.has_value(), err.value_or(""));

  DeformationRing dr = deformation_ring(jc);
  rep.results["v_dim"] = dr.vdim;
  rep.results["ring_dim"] = dr.ring.dim;
  OrderedJson table = OrderedJson::array();
  for (int a = 0; a < dr.ring.dim; ++a) {
    OrderedJson row = OrderedJson::array();
    for (int b = 0; b < dr.ring.dim; ++b) row.push_back(json_of(dr.ring.product[a][b]));
    table.push_back(row);
  }
  rep.results["ring_table"] = table;
  ArtinInfo info = artin_validate(dr.ring);
  rep.add("deformation ring", info.report);
  if (info.report.ok()) {
    rep.results["ring_nilpotency"] = info.nilpotency;
    rep.add("maximal ideal power m+1 vanishes", info.nilpotency <= m + 1,
            "nilpotency " + std::to_string(info.nilpotency));
  }

  Obstruction ob = obstruction(L);
  rep.results["h1"] = ob.h1;
  rep.results["h2"] = ob.h2;
  rep.results["obstruction_matrix"] = json_of(ob.quad);
  rep.results["obstruction_nonzero"] = ob.nonzero;

  std::optional<DGModule> E = o.model.dg_module;
  if (!E && o.model.representation) E = DGModule::of(*o.model.representation);
  if (E) {
    PoincareModule pm = poincare_module(L, *E, m);
    rep.results["poincare_dim"] = pm.p.dim;
    rep.results["poincare_fiber"] = pm.fiber;
    rep.results["poincare_free"] = pm.free;
    rep.add("poincare module fiber matches rank", pm.free,
            "dim " + std::to_string(pm.p.dim) + ", fiber " + std::to_string(pm.fiber) +
                ", ring dim " + std::to_string(pm.r.ring.dim));
  }
}

void run_trace_form(const Options& o, Report& rep) {
  GeometricModel gm = o.model.geometric();
  TraceForm t;
  try {
    t = tau(gm);
  } catch (const std::invalid_argument& ex) {
    rep.add("pairing is invariant", false, ex.what());
    return;
  }
  rep.add("pairing is invariant", true);
  rep.results["h1"] = t.h1;
  rep.results["h2"] = t.h2;
  OrderedJson tm = OrderedJson::array();
  for (int i = 0; i < t.h1; ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 0; j < t.h1; ++j) row.push_back(json_of(t.value[i][j]));
    tm.push_back(row);
  }
  rep.results["tau"] = tm;

  bool alt = true;
  for (int i = 0; i < t.h1 && alt; ++i)
    for (int j = 0; j < t.h1 && alt; ++j) {
      Vec neg = t.value[j][i];
      for (auto& c : neg) c = -c;
      alt = t.value[i][j] == neg;
    }
  rep.add("tau is alternating", alt);

  rep.add("module map", module_map_check(gm));

  DTauReport dt = dtau(gm);
  rep.results["obstructed"] = dt.obstructed;
  rep.results["dtau"] = json_of(dt.composite);
  rep.add("dtau chain-level facts", dt.checks);
  rep.add("dtau composite vanishes", dt.composite_zero);
  rep.add("dtau oracle vanishes", dt.oracle_zero);
  rep.add("dtau routes agree", dt.agree);

  if (o.has_eta) {
    if (int(o.eta.size()) != t.h2)
      throw ModelError(0, 0, "--eta needs " + std::to_string(t.h2) +
                                 " coordinates for this model");
    Mat scalar = eta_scalar_form(t, o.eta);
    NondegeneracyReport nd = nondegeneracy(scalar);
    rep.results["scalar_form"] = json_of(scalar);
    rep.results["determinant"] = to_string(nd.det);
    if (nd.even) rep.results["pfaffian"] = to_string(nd.pfaffian);
    rep.add("scalar form is nondegenerate", nd.nondegenerate,
            "determinant " + to_string(nd.det));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact deformation calculator"};
  app.require_subcommand(1);
  Options o;
  std::string eta_arg;
  const std::vector<std::string> commands = {"validate", "cohomology", "enveloping",
                                             "artin",    "cartan",     "deform",
                                             "trace-form"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--model", o.model_path, "model file")->required();
    sub->add_option("--m", o.m, "order / truncation bound");
    sub->add_option("--eta", eta_arg, "comma-separated H^2 functional coordinates");
    sub->add_option("--json", o.json_path, "write the JSON report to this path");
    sub->callback([&o, name] { o.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!eta_arg.empty()) {
      o.has_eta = true;
      std::istringstream in(eta_arg);
      std::string piece;
      while (std::getline(in, piece, ',')) {
        auto c = parse_scalar(piece);
        if (!c) throw ModelError(0, 0, "invalid --eta coordinate '" + piece + "'");
        o.eta.push_back(*c);
      }
    }
    {
      std::ifstream in(o.model_path, std::ios::binary);
      if (!in) throw ModelError(0, 0, "cannot read model file '" + o.model_path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      o.model_bytes = buf.str();
    }
    o.model = parse_model(o.model_bytes);

    Report rep;
    rep.command = o.command;
    rep.digest = fnv1a_digest(o.model_bytes + "\n" + o.command + " --m " +
                              std::to_string(o.m) + " --eta " + eta_arg);
    if (o.command == "validate") run_validate(o, rep);
    else if (o.command == "cohomology") run_cohomology(o, rep);
    else if (o.command == "enveloping") run_enveloping(o, rep);
    else if (o.command == "artin") run_artin(o, rep);
    else if (o.command == "cartan") run_cartan(o, rep);
    else if (o.command == "deform") run_deform(o, rep);
    else if (o.command == "trace-form") run_trace_form(o, rep);

    std::string json = rep.to_json().dump(2) + "\n";
    std::cout << json << "\n" << rep.summary();
    if (!o.json_path.empty()) {
      std::ofstream out(o.json_path, std::ios::binary);
      if (!out) throw ModelError(0, 0, "cannot write '" + o.json_path + "'");
      out << json;
    }
    return rep.all_pass() ? 0 : 1;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
