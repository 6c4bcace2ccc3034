#include "defcalc/model_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace defcalc {

ModelError::ModelError(int line, int col, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", col " +
                                        std::to_string(col) + ": " + what
                                  : what),
      line(line),
      col(col) {}

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based start column
};

std::vector<Token> tokenize(const std::string& raw) {
  std::vector<Token> ts;
  std::string line = raw;
  auto hash = line.find('#');
  if (hash != std::string::npos) line = line.substr(0, hash);
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    ts.push_back({line.substr(i, j - i), int(i) + 1});
    i = j;
  }
  return ts;
}

struct Basis {
  std::vector<std::string> labels;
  std::map<std::string, int> index;

  int dim() const { return int(labels.size()); }
  int at(const Token& t, int line) const {
    auto it = index.find(t.text);
    if (it == index.end())
      throw ModelError(line, t.col, "undeclared label '" + t.text + "'");
    return it->second;
  }
};

// one parsed `key a b = terms` style line, terms resolved against a basis
Vec parse_terms(const std::vector<Token>& ts, size_t from, const Basis& target,
                int line) {
  if (from >= ts.size())
    throw ModelError(line, ts.empty() ? 1 : ts.back().col, "empty right-hand side");
  Vec v(target.dim(), 0);
  if (ts.size() == from + 1 && ts[from].text == "0") return v;
  for (size_t i = from; i < ts.size(); i += 2) {
    auto c = parse_scalar(ts[i].text);
    if (!c) throw ModelError(line, ts[i].col, "invalid scalar '" + ts[i].text + "'");
    if (i + 1 >= ts.size())
      throw ModelError(line, ts[i].col, "expected label after scalar '" + ts[i].text + "'");
    v[target.at(ts[i + 1], line)] += *c;
  }
  return v;
}

int find_eq(const std::vector<Token>& ts, size_t pos, int line) {
  if (pos >= ts.size() || ts[pos].text != "=")
    throw ModelError(line, pos < ts.size() ? ts[pos].col : ts.back().col + 1,
                     "expected '='");
  return int(pos);
}

int parse_int(const Token& t, int line) {
  try {
    size_t used = 0;
    int n = std::stoi(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return n;
  } catch (const std::exception&) {
    throw ModelError(line, t.col, "expected integer, got '" + t.text + "'");
  }
}

// accumulated raw data of one section before the symmetry/unit fills
struct RawSection {
  std::string name;
  int header_line = 0;
  Basis basis;
  bool has_basis = false;
  std::map<int, int> degree;          // defaults to 0
  std::optional<int> unit;
  // binary tables keyed by (a, b); `d` keyed by (a, -1)
  std::map<std::pair<int, int>, Vec> table;   // bracket / product / pair
  std::map<std::pair<int, int>, Vec> action;  // (outside index, own index)
  std::map<int, Vec> d;

  int deg(int i) const {
    auto it = degree.find(i);
    return it == degree.end() ? 0 : it->second;
  }
};

const std::vector<std::string> kSectionOrder = {
    "lie_algebra", "representation", "dgla",          "dg_algebra",
    "pairing",     "dg_module",      "artin_algebra", "module_over_artin"};

// keys legal per section, besides `basis`
bool key_allowed(const std::string& section, const std::string& key) {
  auto any = [&](std::initializer_list<const char*> ks) {
    for (auto* k : ks)
      if (key == k) return true;
    return false;
  };
  if (section == "lie_algebra") return any({"bracket"});
  if (section == "representation") return any({"action"});
  if (section == "dgla") return any({"degree", "bracket", "d"});
  if (section == "dg_algebra") return any({"degree", "unit", "product", "d"});
  if (section == "pairing") return any({"pair"});
  if (section == "dg_module") return any({"degree", "action", "d"});
  if (section == "artin_algebra") return any({"unit", "product"});
  if (section == "module_over_artin") return any({"action"});
  return false;
}

Vec unit_vec_at(int n, int i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

ModelFile parse_model(const std::string& text) {
  std::vector<RawSection> sections;
  RawSection* cur = nullptr;
  // the basis a key's labels refer to, when it is not the section's own
  auto section_named = [&](const std::string& n) -> RawSection* {
    for (auto& s : sections)
      if (s.name == n) return &s;
    return nullptr;
  };

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto ts = tokenize(raw);
    if (ts.empty()) continue;
    const Token& head = ts[0];
    if (head.text.front() == '[') {
      if (head.text.back() != ']' || ts.size() != 1)
        throw ModelError(line, head.col, "malformed section header");
      std::string name = head.text.substr(1, head.text.size() - 2);
      bool known = false;
      for (auto& k : kSectionOrder) known = known || k == name;
      if (!known) throw ModelError(line, head.col, "unknown section '" + name + "'");
      if (section_named(name))
        throw ModelError(line, head.col, "duplicate section '" + name + "'");
      sections.push_back({name, line});
      cur = &sections.back();
      continue;
    }
    if (!cur) throw ModelError(line, head.col, "expected section header");

    if (head.text == "basis") {
      if (cur->has_basis)
        throw ModelError(line, head.col, "duplicate basis declaration");
      for (size_t i = 1; i < ts.size(); ++i) {
        if (cur->basis.index.count(ts[i].text))
          throw ModelError(line, ts[i].col, "duplicate label '" + ts[i].text + "'");
        cur->basis.index[ts[i].text] = cur->basis.dim();
        cur->basis.labels.push_back(ts[i].text);
      }
      cur->has_basis = true;
      continue;
    }
    if (!key_allowed(cur->name, head.text))
      throw ModelError(line, head.col,
                       "unknown key '" + head.text + "' in [" + cur->name + "]");
    bool own_basis_needed = cur->name != "pairing";
    if (own_basis_needed && !cur->has_basis)
      throw ModelError(line, head.col, "basis must be declared before '" + head.text + "'");

    if (head.text == "degree") {
      if (ts.size() != 4) throw ModelError(line, head.col, "expected: degree LABEL = N");
      find_eq(ts, 2, line);
      cur->degree[cur->basis.at(ts[1], line)] = parse_int(ts[3], line);
      continue;
    }
    if (head.text == "unit") {
      if (ts.size() != 3) throw ModelError(line, head.col, "expected: unit = LABEL");
      find_eq(ts, 1, line);
      cur->unit = cur->basis.at(ts[2], line);
      continue;
    }
    if (head.text == "d") {
      if (ts.size() < 3) throw ModelError(line, head.col, "expected: d LABEL = TERMS");
      find_eq(ts, 2, line);
      int a = cur->basis.at(ts[1], line);
      if (cur->d.count(a))
        throw ModelError(line, ts[1].col, "duplicate entry for '" + ts[1].text + "'");
      cur->d[a] = parse_terms(ts, 3, cur->basis, line);
      continue;
    }
    if (head.text == "bracket" || head.text == "product" || head.text == "pair") {
      if (ts.size() < 4)
        throw ModelError(line, head.col, "expected: " + head.text + " A B = TERMS");
      find_eq(ts, 3, line);
      const Basis* own = &cur->basis;
      const Basis* target = own;
      if (cur->name == "pairing") {
        RawSection* dgla = section_named("dgla");
        RawSection* alg = section_named("dg_algebra");
        if (!dgla || !alg)
          throw ModelError(line, head.col,
                           "[pairing] requires [dgla] and [dg_algebra] sections first");
        own = &dgla->basis;
        target = &alg->basis;
      }
      int a = own->at(ts[1], line), b = own->at(ts[2], line);
      if (cur->table.count({a, b}))
        throw ModelError(line, ts[1].col, "duplicate entry for (" + ts[1].text + ", " +
                                              ts[2].text + ")");
      cur->table[{a, b}] = parse_terms(ts, 4, *target, line);
      continue;
    }
    if (head.text == "action") {
      if (ts.size() < 4) throw ModelError(line, head.col, "expected: action X V = TERMS");
      find_eq(ts, 3, line);
      std::string outer = cur->name == "representation" ? "lie_algebra"
                          : cur->name == "dg_module"    ? "dgla"
                                                        : "artin_algebra";
      RawSection* os = section_named(outer);
      if (!os)
        throw ModelError(line, head.col,
                         "[" + cur->name + "] requires [" + outer + "] section first");
      int x = os->basis.at(ts[1], line);
      int v = cur->basis.at(ts[2], line);
      if (cur->action.count({x, v}))
        throw ModelError(line, ts[1].col, "duplicate entry for (" + ts[1].text + ", " +
                                              ts[2].text + ")");
      cur->action[{x, v}] = parse_terms(ts, 4, cur->basis, line);
      continue;
    }
    throw ModelError(line, head.col, "unknown key '" + head.text + "'");
  }

  // ---- assembly with symmetry/unit fills ----
  ModelFile m;
  for (const auto& s : sections) {
    int n = s.basis.dim();
    if (s.name == "lie_algebra") {
      LieModel g;
      g.dim = n;
      g.labels = s.basis.labels;
      g.bracket.assign(n, std::vector<Vec>(n, Vec(n, 0)));
      for (auto& [ab, v] : s.table) g.bracket[ab.first][ab.second] = v;
      for (auto& [ab, v] : s.table)
        if (!s.table.count({ab.second, ab.first})) {
          Vec neg = v;
          for (auto& c : neg) c = -c;
          g.bracket[ab.second][ab.first] = neg;
        }
      m.lie_algebra = g;
    } else if (s.name == "representation") {
      if (!m.lie_algebra)
        throw ModelError(s.header_line, 1,
                         "[representation] requires [lie_algebra] section first");
      Representation r;
      r.target_dim = n;
      r.action.assign(m.lie_algebra->dim, Mat(n, n));
      for (auto& [xv, v] : s.action)
        for (int i = 0; i < n; ++i) r.action[xv.first].at(i, xv.second) = v[i];
      m.representation = r;
      m.representation_labels = s.basis.labels;
    } else if (s.name == "dgla") {
      DGLA L;
      L.degs.resize(n, 0);
      for (int i = 0; i < n; ++i) L.degs[i] = s.deg(i);
      L.bracket.assign(n, std::vector<Vec>(n, Vec(n, 0)));
      for (auto& [ab, v] : s.table) L.bracket[ab.first][ab.second] = v;
      for (auto& [ab, v] : s.table)
        if (ab.first != ab.second && !s.table.count({ab.second, ab.first})) {
          Q sign = (L.degs[ab.first] * L.degs[ab.second]) % 2 ? Q(1) : Q(-1);
          Vec w = v;
          for (auto& c : w) c *= sign;
          L.bracket[ab.second][ab.first] = w;
        }
      L.d = Mat(n, n);
      for (auto& [a, v] : s.d)
        for (int i = 0; i < n; ++i) L.d.at(i, a) = v[i];
      m.dgla = L;
      m.dgla_labels = s.basis.labels;
    } else if (s.name == "dg_algebra") {
      if (!s.unit)
        throw ModelError(s.header_line, 1, "[dg_algebra] requires a unit declaration");
      DGAlgebra A;
      A.degs.resize(n, 0);
      for (int i = 0; i < n; ++i) A.degs[i] = s.deg(i);
      A.unit = *s.unit;
      A.product.assign(n, std::vector<Vec>(n, Vec(n, 0)));
      for (int j = 0; j < n; ++j) {
        A.product[A.unit][j] = unit_vec_at(n, j);
        A.product[j][A.unit] = unit_vec_at(n, j);
      }
      for (auto& [ab, v] : s.table) A.product[ab.first][ab.second] = v;
      for (auto& [ab, v] : s.table)
        if (ab.first != ab.second && !s.table.count({ab.second, ab.first})) {
          Q sign = (A.degs[ab.first] * A.degs[ab.second]) % 2 ? Q(-1) : Q(1);
          Vec w = v;
          for (auto& c : w) c *= sign;
          A.product[ab.second][ab.first] = w;
        }
      A.d = Mat(n, n);
      for (auto& [a, v] : s.d)
        for (int i = 0; i < n; ++i) A.d.at(i, a) = v[i];
      m.dg_algebra = A;
      m.dg_algebra_labels = s.basis.labels;
    } else if (s.name == "pairing") {
      if (!m.dgla || !m.dg_algebra)
        throw ModelError(s.header_line, 1,
                         "[pairing] requires [dgla] and [dg_algebra] sections first");
      int ln = m.dgla->dim(), an = m.dg_algebra->dim();
      m.pairing.assign(ln, std::vector<Vec>(ln, Vec(an, 0)));
      for (auto& [ab, v] : s.table) m.pairing[ab.first][ab.second] = v;
      for (auto& [ab, v] : s.table)
        if (ab.first != ab.second && !s.table.count({ab.second, ab.first})) {
          Q sign =
              (m.dgla->degs[ab.first] * m.dgla->degs[ab.second]) % 2 ? Q(-1) : Q(1);
          Vec w = v;
          for (auto& c : w) c *= sign;
          m.pairing[ab.second][ab.first] = w;
        }
    } else if (s.name == "dg_module") {
      if (!m.dgla)
        throw ModelError(s.header_line, 1, "[dg_module] requires [dgla] section first");
      DGModule M;
      M.degs.resize(n, 0);
      for (int i = 0; i < n; ++i) M.degs[i] = s.deg(i);
      M.action.assign(m.dgla->dim(), Mat(n, n));
      for (auto& [xv, v] : s.action)
        for (int i = 0; i < n; ++i) M.action[xv.first].at(i, xv.second) = v[i];
      M.d = Mat(n, n);
      for (auto& [a, v] : s.d)
        for (int i = 0; i < n; ++i) M.d.at(i, a) = v[i];
      m.dg_module = M;
      m.dg_module_labels = s.basis.labels;
    } else if (s.name == "artin_algebra") {
      if (!s.unit)
        throw ModelError(s.header_line, 1, "[artin_algebra] requires a unit declaration");
      ArtinAlgebra S;
      S.dim = n;
      S.unit = *s.unit;
      S.labels = s.basis.labels;
      S.product.assign(n, std::vector<Vec>(n, Vec(n, 0)));
      for (int j = 0; j < n; ++j) {
        S.product[S.unit][j] = unit_vec_at(n, j);
        S.product[j][S.unit] = unit_vec_at(n, j);
      }
      for (auto& [ab, v] : s.table) S.product[ab.first][ab.second] = v;
      for (auto& [ab, v] : s.table)
        if (ab.first != ab.second && !s.table.count({ab.second, ab.first}))
          S.product[ab.second][ab.first] = v;
      m.artin_algebra = S;
    } else if (s.name == "module_over_artin") {
      if (!m.artin_algebra)
        throw ModelError(s.header_line, 1,
                         "[module_over_artin] requires [artin_algebra] section first");
      std::vector<Mat> acts(m.artin_algebra->dim, Mat(n, n));
      acts[m.artin_algebra->unit] = Mat::identity(n);
      for (auto& [xv, v] : s.action)
        for (int i = 0; i < n; ++i) acts[xv.first].at(i, xv.second) = v[i];
      m.module_over_artin = acts;
      m.module_labels = s.basis.labels;
    }
  }
  return m;
}

namespace {

std::string terms_str(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += to_string(v[i]) + " " + labels[i];
  }
  return out.empty() ? "0" : out;
}

void emit_basis(std::string& out, const std::vector<std::string>& labels) {
  out += "basis";
  for (auto& l : labels) out += " " + l;
  out += "\n";
}

void emit_degrees(std::string& out, const Degs& degs,
                  const std::vector<std::string>& labels) {
  for (size_t i = 0; i < degs.size(); ++i)
    out += "degree " + labels[i] + " = " + std::to_string(degs[i]) + "\n";
}

void emit_d(std::string& out, const Mat& d, const std::vector<std::string>& labels) {
  for (int j = 0; j < d.cols(); ++j) {
    Vec col(d.rows(), 0);
    bool nz = false;
    for (int i = 0; i < d.rows(); ++i) {
      col[i] = d.at(i, j);
      nz = nz || col[i] != 0;
    }
    if (nz) out += "d " + labels[j] + " = " + terms_str(col, labels) + "\n";
  }
}

std::vector<std::string> fallback_labels(int n, const std::string& stem) {
  std::vector<std::string> ls;
  for (int i = 0; i < n; ++i) ls.push_back(stem + std::to_string(i));
  return ls;
}

}  // namespace

std::string serialize_model(const ModelFile& m) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += "\n";
  };

  std::vector<std::string> lie_labels, dgla_labels, alg_labels;
  if (m.lie_algebra) {
    lie_labels = m.lie_algebra->labels;
    if (int(lie_labels.size()) < m.lie_algebra->dim)
      lie_labels = fallback_labels(m.lie_algebra->dim, "x");
  }
  if (m.dgla)
    dgla_labels = m.dgla_labels.empty() ? fallback_labels(m.dgla->dim(), "x")
                                        : m.dgla_labels;
  if (m.dg_algebra)
    alg_labels = m.dg_algebra_labels.empty()
                     ? fallback_labels(m.dg_algebra->dim(), "a")
                     : m.dg_algebra_labels;

  if (m.lie_algebra) {
    const auto& g = *m.lie_algebra;
    out += "[lie_algebra]\n";
    emit_basis(out, lie_labels);
    for (int i = 0; i < g.dim; ++i)
      for (int j = i; j < g.dim; ++j) {
        bool nz = false;
        for (auto& c : g.bracket[i][j]) nz = nz || c != 0;
        if (nz)
          out += "bracket " + lie_labels[i] + " " + lie_labels[j] + " = " +
                 terms_str(g.bracket[i][j], lie_labels) + "\n";
      }
  }
  if (m.representation) {
    const auto& r = *m.representation;
    auto labels = m.representation_labels.empty()
                      ? fallback_labels(r.target_dim, "v")
                      : m.representation_labels;
    sep();
    out += "[representation]\n";
    emit_basis(out, labels);
    for (size_t x = 0; x < r.action.size(); ++x)
      for (int j = 0; j < r.target_dim; ++j) {
        Vec col(r.target_dim, 0);
        bool nz = false;
        for (int i = 0; i < r.target_dim; ++i) {
          col[i] = r.action[x].at(i, j);
          nz = nz || col[i] != 0;
        }
        if (nz)
          out += "action " + lie_labels[x] + " " + labels[j] + " = " +
                 terms_str(col, labels) + "\n";
      }
  }
  if (m.dgla) {
    const auto& L = *m.dgla;
    sep();
    out += "[dgla]\n";
    emit_basis(out, dgla_labels);
    emit_degrees(out, L.degs, dgla_labels);
    for (int i = 0; i < L.dim(); ++i)
      for (int j = i; j < L.dim(); ++j) {
        bool nz = false;
        for (auto& c : L.bracket[i][j]) nz = nz || c != 0;
        if (nz)
          out += "bracket " + dgla_labels[i] + " " + dgla_labels[j] + " = " +
                 terms_str(L.bracket[i][j], dgla_labels) + "\n";
      }
    emit_d(out, L.d, dgla_labels);
  }
  if (m.dg_algebra) {
    const auto& A = *m.dg_algebra;
    sep();
    out += "[dg_algebra]\n";
    emit_basis(out, alg_labels);
    emit_degrees(out, A.degs, alg_labels);
    out += "unit = " + alg_labels[A.unit] + "\n";
    for (int i = 0; i < A.dim(); ++i)
      for (int j = i; j < A.dim(); ++j) {
        if (i == A.unit || j == A.unit) continue;  // implied by the unit
        bool nz = false;
        for (auto& c : A.product[i][j]) nz = nz || c != 0;
        if (nz)
          out += "product " + alg_labels[i] + " " + alg_labels[j] + " = " +
                 terms_str(A.product[i][j], alg_labels) + "\n";
      }
    emit_d(out, A.d, alg_labels);
  }
  if (!m.pairing.empty()) {
    sep();
    out += "[pairing]\n";
    int n = int(m.pairing.size());
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        bool nz = false;
        for (auto& c : m.pairing[i][j]) nz = nz || c != 0;
        if (nz)
          out += "pair " + dgla_labels[i] + " " + dgla_labels[j] + " = " +
                 terms_str(m.pairing[i][j], alg_labels) + "\n";
      }
  }
  if (m.dg_module) {
    const auto& M = *m.dg_module;
    auto labels = m.dg_module_labels.empty() ? fallback_labels(M.dim(), "m")
                                             : m.dg_module_labels;
    sep();
    out += "[dg_module]\n";
    emit_basis(out, labels);
    emit_degrees(out, M.degs, labels);
    for (size_t x = 0; x < M.action.size(); ++x)
      for (int j = 0; j < M.dim(); ++j) {
        Vec col(M.dim(), 0);
        bool nz = false;
        for (int i = 0; i < M.dim(); ++i) {
          col[i] = M.action[x].at(i, j);
          nz = nz || col[i] != 0;
        }
        if (nz)
          out += "action " + dgla_labels[x] + " " + labels[j] + " = " +
                 terms_str(col, labels) + "\n";
      }
    emit_d(out, M.d, labels);
  }
  if (m.artin_algebra) {
    const auto& S = *m.artin_algebra;
    auto labels = int(S.labels.size()) < S.dim ? fallback_labels(S.dim, "s") : S.labels;
    sep();
    out += "[artin_algebra]\n";
    emit_basis(out, labels);
    out += "unit = " + labels[S.unit] + "\n";
    for (int i = 0; i < S.dim; ++i)
      for (int j = i; j < S.dim; ++j) {
        if (i == S.unit || j == S.unit) continue;
        bool nz = false;
        for (auto& c : S.product[i][j]) nz = nz || c != 0;
        if (nz)
          out += "product " + labels[i] + " " + labels[j] + " = " +
                 terms_str(S.product[i][j], labels) + "\n";
      }
    if (m.module_over_artin) {
      const auto& acts = *m.module_over_artin;
      int n = acts.empty() ? 0 : acts[0].rows();
      auto mlabels =
          m.module_labels.empty() ? fallback_labels(n, "m") : m.module_labels;
      sep();
      out += "[module_over_artin]\n";
      emit_basis(out, mlabels);
      for (size_t x = 0; x < acts.size(); ++x) {
        if (int(x) == S.unit) continue;  // the unit acts as the identity
        for (int j = 0; j < n; ++j) {
          Vec col(n, 0);
          bool nz = false;
          for (int i = 0; i < n; ++i) {
            col[i] = acts[x].at(i, j);
            nz = nz || col[i] != 0;
          }
          if (nz)
            out += "action " + labels[x] + " " + mlabels[j] + " = " +
                   terms_str(col, mlabels) + "\n";
        }
      }
    }
  }
  return out;
}

DGLA ModelFile::dgla_view() const {
  if (dgla) return *dgla;
  if (lie_algebra) return DGLA::of(*lie_algebra);
  throw ModelError(0, 0, "model has no [dgla] or [lie_algebra] section");
}

GeometricModel ModelFile::geometric() const {
  GeometricModel gm;
  gm.L = dgla_view();
  gm.A = dg_algebra ? *dg_algebra : DGAlgebra::scalars();
  gm.M = dg_module;
  gm.pairing = pairing;
  return gm;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError(0, 0, "cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace defcalc
