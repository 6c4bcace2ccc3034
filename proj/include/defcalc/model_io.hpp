#pragma once
// Text model files: a line-oriented sectioned format with exact "p/q"
// scalars. Parsing is strict (unknown keys and undeclared labels are
// errors) and serialization emits a canonical form, so
// serialize(parse(bytes)) is idempotent. The grammar is documented in
// docs/model-format.md.
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcalc/artin.hpp"
#include "defcalc/geometric.hpp"

namespace defcalc {

struct ModelError : std::runtime_error {
  int line = 0;  // 1-based; 0 when no position applies (e.g. unreadable file)
  int col = 0;   // 1-based
  ModelError(int line, int col, const std::string& what);
};

struct ModelFile {
  std::optional<LieModel> lie_algebra;

  std::optional<Representation> representation;
  std::vector<std::string> representation_labels;

  std::optional<DGLA> dgla;
  std::vector<std::string> dgla_labels;

  std::optional<DGAlgebra> dg_algebra;
  std::vector<std::string> dg_algebra_labels;

  // pairing[i][j] = dg_algebra coordinates of tr(l_i, l_j); empty when the
  // [pairing] section is absent
  std::vector<std::vector<Vec>> pairing;

  std::optional<DGModule> dg_module;
  std::vector<std::string> dg_module_labels;

  std::optional<ArtinAlgebra> artin_algebra;

  // raw action matrices, one per artin_algebra basis element
  std::optional<std::vector<Mat>> module_over_artin;
  std::vector<std::string> module_labels;

  // the dgla of the file: [dgla] when present, else [lie_algebra] in degree
  // 0; throws ModelError when neither section exists
  DGLA dgla_view() const;
  // assembled geometric model (dgla_view + dg_algebra or scalars + optional
  // pairing and module)
  GeometricModel geometric() const;
};

ModelFile parse_model(const std::string& text);
std::string serialize_model(const ModelFile& m);
ModelFile load_model(const std::string& path);

}  // namespace defcalc
