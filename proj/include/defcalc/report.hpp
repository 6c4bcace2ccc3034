#pragma once
// Machine-readable run reports with a stable key order, plus a human
// summary. Byte-identical inputs and flags produce byte-identical reports.
#include <string>
#include <vector>

#include "defcalc/lie.hpp"
#include "defcalc/matrix.hpp"
#include "json.hpp"

namespace defcalc {

using OrderedJson = nlohmann::ordered_json;

struct Check {
  std::string name;
  std::string status;  // "pass" | "fail" | "n/a"
  std::string witness;
};

struct Report {
  std::string command;
  std::string digest;  // FNV-1a over the input bytes and flags
  OrderedJson results = OrderedJson::object();
  std::vector<Check> checks;

  bool all_pass() const;
  void add(const std::string& name, bool ok, const std::string& witness = "");
  // one pass/fail check per issue/passed entry of a validation report
  void add(const std::string& prefix, const ValidationReport& vr);
  OrderedJson to_json() const;
  std::string summary() const;
};

std::string fnv1a_digest(const std::string& bytes);

// scalars as canonical "p/q" strings; matrices as row-major nested arrays
OrderedJson json_of(const Q& x);
OrderedJson json_of(const Vec& v);
OrderedJson json_of(const Mat& m);

}  // namespace defcalc
