#include "defcalc/report.hpp"

#include <cstdint>

namespace defcalc {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

void Report::add(const std::string& name, bool ok, const std::string& witness) {
  checks.push_back({name, ok ? "pass" : "fail", ok ? "" : witness});
}

void Report::add(const std::string& prefix, const ValidationReport& vr) {
  auto qualify = [&](const std::string& n) {
    return prefix.empty() ? n : prefix + ": " + n;
  };
  for (const auto& n : vr.passed) checks.push_back({qualify(n), "pass", ""});
  for (const auto& i : vr.issues) checks.push_back({qualify(i.check), "fail", i.witness});
}

OrderedJson Report::to_json() const {
  OrderedJson j = OrderedJson::object();
  j["command"] = command;
  j["digest"] = digest;
  j["results"] = results;
  OrderedJson cs = OrderedJson::array();
  for (const auto& c : checks) {
    OrderedJson e = OrderedJson::object();
    e["name"] = c.name;
    e["status"] = c.status;
    e["witness"] = c.witness;
    cs.push_back(e);
  }
  j["checks"] = cs;
  j["all_pass"] = all_pass();
  return j;
}

std::string Report::summary() const {
  std::string out = command + " (input " + digest + ")\n";
  for (const auto& c : checks) {
    out += "  [" + c.status + "] " + c.name;
    if (!c.witness.empty()) out += " -- " + c.witness;
    out += "\n";
  }
  int fails = 0;
  for (const auto& c : checks)
    if (c.status == "fail") ++fails;
  out += fails == 0 ? std::to_string(checks.size()) + " checks, all pass\n"
                    : std::to_string(fails) + " of " + std::to_string(checks.size()) +
                          " checks failed\n";
  return out;
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

OrderedJson json_of(const Q& x) { return to_string(x); }

OrderedJson json_of(const Vec& v) {
  OrderedJson a = OrderedJson::array();
  for (const auto& x : v) a.push_back(json_of(x));
  return a;
}

OrderedJson json_of(const Mat& m) {
  OrderedJson a = OrderedJson::array();
  for (int i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_of(m.at(i, j)));
    a.push_back(row);
  }
  return a;
}

}  // namespace defcalc
