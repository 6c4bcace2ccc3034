#pragma once
// Exact rational scalars. All arithmetic in the library is over Q; nothing
// here ever rounds.
#include <gmpxx.h>
#include <optional>
#include <string>

namespace defcalc {

using Q = mpq_class;

inline Q q(long num, long den = 1) { Q r(num, den); r.canonicalize(); return r; }

// canonical "p" / "p/q" form, lowest terms, positive denominator
inline std::string to_string(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// strict parse of "p" or "p/q"; rejects q = 0 and any trailing garbage
inline std::optional<Q> parse_scalar(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) return std::nullopt;
  mpz_class d(den);
  if (d == 0) return std::nullopt;
  Q r{mpz_class(num), d};
  r.canonicalize();
  return r;
}

}  // namespace defcalc
