#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "hv/errors.hpp"

namespace hv {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational is kept canonical by the backend: reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline std::string to_string(const Integer& z) { return z.str(); }

// "p" or "p/q"; q rendered only when != 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts an optionally signed integer or "p/q" with positive q; reduces.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> input_error {
    return input_error("malformed rational '" + text + "' (expected integer or p/q)");
  };
  std::string s = text;
  auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw bad();
  return Rational(n, d);
}

inline Rational dot(const RatVector& x, const IntVector& a) {
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * Rational(a[i]);
  return s;
}

inline Integer dot(const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline Rational dot(const RatVector& x, const RatVector& y) {
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace hv
