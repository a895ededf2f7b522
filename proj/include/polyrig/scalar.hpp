#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "polyrig/errors.hpp"

namespace polyrig {

// Exact scalar backend. All rational inputs stay error-free end to end;
// the double backend carries a per-polytope tolerance instead. Expression
// templates are off so arithmetic results convert like plain scalars.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long n, long long d = 1) { return Rat(BigInt(n), BigInt(d)); }

// p/q in either backend
template <class S>
inline S frac(long long p, long long q) {
  return S(p) / S(q);
}

inline std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

inline Rat rat_from_string(const std::string& s) {
  auto bad = [&]() { fail(Errc::ParseError, "not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
    if (num.empty() || den.empty()) bad();
  }
  try {
    BigInt p(num), q(den);
    if (q == 0) bad();
    return Rat(p, q);
  } catch (const std::exception&) {
    bad();
  }
  return Rat();  // unreachable
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }
inline double to_double(double x) { return x; }

template <class S>
inline S abs_value(const S& x) {
  using std::abs;
  using boost::multiprecision::abs;
  return abs(x);
}

inline int sign_of(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign_of(double x) { return x == 0.0 ? 0 : (x > 0.0 ? 1 : -1); }

// |a - b| <= tol * max(1, |scale|). With tol = 0 this is exact equality,
// so the rational backend reuses the same predicates.
template <class S>
inline bool nearly_equal(const S& a, const S& b, const S& tol, const S& scale) {
  S bound = tol * std::max<S>(S(1), abs_value(scale));
  return abs_value(S(a - b)) <= bound;
}

template <class S>
inline bool nearly_zero(const S& x, const S& tol, const S& scale) {
  return nearly_equal(x, S(0), tol, scale);
}

template <class S>
struct ScalarIo;

template <>
struct ScalarIo<Rat> {
  static std::string to_string(const Rat& r) { return rat_to_string(r); }
  static const char* backend_name() { return "exact"; }
};

template <>
struct ScalarIo<double> {
  static std::string to_string(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
  static const char* backend_name() { return "float"; }
};

}  // namespace polyrig
