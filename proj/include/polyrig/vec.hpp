#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyrig/scalar.hpp"

namespace polyrig {

template <class S>
using Vec = std::vector<S>;

template <class S>
inline S dot(const Vec<S>& a, const Vec<S>& b) {
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class S>
inline Vec<S> add(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class S>
inline Vec<S> sub(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class S>
inline Vec<S> scaled(const Vec<S>& a, const S& c) {
  Vec<S> r(a);
  for (auto& x : r) x *= c;
  return r;
}

template <class S>
inline Vec<S> negated(const Vec<S>& a) {
  return scaled(a, S(-1));
}

template <class S>
inline bool is_zero_vec(const Vec<S>& a) {
  for (const auto& x : a)
    if (x != S(0)) return false;
  return true;
}

template <class S>
inline S max_abs(const Vec<S>& a) {
  S m(0);
  for (const auto& x : a) m = std::max<S>(m, abs_value(x));
  return m;
}

// Lexicographic compare; used for the canonical ordering of facet classes.
template <class S>
inline bool lex_less(const Vec<S>& a, const Vec<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

template <class S>
inline std::string vec_to_string(const Vec<S>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += ScalarIo<S>::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace polyrig
