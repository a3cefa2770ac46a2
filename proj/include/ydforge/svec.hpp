#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ydforge/scalar.hpp"

namespace ydforge {

// Sparse element of a tensor power of the base module: index -> coefficient.
// Invariant: no explicit zero entries. Indices are row-major over basis
// tuples, e.g. (i,j) in H⊗H is i*n + j.
using SVec = std::map<std::size_t, Scalar>;

inline void svec_add(SVec& acc, std::size_t idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(idx);
  if (it == acc.end()) {
    acc.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline void svec_add(SVec& acc, const SVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) svec_add(acc, i, x * c);
}

inline void svec_add(SVec& acc, const SVec& v) {
  for (const auto& [i, x] : v) svec_add(acc, i, x);
}

inline void svec_sub(SVec& acc, const SVec& v) {
  for (const auto& [i, x] : v) svec_add(acc, i, -x);
}

inline SVec svec_scaled(const SVec& v, const Scalar& c) {
  SVec r;
  if (c.is_zero()) return r;
  for (const auto& [i, x] : v) r.emplace(i, x * c);
  return r;
}

inline SVec svec_diff(const SVec& a, const SVec& b) {
  SVec r = a;
  svec_sub(r, b);
  return r;
}

inline Scalar svec_get(const SVec& v, std::size_t idx) {
  auto it = v.find(idx);
  return it == v.end() ? Scalar(0) : it->second;
}

inline SVec svec_unit(std::size_t idx, const Scalar& c = Scalar(1)) {
  SVec r;
  if (!c.is_zero()) r.emplace(idx, c);
  return r;
}

// Tensor product: indices combine row-major, the right factor living in a
// space of total dimension right_dim.
inline SVec svec_tensor(const SVec& a, const SVec& b, std::size_t right_dim) {
  SVec r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      Scalar c = x * y;
      if (!c.is_zero()) r.emplace(i * right_dim + j, c);
    }
  return r;
}

// Row-major packing of a basis-index tuple with n choices per slot.
inline std::size_t pack_index(const std::vector<std::size_t>& tuple, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t t : tuple) idx = idx * n + t;
  return idx;
}

inline std::vector<std::size_t> unpack_index(std::size_t idx, std::size_t n, std::size_t len) {
  std::vector<std::size_t> t(len, 0);
  for (std::size_t p = len; p-- > 0;) {
    t[p] = idx % n;
    idx /= n;
  }
  return t;
}

inline std::size_t int_pow(std::size_t n, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= n;
  return r;
}

}  // namespace ydforge
