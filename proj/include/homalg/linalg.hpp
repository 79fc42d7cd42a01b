#ifndef HOMALG_LINALG_HPP
#define HOMALG_LINALG_HPP

#include "homalg/rational.hpp"

#include <cstddef>
#include <vector>

namespace homalg {

/// Coordinate vector of an algebra element in the fixed basis.
using Element = std::vector<Rational>;

class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline void require_dim(std::size_t got, std::size_t want, const char *what) {
  if (got != want)
    throw dimension_error(std::string(what) + ": dimension mismatch");
}

inline Element zero_element(std::size_t dim) { return Element(dim, Rational(0)); }

inline Element basis_element(std::size_t dim, std::size_t i) {
  Element e(dim, Rational(0));
  e[i] = 1;
  return e;
}

inline bool is_zero(const Element &x) {
  for (const auto &c : x)
    if (c != 0)
      return false;
  return true;
}

inline Element add(const Element &x, const Element &y) {
  require_dim(y.size(), x.size(), "add");
  Element r(x);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += y[i];
  return r;
}

inline Element sub(const Element &x, const Element &y) {
  require_dim(y.size(), x.size(), "sub");
  Element r(x);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= y[i];
  return r;
}

inline Element scale(const Rational &s, const Element &x) {
  Element r(x);
  for (auto &c : r)
    c *= s;
  return r;
}

inline void add_in_place(Element &x, const Element &y) {
  require_dim(y.size(), x.size(), "add");
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] += y[i];
}

inline void sub_in_place(Element &x, const Element &y) {
  require_dim(y.size(), x.size(), "sub");
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] -= y[i];
}

/// Square matrix over the rationals; column j is the image of basis element j.
struct LinearMap {
  std::size_t dim = 0;
  std::vector<Rational> a; // row-major, dim*dim

  LinearMap() = default;
  explicit LinearMap(std::size_t n) : dim(n), a(n * n, Rational(0)) {}

  Rational &at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  const Rational &at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }

  static LinearMap identity(std::size_t n) {
    LinearMap m(n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, i) = 1;
    return m;
  }

  static LinearMap diagonal(const std::vector<Rational> &weights) {
    LinearMap m(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
      m.at(i, i) = weights[i];
    return m;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (at(i, j) != Rational(i == j ? 1 : 0))
          return false;
    return true;
  }

  friend bool operator==(const LinearMap &, const LinearMap &) = default;
};

inline Element apply_map(const LinearMap &m, const Element &x) {
  require_dim(x.size(), m.dim, "apply_map");
  Element r = zero_element(m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) {
    if (x[j] == 0)
      continue;
    for (std::size_t i = 0; i < m.dim; ++i)
      if (m.at(i, j) != 0)
        r[i] += m.at(i, j) * x[j];
  }
  return r;
}

inline LinearMap compose(const LinearMap &m1, const LinearMap &m2) {
  require_dim(m2.dim, m1.dim, "compose");
  LinearMap r(m1.dim);
  for (std::size_t i = 0; i < m1.dim; ++i)
    for (std::size_t k = 0; k < m1.dim; ++k) {
      if (m1.at(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < m1.dim; ++j)
        r.at(i, j) += m1.at(i, k) * m2.at(k, j);
    }
  return r;
}

inline LinearMap power(const LinearMap &m, std::size_t n) {
  LinearMap r = LinearMap::identity(m.dim);
  for (std::size_t i = 0; i < n; ++i)
    r = compose(m, r);
  return r;
}

} // namespace homalg

#endif
