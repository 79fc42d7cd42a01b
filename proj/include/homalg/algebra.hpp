#ifndef HOMALG_ALGEBRA_HPP
#define HOMALG_ALGEBRA_HPP

#include "homalg/linalg.hpp"

#include <string>
#include <vector>

namespace homalg {

/// Structure tensor of a binary product: c(i,j,k) is the e_k coefficient
/// of e_i * e_j.
struct Tensor3 {
  std::size_t dim = 0;
  std::vector<Rational> a;

  Tensor3() = default;
  explicit Tensor3(std::size_t n) : dim(n), a(n * n * n, Rational(0)) {}

  Rational &at(std::size_t i, std::size_t j, std::size_t k) {
    return a[(i * dim + j) * dim + k];
  }
  const Rational &at(std::size_t i, std::size_t j, std::size_t k) const {
    return a[(i * dim + j) * dim + k];
  }

  friend bool operator==(const Tensor3 &, const Tensor3 &) = default;
};

/// Structure tensor of a ternary product: t(i,j,k,l) is the e_l coefficient
/// of [e_i, e_j, e_k].
struct Tensor4 {
  std::size_t dim = 0;
  std::vector<Rational> a;

  Tensor4() = default;
  explicit Tensor4(std::size_t n) : dim(n), a(n * n * n * n, Rational(0)) {}

  Rational &at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return a[((i * dim + j) * dim + k) * dim + l];
  }
  const Rational &at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return a[((i * dim + j) * dim + k) * dim + l];
  }

  friend bool operator==(const Tensor4 &, const Tensor4 &) = default;
};

inline std::vector<std::string> default_basis_labels(std::size_t dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

/// A binary Hom-algebra (A, *, alpha) given by structure constants.
struct HomAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Tensor3 product;
  LinearMap twist;

  HomAlgebra() = default;
  HomAlgebra(std::size_t n, std::vector<std::string> labels)
      : dim(n), basis(std::move(labels)), product(n), twist(LinearMap::identity(n)) {}
  explicit HomAlgebra(std::size_t n) : HomAlgebra(n, default_basis_labels(n)) {}
};

/// A ternary Hom-algebra (A, [,,], (alpha1, alpha2)).
struct TernaryHomAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Tensor4 product;
  LinearMap twist1;
  LinearMap twist2;

  TernaryHomAlgebra() = default;
  TernaryHomAlgebra(std::size_t n, std::vector<std::string> labels)
      : dim(n), basis(std::move(labels)), product(n),
        twist1(LinearMap::identity(n)), twist2(LinearMap::identity(n)) {}
  explicit TernaryHomAlgebra(std::size_t n)
      : TernaryHomAlgebra(n, default_basis_labels(n)) {}
};

/// One carrier with a binary bracket, a ternary product and a single twist.
struct HomBolAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Tensor3 bracket;
  Tensor4 triple;
  LinearMap twist;

  HomBolAlgebra() = default;
  HomBolAlgebra(std::size_t n, std::vector<std::string> labels)
      : dim(n), basis(std::move(labels)), bracket(n), triple(n),
        twist(LinearMap::identity(n)) {}
  explicit HomBolAlgebra(std::size_t n)
      : HomBolAlgebra(n, default_basis_labels(n)) {}
};

/// Bilinear extension of the structure tensor. Skips zero coordinates, so
/// basis-element arguments cost O(dim).
inline Element multiply(const Tensor3 &c, const Element &x, const Element &y) {
  require_dim(x.size(), c.dim, "multiply");
  require_dim(y.size(), c.dim, "multiply");
  Element r = zero_element(c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < c.dim; ++j) {
      if (y[j] == 0)
        continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < c.dim; ++k)
        if (c.at(i, j, k) != 0)
          r[k] += s * c.at(i, j, k);
    }
  }
  return r;
}

inline Element multiply(const HomAlgebra &alg, const Element &x, const Element &y) {
  return multiply(alg.product, x, y);
}

/// Trilinear extension of the 4-index tensor.
inline Element ternary_apply(const Tensor4 &t, const Element &x, const Element &y,
                             const Element &z) {
  require_dim(x.size(), t.dim, "ternary_apply");
  require_dim(y.size(), t.dim, "ternary_apply");
  require_dim(z.size(), t.dim, "ternary_apply");
  Element r = zero_element(t.dim);
  for (std::size_t i = 0; i < t.dim; ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < t.dim; ++j) {
      if (y[j] == 0)
        continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < t.dim; ++k) {
        if (z[k] == 0)
          continue;
        Rational sk = s * z[k];
        for (std::size_t l = 0; l < t.dim; ++l)
          if (t.at(i, j, k, l) != 0)
            r[l] += sk * t.at(i, j, k, l);
      }
    }
  }
  return r;
}

inline Element ternary_apply(const TernaryHomAlgebra &alg, const Element &x,
                             const Element &y, const Element &z) {
  return ternary_apply(alg.product, x, y, z);
}

/// as(x,y,z) = (x*y)*alpha(z) - alpha(x)*(y*z)
inline Element hom_associator(const HomAlgebra &alg, const Element &x,
                              const Element &y, const Element &z) {
  return sub(multiply(alg, multiply(alg, x, y), apply_map(alg.twist, z)),
             multiply(alg, apply_map(alg.twist, x), multiply(alg, y, z)));
}

/// J_alpha(x,y,z) = (x*y)*alpha(z) + (y*z)*alpha(x) + (z*x)*alpha(y)
inline Element hom_jacobian(const HomAlgebra &alg, const Element &x,
                            const Element &y, const Element &z) {
  Element r = multiply(alg, multiply(alg, x, y), apply_map(alg.twist, z));
  add_in_place(r, multiply(alg, multiply(alg, y, z), apply_map(alg.twist, x)));
  add_in_place(r, multiply(alg, multiply(alg, z, x), apply_map(alg.twist, y)));
  return r;
}

/// x o y = x*y + y*x
inline Element jordan_product(const HomAlgebra &alg, const Element &x,
                              const Element &y) {
  return add(multiply(alg, x, y), multiply(alg, y, x));
}

/// as^J(x,y,z) = (x o y) o alpha(z) - alpha(x) o (y o z)
inline Element hom_jordan_associator(const HomAlgebra &alg, const Element &x,
                                     const Element &y, const Element &z) {
  return sub(jordan_product(alg, jordan_product(alg, x, y), apply_map(alg.twist, z)),
             jordan_product(alg, apply_map(alg.twist, x), jordan_product(alg, y, z)));
}

/// Commutator Hom-algebra A^- with bracket x*y - y*x, same twist.
inline HomAlgebra commutator_algebra(const HomAlgebra &alg) {
  HomAlgebra r(alg.dim, alg.basis);
  r.twist = alg.twist;
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      for (std::size_t k = 0; k < alg.dim; ++k)
        r.product.at(i, j, k) = alg.product.at(i, j, k) - alg.product.at(j, i, k);
  return r;
}

/// Plus Hom-algebra A^+ with the Jordan product, same twist.
inline HomAlgebra plus_algebra(const HomAlgebra &alg) {
  HomAlgebra r(alg.dim, alg.basis);
  r.twist = alg.twist;
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      for (std::size_t k = 0; k < alg.dim; ++k)
        r.product.at(i, j, k) = alg.product.at(i, j, k) + alg.product.at(j, i, k);
  return r;
}

/// Opposite algebra: x *op y = y * x.
inline HomAlgebra opposite_algebra(const HomAlgebra &alg) {
  HomAlgebra r(alg.dim, alg.basis);
  r.twist = alg.twist;
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      for (std::size_t k = 0; k < alg.dim; ++k)
        r.product.at(i, j, k) = alg.product.at(j, i, k);
  return r;
}

} // namespace homalg

#endif
