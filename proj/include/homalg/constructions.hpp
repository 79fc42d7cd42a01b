#ifndef HOMALG_CONSTRUCTIONS_HPP
#define HOMALG_CONSTRUCTIONS_HPP

#include "homalg/identities.hpp"

namespace homalg {

/// Checks that m is an algebra morphism of (A, *): m(x*y) = m(x)*m(y).
inline CheckReport check_morphism(const HomAlgebra &a, const LinearMap &m) {
  IdentitySpec spec{"morphism", 2, [&a, &m](std::span<const Element> v) {
                      return sub(apply_map(m, multiply(a, v[0], v[1])),
                                 multiply(a, apply_map(m, v[0]), apply_map(m, v[1])));
                    }};
  return scan_identity(spec, a.dim);
}

/// Yau twist: product m(x*y), twist m composed with the input twist.
inline HomAlgebra yau_twist(const HomAlgebra &a, const LinearMap &m) {
  require_dim(m.dim, a.dim, "yau_twist");
  if (auto pre = check_morphism(a, m); !pre.holds())
    throw precondition_error("yau_twist", pre);
  HomAlgebra r(a.dim, a.basis);
  r.twist = compose(m, a.twist);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Element row(a.dim);
      for (std::size_t l = 0; l < a.dim; ++l)
        row[l] = a.product.at(i, j, l);
      Element img = apply_map(m, row);
      for (std::size_t k = 0; k < a.dim; ++k)
        r.product.at(i, j, k) = img[k];
    }
  return r;
}

namespace detail {

inline void require_mult_malcev(const char *op, const HomAlgebra &a) {
  if (auto pre = is_multiplicative(a); !pre.holds())
    throw precondition_error(op, pre);
  if (auto pre = check_hom_malcev(a); !pre.holds())
    throw precondition_error(op, pre);
}

} // namespace detail

/// Loos-type ternary tensor {x,y,z} = 2xy*a(z) - yz*a(x) - zx*a(y) with
/// twist pair (a^2, a^2). The equivalent form -J(x,y,z) + 3xy*a(z) is
/// recomputed as an internal cross-check.
inline TernaryHomAlgebra loos_ternary(const HomAlgebra &a) {
  detail::require_mult_malcev("loos_ternary", a);
  TernaryHomAlgebra t(a.dim, a.basis);
  t.twist1 = t.twist2 = power(a.twist, 2);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        Element x = basis_element(a.dim, i), y = basis_element(a.dim, j),
                z = basis_element(a.dim, k);
        Element val = loos_bracket(a, x, y, z);
        Element alt = add(scale(Rational(-1), hom_jacobian(a, x, y, z)),
                          scale(Rational(3), multiply(a, multiply(a, x, y),
                                                      apply_map(a.twist, z))));
        if (val != alt)
          throw std::logic_error("loos_ternary: forms (3.2) and (3.3) disagree");
        for (std::size_t l = 0; l < a.dim; ++l)
          t.product.at(i, j, k, l) = val[l];
      }
  return t;
}

/// [x,y,z]_{m^n} = m^n(2xy*z - yz*x - zx*y) on a Malcev algebra (twist id),
/// with twists (m^n, m^n).
inline TernaryHomAlgebra alpha_n_lts(const HomAlgebra &a, const LinearMap &m,
                                     std::size_t n) {
  if (!a.twist.is_identity())
    throw precondition_error(
        "alpha_n_lts", CheckReport::precondition("alpha_n_lts", "twist is not id"));
  if (auto pre = check_hom_malcev(a); !pre.holds())
    throw precondition_error("alpha_n_lts", pre);
  if (auto pre = check_morphism(a, m); !pre.holds())
    throw precondition_error("alpha_n_lts", pre);
  LinearMap mn = power(m, n);
  TernaryHomAlgebra t(a.dim, a.basis);
  t.twist1 = t.twist2 = mn;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        Element val = apply_map(mn, loos_bracket(a, basis_element(a.dim, i),
                                                 basis_element(a.dim, j),
                                                 basis_element(a.dim, k)));
        for (std::size_t l = 0; l < a.dim; ++l)
          t.product.at(i, j, k, l) = val[l];
      }
  return t;
}

/// The same ternary structure computed the long way around: Yau twist
/// along m, then the Loos-type product. Tensor-identical to
/// alpha_n_lts(a, m, 2).
inline TernaryHomAlgebra lts_from_malcev_morphism(const HomAlgebra &a,
                                                  const LinearMap &m) {
  if (!a.twist.is_identity())
    throw precondition_error(
        "lts_from_malcev_morphism",
        CheckReport::precondition("lts_from_malcev_morphism", "twist is not id"));
  return loos_ternary(yau_twist(a, m));
}

/// Hom-Bol structure on a multiplicative Hom-Malcev algebra: bracket is
/// the original product, triple is 1/3 of the Loos-type tensor.
inline HomBolAlgebra bol_from_malcev(const HomAlgebra &a) {
  detail::require_mult_malcev("bol_from_malcev", a);
  TernaryHomAlgebra lts = loos_ternary(a);
  HomBolAlgebra b(a.dim, a.basis);
  b.twist = a.twist;
  b.bracket = a.product;
  b.triple = lts.product;
  for (auto &c : b.triple.a)
    c /= 3;
  return b;
}

/// Hom-Bol structure on a multiplicative Hom-alternative algebra: bracket
/// is the commutator, triple is the 1/3-scaled Loos-type tensor of the
/// commutator algebra.
inline HomBolAlgebra bol_from_hom_alternative(const HomAlgebra &a) {
  if (auto pre = is_multiplicative(a); !pre.holds())
    throw precondition_error("bol_from_hom_alternative", pre);
  if (auto pre = check_hom_alternative(a); !pre.holds())
    throw precondition_error("bol_from_hom_alternative", pre);
  return bol_from_malcev(commutator_algebra(a));
}

/// (x,y,z) = as^J(y,z,x) on a multiplicative Hom-algebra; twists (a, a).
inline TernaryHomAlgebra jordan_triple(const HomAlgebra &a) {
  if (auto pre = is_multiplicative(a); !pre.holds())
    throw precondition_error("jordan_triple", pre);
  TernaryHomAlgebra t(a.dim, a.basis);
  t.twist1 = t.twist2 = a.twist;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        Element val = hom_jordan_associator(a, basis_element(a.dim, j),
                                            basis_element(a.dim, k),
                                            basis_element(a.dim, i));
        for (std::size_t l = 0; l < a.dim; ++l)
          t.product.at(i, j, k, l) = val[l];
      }
  return t;
}

/// (x,y,z) = [[x,y],a(z)] - 2as(z,x,y) (right) or ... - 2as(x,y,z) (left),
/// brackets taken as commutators in A; twists (a^2, a^2) for standalone
/// Hom-Lts use.
inline TernaryHomAlgebra ternary_from_alternative(const HomAlgebra &a, Side side) {
  if (auto pre = is_multiplicative(a); !pre.holds())
    throw precondition_error("ternary_from_alternative", pre);
  if (side == Side::right) {
    if (auto pre = check_right_hom_alternative(a); !pre.holds())
      throw precondition_error("ternary_from_alternative", pre);
  } else {
    if (auto pre = check_left_hom_alternative(a); !pre.holds())
      throw precondition_error("ternary_from_alternative", pre);
  }
  TernaryHomAlgebra t(a.dim, a.basis);
  t.twist1 = t.twist2 = power(a.twist, 2);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        Element x = basis_element(a.dim, i), y = basis_element(a.dim, j),
                z = basis_element(a.dim, k);
        Element val = commutator(a, commutator(a, x, y), apply_map(a.twist, z));
        if (side == Side::right)
          sub_in_place(val, scale(Rational(2), hom_associator(a, z, x, y)));
        else
          sub_in_place(val, scale(Rational(2), hom_associator(a, x, y, z)));
        for (std::size_t l = 0; l < a.dim; ++l)
          t.product.at(i, j, k, l) = val[l];
      }
  return t;
}

/// Hom-Bol structure on a multiplicative one-sided Hom-alternative algebra:
/// commutator bracket plus the ternary operation of
/// ternary_from_alternative, original twist.
inline HomBolAlgebra bol_from_one_sided_alternative(const HomAlgebra &a, Side side) {
  TernaryHomAlgebra t = ternary_from_alternative(a, side);
  HomBolAlgebra b(a.dim, a.basis);
  b.twist = a.twist;
  b.bracket = commutator_algebra(a).product;
  b.triple = t.product;
  return b;
}

/// [x,y,z] = 2(a(x) o (y o z) - a(y) o (x o z)) over the Jordan product;
/// twists (a^2, a^2). Tensor-equal to 2 x jordan_triple.
inline TernaryHomAlgebra jordan_lts(const HomAlgebra &a) {
  if (auto pre = is_multiplicative(a); !pre.holds())
    throw precondition_error("jordan_lts", pre);
  HomAlgebra plus = plus_algebra(a);
  bool commutative_jordan = check_hom_jordan(a).holds();
  if (!commutative_jordan) {
    if (auto pre = check_hom_jordan(plus); !pre.holds())
      throw precondition_error("jordan_lts", pre);
  }
  TernaryHomAlgebra t(a.dim, a.basis);
  t.twist1 = t.twist2 = power(a.twist, 2);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        Element x = basis_element(a.dim, i), y = basis_element(a.dim, j),
                z = basis_element(a.dim, k);
        Element val =
            sub(jordan_product(a, apply_map(a.twist, x), jordan_product(a, y, z)),
                jordan_product(a, apply_map(a.twist, y), jordan_product(a, x, z)));
        val = scale(Rational(2), val);
        for (std::size_t l = 0; l < a.dim; ++l)
          t.product.at(i, j, k, l) = val[l];
      }
  return t;
}

} // namespace homalg

#endif
