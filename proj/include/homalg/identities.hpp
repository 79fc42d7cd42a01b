#ifndef HOMALG_IDENTITIES_HPP
#define HOMALG_IDENTITIES_HPP

#include "homalg/algebra.hpp"
#include "homalg/report.hpp"

#include <cstdlib>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace homalg {

/// A multilinear identity in residual form: the identity holds for all
/// elements iff the residual vanishes on all basis tuples. Identities with
/// repeated variables are stored already polarized, which is equivalent in
/// characteristic 0.
struct IdentitySpec {
  std::string name;
  std::size_t arity = 0;
  std::function<Element(std::span<const Element>)> residual;
};

inline Element polarized_residual(const IdentitySpec &spec, std::size_t dim,
                                  std::span<const std::size_t> indices) {
  if (indices.size() != spec.arity)
    throw dimension_error("polarized_residual: arity mismatch");
  std::vector<Element> args;
  args.reserve(spec.arity);
  for (auto i : indices)
    args.push_back(basis_element(dim, i));
  return spec.residual(args);
}

namespace detail {

inline std::size_t worker_count(std::size_t total) {
  std::size_t n = std::thread::hardware_concurrency();
  if (const char *env = std::getenv("HOMCHECK_THREADS")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1)
      n = static_cast<std::size_t>(v);
  }
  if (n == 0)
    n = 1;
  if (n > total)
    n = total;
  return n;
}

inline std::vector<std::size_t> decode_tuple(std::size_t flat, std::size_t dim,
                                             std::size_t arity) {
  std::vector<std::size_t> idx(arity);
  for (std::size_t p = arity; p-- > 0;) {
    idx[p] = flat % dim;
    flat /= dim;
  }
  return idx;
}

} // namespace detail

/// Scans all basis tuples in lexicographic order and reports the first
/// failure. The tuple space may be partitioned across threads; the
/// lexicographically first witness wins regardless of scheduling.
inline CheckReport scan_identity(const IdentitySpec &spec, std::size_t dim) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < spec.arity; ++i)
    total *= dim;

  auto scan_range = [&](std::size_t begin, std::size_t end) -> std::size_t {
    std::vector<Element> args;
    for (std::size_t flat = begin; flat < end; ++flat) {
      auto idx = detail::decode_tuple(flat, dim, spec.arity);
      args.clear();
      for (auto i : idx)
        args.push_back(basis_element(dim, i));
      if (!is_zero(spec.residual(args)))
        return flat;
    }
    return total;
  };

  std::size_t workers = total >= 4096 ? detail::worker_count(total) : 1;
  std::size_t first_bad = total;
  if (workers <= 1) {
    first_bad = scan_range(0, total);
  } else {
    std::vector<std::size_t> local(workers, total);
    std::vector<std::thread> threads;
    std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t b = w * chunk;
      std::size_t e = std::min(total, b + chunk);
      threads.emplace_back([&, w, b, e] { local[w] = scan_range(b, e); });
    }
    for (auto &t : threads)
      t.join();
    for (auto v : local)
      first_bad = std::min(first_bad, v);
  }

  if (first_bad == total)
    return CheckReport::pass(spec.name);
  auto idx = detail::decode_tuple(first_bad, dim, spec.arity);
  Element res = polarized_residual(spec, dim, idx);
  return CheckReport::fail(spec.name, Witness{std::move(idx), std::move(res)});
}

// ---------------------------------------------------------------------------
// Identity specs for binary Hom-algebras
// ---------------------------------------------------------------------------

inline IdentitySpec anticommutativity_spec(const HomAlgebra &a) {
  return {"anticommutative", 2, [&a](std::span<const Element> v) {
            return add(multiply(a, v[0], v[1]), multiply(a, v[1], v[0]));
          }};
}

inline IdentitySpec commutativity_spec(const HomAlgebra &a) {
  return {"commutative", 2, [&a](std::span<const Element> v) {
            return sub(multiply(a, v[0], v[1]), multiply(a, v[1], v[0]));
          }};
}

inline IdentitySpec multiplicativity_spec(const HomAlgebra &a) {
  return {"multiplicative", 2, [&a](std::span<const Element> v) {
            return sub(apply_map(a.twist, multiply(a, v[0], v[1])),
                       multiply(a, apply_map(a.twist, v[0]), apply_map(a.twist, v[1])));
          }};
}

inline IdentitySpec hom_jacobi_spec(const HomAlgebra &a) {
  return {"hom-jacobi", 3, [&a](std::span<const Element> v) {
            return hom_jacobian(a, v[0], v[1], v[2]);
          }};
}

enum class MalcevForm { direct, eq23, eq24 };

inline const char *to_string(MalcevForm f) {
  switch (f) {
  case MalcevForm::direct:
    return "direct";
  case MalcevForm::eq23:
    return "eq23";
  default:
    return "eq24";
  }
}

inline IdentitySpec hom_malcev_spec(const HomAlgebra &a, MalcevForm form) {
  switch (form) {
  case MalcevForm::eq23:
    // J(a(x),a(y),w*z) + J(a(w),a(y),x*z) = J(x,y,z)*a2(w) + J(w,y,z)*a2(x)
    return {"hom-malcev:eq23", 4, [&a, a2 = power(a.twist, 2)](std::span<const Element> v) {
              const Element &x = v[0], &y = v[1], &w = v[2], &z = v[3];
              Element r = hom_jacobian(a, apply_map(a.twist, x), apply_map(a.twist, y),
                                       multiply(a, w, z));
              add_in_place(r, hom_jacobian(a, apply_map(a.twist, w),
                                           apply_map(a.twist, y), multiply(a, x, z)));
              sub_in_place(r, multiply(a, hom_jacobian(a, x, y, z), apply_map(a2, w)));
              sub_in_place(r, multiply(a, hom_jacobian(a, w, y, z), apply_map(a2, x)));
              return r;
            }};
  case MalcevForm::eq24:
    // J(a(x),a(y),u*v) = a2(u)*J(x,y,v) + J(x,y,u)*a2(v) - 2 J(a(u),a(v),x*y)
    return {"hom-malcev:eq24", 4, [&a, a2 = power(a.twist, 2)](std::span<const Element> v) {
              const Element &x = v[0], &y = v[1], &u = v[2], &w = v[3];
              Element r = hom_jacobian(a, apply_map(a.twist, x), apply_map(a.twist, y),
                                       multiply(a, u, w));
              sub_in_place(r, multiply(a, apply_map(a2, u), hom_jacobian(a, x, y, w)));
              sub_in_place(r, multiply(a, hom_jacobian(a, x, y, u), apply_map(a2, w)));
              add_in_place(r, scale(Rational(2),
                                    hom_jacobian(a, apply_map(a.twist, u),
                                                 apply_map(a.twist, w), multiply(a, x, y))));
              return r;
            }};
  default:
    // Polarization of J(a(x),a(y),x*z) = J(x,y,z)*a2(x): x -> x1, x2.
    return {"hom-malcev:direct", 4, [&a, a2 = power(a.twist, 2)](std::span<const Element> v) {
              const Element &x1 = v[0], &x2 = v[1], &y = v[2], &z = v[3];
              Element r = zero_element(a.dim);
              const Element *xs[2][2] = {{&x1, &x2}, {&x2, &x1}};
              for (auto &p : xs) {
                add_in_place(r, hom_jacobian(a, apply_map(a.twist, *p[0]),
                                             apply_map(a.twist, y), multiply(a, *p[1], z)));
                sub_in_place(r, multiply(a, hom_jacobian(a, *p[0], y, z),
                                         apply_map(a2, *p[1])));
              }
              return r;
            }};
  }
}

enum class AltForm { direct, eq41, eq42 };

inline const char *to_string(AltForm f) {
  switch (f) {
  case AltForm::direct:
    return "direct";
  case AltForm::eq41:
    return "eq41";
  default:
    return "eq42";
  }
}

inline IdentitySpec right_hom_alternative_spec(const HomAlgebra &a, AltForm form) {
  switch (form) {
  case AltForm::eq41:
    return {"right-hom-alternative:eq41", 3, [&a](std::span<const Element> v) {
              return add(hom_associator(a, v[0], v[1], v[2]),
                         hom_associator(a, v[0], v[2], v[1]));
            }};
  case AltForm::eq42:
    // a(x)*(yz + zy) = xy*a(z) + xz*a(y)
    return {"right-hom-alternative:eq42", 3, [&a](std::span<const Element> v) {
              const Element &x = v[0], &y = v[1], &z = v[2];
              Element r = multiply(a, apply_map(a.twist, x),
                                   add(multiply(a, y, z), multiply(a, z, y)));
              sub_in_place(r, multiply(a, multiply(a, x, y), apply_map(a.twist, z)));
              sub_in_place(r, multiply(a, multiply(a, x, z), apply_map(a.twist, y)));
              return r;
            }};
  default:
    // Polarization of as(x,y,y) = 0.
    return {"right-hom-alternative:direct", 3, [&a](std::span<const Element> v) {
              return add(hom_associator(a, v[0], v[1], v[2]),
                         hom_associator(a, v[0], v[2], v[1]));
            }};
  }
}

inline IdentitySpec left_hom_alternative_spec(const HomAlgebra &a) {
  // Polarization of as(x,x,y) = 0, which is eq (4.3).
  return {"left-hom-alternative", 3, [&a](std::span<const Element> v) {
            return add(hom_associator(a, v[0], v[1], v[2]),
                       hom_associator(a, v[1], v[0], v[2]));
          }};
}

inline IdentitySpec hom_jordan_spec(const HomAlgebra &a) {
  // Polarization of as(x*x, a(y), a(x)) = 0: x -> x1,x2,x3, summed over
  // all six orderings.
  return {"hom-jordan", 4, [&a](std::span<const Element> v) {
            const Element *x[3] = {&v[0], &v[1], &v[2]};
            Element ay = apply_map(a.twist, v[3]);
            Element r = zero_element(a.dim);
            static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (auto &p : perms)
              add_in_place(r, hom_associator(a, multiply(a, *x[p[0]], *x[p[1]]), ay,
                                             apply_map(a.twist, *x[p[2]])));
            return r;
          }};
}

// ---------------------------------------------------------------------------
// Identity specs for ternary Hom-algebras and Hom-Bol algebras
// ---------------------------------------------------------------------------

inline IdentitySpec ternary_multiplicativity_spec(const TernaryHomAlgebra &t) {
  return {"multiplicative", 3, [&t](std::span<const Element> v) {
            return sub(apply_map(t.twist1, ternary_apply(t, v[0], v[1], v[2])),
                       ternary_apply(t, apply_map(t.twist1, v[0]),
                                     apply_map(t.twist1, v[1]),
                                     apply_map(t.twist1, v[2])));
          }};
}

inline IdentitySpec ternary_left_skew_spec(const TernaryHomAlgebra &t) {
  return {"left-skew (2.6)", 3, [&t](std::span<const Element> v) {
            return add(ternary_apply(t, v[0], v[1], v[2]),
                       ternary_apply(t, v[1], v[0], v[2]));
          }};
}

inline IdentitySpec ternary_cyclic_spec(const TernaryHomAlgebra &t) {
  return {"cyclic-sum (2.7)", 3, [&t](std::span<const Element> v) {
            Element r = ternary_apply(t, v[0], v[1], v[2]);
            add_in_place(r, ternary_apply(t, v[1], v[2], v[0]));
            add_in_place(r, ternary_apply(t, v[2], v[0], v[1]));
            return r;
          }};
}

inline IdentitySpec ternary_hom_nambu_spec(const TernaryHomAlgebra &t) {
  // [a1(x),a2(y),[u,v,w]] = [[x,y,u],a1(v),a2(w)] + [a1(u),[x,y,v],a2(w)]
  //                       + [a1(u),a2(v),[x,y,w]]
  return {"ternary-hom-nambu (2.5)", 5, [&t](std::span<const Element> v) {
            const Element &x = v[0], &y = v[1], &u = v[2], &w1 = v[3], &w2 = v[4];
            Element a1x = apply_map(t.twist1, x), a2y = apply_map(t.twist2, y);
            Element a1u = apply_map(t.twist1, u), a1v = apply_map(t.twist1, w1);
            Element a2v = apply_map(t.twist2, w1), a2w = apply_map(t.twist2, w2);
            Element r = ternary_apply(t, a1x, a2y, ternary_apply(t, u, w1, w2));
            sub_in_place(r, ternary_apply(t, ternary_apply(t, x, y, u), a1v, a2w));
            sub_in_place(r, ternary_apply(t, a1u, ternary_apply(t, x, y, w1), a2w));
            sub_in_place(r, ternary_apply(t, a1u, a2v, ternary_apply(t, x, y, w2)));
            return r;
          }};
}

namespace detail {

inline Element bol_bracket(const HomBolAlgebra &b, const Element &x, const Element &y) {
  return multiply(b.bracket, x, y);
}
inline Element bol_triple(const HomBolAlgebra &b, const Element &x, const Element &y,
                          const Element &z) {
  return ternary_apply(b.triple, x, y, z);
}

} // namespace detail

inline std::vector<IdentitySpec> hom_bol_specs(const HomBolAlgebra &b) {
  using detail::bol_bracket;
  using detail::bol_triple;
  std::vector<IdentitySpec> specs;
  specs.push_back({"HB1", 2, [&b](std::span<const Element> v) {
                     return sub(apply_map(b.twist, bol_bracket(b, v[0], v[1])),
                                bol_bracket(b, apply_map(b.twist, v[0]),
                                            apply_map(b.twist, v[1])));
                   }});
  specs.push_back({"HB2", 3, [&b](std::span<const Element> v) {
                     return sub(apply_map(b.twist, bol_triple(b, v[0], v[1], v[2])),
                                bol_triple(b, apply_map(b.twist, v[0]),
                                           apply_map(b.twist, v[1]),
                                           apply_map(b.twist, v[2])));
                   }});
  specs.push_back({"HB3", 2, [&b](std::span<const Element> v) {
                     return add(bol_bracket(b, v[0], v[1]), bol_bracket(b, v[1], v[0]));
                   }});
  specs.push_back({"HB4", 3, [&b](std::span<const Element> v) {
                     return add(bol_triple(b, v[0], v[1], v[2]),
                                bol_triple(b, v[1], v[0], v[2]));
                   }});
  specs.push_back({"HB5", 3, [&b](std::span<const Element> v) {
                     Element r = bol_triple(b, v[0], v[1], v[2]);
                     add_in_place(r, bol_triple(b, v[1], v[2], v[0]));
                     add_in_place(r, bol_triple(b, v[2], v[0], v[1]));
                     return r;
                   }});
  // (a(x),a(y),[u,v]) = [(x,y,u),a2(v)] + [a2(u),(x,y,v)] + (a(u),a(v),[x,y])
  //                     - [[a(u),a(v)],[a(x),a(y)]]
  specs.push_back({"HB6", 4, [&b, a2 = power(b.twist, 2)](std::span<const Element> v) {
                     const Element &x = v[0], &y = v[1], &u = v[2], &w = v[3];
                     Element ax = apply_map(b.twist, x), ay = apply_map(b.twist, y);
                     Element au = apply_map(b.twist, u), av = apply_map(b.twist, w);
                     Element r = bol_triple(b, ax, ay, bol_bracket(b, u, w));
                     sub_in_place(r, bol_bracket(b, bol_triple(b, x, y, u),
                                                 apply_map(a2, w)));
                     sub_in_place(r, bol_bracket(b, apply_map(a2, u),
                                                 bol_triple(b, x, y, w)));
                     sub_in_place(r, bol_triple(b, au, av, bol_bracket(b, x, y)));
                     add_in_place(r, bol_bracket(b, bol_bracket(b, au, av),
                                                 bol_bracket(b, ax, ay)));
                     return r;
                   }});
  // HB7 is the ternary Hom-Nambu identity with both twists equal to alpha^2,
  // computed on the fly.
  specs.push_back({"HB7", 5, [&b, a2 = power(b.twist, 2)](std::span<const Element> v) {
                     const Element &x = v[0], &y = v[1], &u = v[2], &w1 = v[3],
                                   &w2 = v[4];
                     Element r = bol_triple(b, apply_map(a2, x), apply_map(a2, y),
                                            bol_triple(b, u, w1, w2));
                     sub_in_place(r, bol_triple(b, bol_triple(b, x, y, u),
                                                apply_map(a2, w1), apply_map(a2, w2)));
                     sub_in_place(r, bol_triple(b, apply_map(a2, u),
                                                bol_triple(b, x, y, w1),
                                                apply_map(a2, w2)));
                     sub_in_place(r, bol_triple(b, apply_map(a2, u), apply_map(a2, w1),
                                                bol_triple(b, x, y, w2)));
                     return r;
                   }});
  return specs;
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

inline CheckReport check_anticommutative(const HomAlgebra &a) {
  return scan_identity(anticommutativity_spec(a), a.dim);
}

inline CheckReport check_commutative(const HomAlgebra &a) {
  return scan_identity(commutativity_spec(a), a.dim);
}

inline CheckReport is_multiplicative(const HomAlgebra &a) {
  return scan_identity(multiplicativity_spec(a), a.dim);
}

inline CheckReport is_multiplicative_ternary(const TernaryHomAlgebra &t) {
  return scan_identity(ternary_multiplicativity_spec(t), t.dim);
}

inline CheckReport check_hom_lie(const HomAlgebra &a) {
  if (auto pre = check_anticommutative(a); !pre.holds())
    return CheckReport::precondition("hom-lie", "not anticommutative", pre.witness);
  auto rep = scan_identity(hom_jacobi_spec(a), a.dim);
  rep.identity = "hom-lie";
  return rep;
}

inline CheckReport check_hom_malcev(const HomAlgebra &a,
                                    MalcevForm form = MalcevForm::eq23) {
  std::string name = std::string("hom-malcev:") + to_string(form);
  if (auto pre = check_anticommutative(a); !pre.holds())
    return CheckReport::precondition(name, "not anticommutative", pre.witness);
  return scan_identity(hom_malcev_spec(a, form), a.dim);
}

inline CheckReport check_right_hom_alternative(const HomAlgebra &a,
                                               AltForm form = AltForm::eq42) {
  return scan_identity(right_hom_alternative_spec(a, form), a.dim);
}

inline CheckReport check_left_hom_alternative(const HomAlgebra &a) {
  return scan_identity(left_hom_alternative_spec(a), a.dim);
}

inline CheckReport check_hom_alternative(const HomAlgebra &a) {
  if (auto r = check_right_hom_alternative(a, AltForm::direct); !r.holds())
    return CheckReport::fail("hom-alternative", *r.witness, r.identity);
  if (auto l = check_left_hom_alternative(a); !l.holds())
    return CheckReport::fail("hom-alternative", *l.witness, l.identity);
  return CheckReport::pass("hom-alternative");
}

inline CheckReport check_hom_jordan(const HomAlgebra &a) {
  if (auto pre = check_commutative(a); !pre.holds())
    return CheckReport::precondition("hom-jordan", "not commutative", pre.witness);
  return scan_identity(hom_jordan_spec(a), a.dim);
}

inline CheckReport check_ternary_hom_nambu(const TernaryHomAlgebra &t) {
  return scan_identity(ternary_hom_nambu_spec(t), t.dim);
}

inline CheckReport check_hom_triple(const TernaryHomAlgebra &t) {
  if (auto r = scan_identity(ternary_left_skew_spec(t), t.dim); !r.holds())
    return CheckReport::fail("hom-triple", *r.witness, r.identity);
  if (auto r = scan_identity(ternary_cyclic_spec(t), t.dim); !r.holds())
    return CheckReport::fail("hom-triple", *r.witness, r.identity);
  return CheckReport::pass("hom-triple");
}

inline CheckReport check_hom_lts(const TernaryHomAlgebra &t) {
  if (auto r = scan_identity(ternary_left_skew_spec(t), t.dim); !r.holds())
    return CheckReport::fail("hom-lts", *r.witness, r.identity);
  if (auto r = scan_identity(ternary_cyclic_spec(t), t.dim); !r.holds())
    return CheckReport::fail("hom-lts", *r.witness, r.identity);
  if (auto r = scan_identity(ternary_hom_nambu_spec(t), t.dim); !r.holds())
    return CheckReport::fail("hom-lts", *r.witness, r.identity);
  return CheckReport::pass("hom-lts");
}

inline CheckReport check_hom_bol(const HomBolAlgebra &b) {
  for (const auto &spec : hom_bol_specs(b))
    if (auto r = scan_identity(spec, b.dim); !r.holds())
      return CheckReport::fail("hom-bol", *r.witness, r.identity);
  return CheckReport::pass("hom-bol");
}

/// Loos-type ternary operation (3.2) evaluated directly:
/// {x,y,z} = 2 xy*a(z) - yz*a(x) - zx*a(y).
inline Element loos_bracket(const HomAlgebra &a, const Element &x, const Element &y,
                            const Element &z) {
  Element r = scale(Rational(2),
                    multiply(a, multiply(a, x, y), apply_map(a.twist, z)));
  sub_in_place(r, multiply(a, multiply(a, y, z), apply_map(a.twist, x)));
  sub_in_place(r, multiply(a, multiply(a, z, x), apply_map(a.twist, y)));
  return r;
}

inline IdentitySpec lemma_3_1_spec(const HomAlgebra &a) {
  // {a(x),a(y),u*v} = a2(u)*{x,y,v} + {x,y,u}*a2(v) - J(a(u),a(v),x*y)
  return {"lemma-3.1 (3.4)", 4, [&a, a2 = power(a.twist, 2)](std::span<const Element> v) {
            const Element &x = v[0], &y = v[1], &u = v[2], &w = v[3];
            Element r = loos_bracket(a, apply_map(a.twist, x), apply_map(a.twist, y),
                                     multiply(a, u, w));
            sub_in_place(r, multiply(a, apply_map(a2, u), loos_bracket(a, x, y, w)));
            sub_in_place(r, multiply(a, loos_bracket(a, x, y, u), apply_map(a2, w)));
            add_in_place(r, hom_jacobian(a, apply_map(a.twist, u),
                                         apply_map(a.twist, w), multiply(a, x, y)));
            return r;
          }};
}

inline CheckReport check_lemma_3_1(const HomAlgebra &a) {
  if (auto pre = is_multiplicative(a); !pre.holds())
    return CheckReport::precondition("lemma-3.1", "not multiplicative", pre.witness);
  if (auto pre = check_hom_malcev(a); !pre.holds())
    return CheckReport::precondition("lemma-3.1", "not hom-malcev", pre.witness);
  return scan_identity(lemma_3_1_spec(a), a.dim);
}

enum class Side { right, left };

inline const char *to_string(Side s) { return s == Side::right ? "right" : "left"; }

inline Element commutator(const HomAlgebra &a, const Element &x, const Element &y) {
  return sub(multiply(a, x, y), multiply(a, y, x));
}

inline IdentitySpec lemma_4_2_spec(const HomAlgebra &a, Side side) {
  if (side == Side::right) {
    // as([u,v],a(x),a(y)) = [as(u,x,y),a2(v)] + [a2(u),as(v,x,y)]
    //                       + as(a(v),a(u),[x,y]) - as(a(u),a(v),[x,y])
    return {"lemma-4.2 (4.5)", 4, [&a, a2 = power(a.twist, 2)](std::span<const Element> v) {
              const Element &u = v[0], &w = v[1], &x = v[2], &y = v[3];
              Element au = apply_map(a.twist, u), av = apply_map(a.twist, w);
              Element ax = apply_map(a.twist, x), ay = apply_map(a.twist, y);
              Element r = hom_associator(a, commutator(a, u, w), ax, ay);
              Element asu = hom_associator(a, u, x, y);
              Element asv = hom_associator(a, w, x, y);
              sub_in_place(r, sub(multiply(a, asu, apply_map(a2, w)),
                                  multiply(a, apply_map(a2, w), asu)));
              sub_in_place(r, sub(multiply(a, apply_map(a2, u), asv),
                                  multiply(a, asv, apply_map(a2, u))));
              Element cxy = commutator(a, x, y);
              sub_in_place(r, hom_associator(a, av, au, cxy));
              add_in_place(r, hom_associator(a, au, av, cxy));
              return r;
            }};
  }
  // (4.6): as(a(x),a(y),[u,v]) = [as(x,y,u),a2(v)] + [a2(u),as(x,y,v)]
  //        + as([x,y],a(v),a(u)) - as([x,y],a(u),a(v))
  return {"lemma-4.2 (4.6)", 4, [&a, a2 = power(a.twist, 2)](std::span<const Element> v) {
            const Element &u = v[0], &w = v[1], &x = v[2], &y = v[3];
            Element au = apply_map(a.twist, u), av = apply_map(a.twist, w);
            Element ax = apply_map(a.twist, x), ay = apply_map(a.twist, y);
            Element r = hom_associator(a, ax, ay, commutator(a, u, w));
            Element asu = hom_associator(a, x, y, u);
            Element asv = hom_associator(a, x, y, w);
            sub_in_place(r, sub(multiply(a, asu, apply_map(a2, w)),
                                multiply(a, apply_map(a2, w), asu)));
            sub_in_place(r, sub(multiply(a, apply_map(a2, u), asv),
                                multiply(a, asv, apply_map(a2, u))));
            Element cxy = commutator(a, x, y);
            sub_in_place(r, hom_associator(a, cxy, av, au));
            add_in_place(r, hom_associator(a, cxy, au, av));
            return r;
          }};
}

inline CheckReport check_lemma_4_2(const HomAlgebra &a, Side side = Side::right) {
  if (auto pre = is_multiplicative(a); !pre.holds())
    return CheckReport::precondition("lemma-4.2", "not multiplicative", pre.witness);
  if (side == Side::right) {
    if (auto pre = check_right_hom_alternative(a); !pre.holds())
      return CheckReport::precondition("lemma-4.2", "not right hom-alternative",
                                       pre.witness);
  } else {
    if (auto pre = check_left_hom_alternative(a); !pre.holds())
      return CheckReport::precondition("lemma-4.2", "not left hom-alternative",
                                       pre.witness);
  }
  return scan_identity(lemma_4_2_spec(a, side), a.dim);
}

} // namespace homalg

#endif
