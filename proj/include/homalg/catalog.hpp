#ifndef HOMALG_CATALOG_HPP
#define HOMALG_CATALOG_HPP

#include "homalg/constructions.hpp"

#include <optional>
#include <random>
#include <variant>

namespace homalg {

using AlgebraValue = std::variant<HomAlgebra, TernaryHomAlgebra, HomBolAlgebra>;

/// Runs a checker by name ("hom-malcev", "hom-malcev:eq24",
/// "lemma-4.2:left", ...) against a binary, ternary or Bol payload.
inline CheckReport run_checker(const std::string &full_name, const AlgebraValue &v) {
  std::string name = full_name, form;
  if (auto pos = full_name.find(':'); pos != std::string::npos) {
    name = full_name.substr(0, pos);
    form = full_name.substr(pos + 1);
  }
  auto wrong_kind = [&]() -> CheckReport {
    throw std::invalid_argument("checker '" + full_name +
                                "' does not apply to this algebra kind");
  };
  auto malcev_form = [&] {
    if (form.empty() || form == "eq23")
      return MalcevForm::eq23;
    if (form == "eq24")
      return MalcevForm::eq24;
    if (form == "direct")
      return MalcevForm::direct;
    throw std::invalid_argument("unknown hom-malcev form '" + form + "'");
  };
  auto alt_form = [&] {
    if (form.empty() || form == "eq42")
      return AltForm::eq42;
    if (form == "eq41")
      return AltForm::eq41;
    if (form == "direct")
      return AltForm::direct;
    throw std::invalid_argument("unknown right-hom-alternative form '" + form + "'");
  };

  if (const auto *a = std::get_if<HomAlgebra>(&v)) {
    if (name == "anticommutative")
      return check_anticommutative(*a);
    if (name == "commutative")
      return check_commutative(*a);
    if (name == "multiplicative")
      return is_multiplicative(*a);
    if (name == "hom-lie")
      return check_hom_lie(*a);
    if (name == "hom-malcev")
      return check_hom_malcev(*a, malcev_form());
    if (name == "right-hom-alternative")
      return check_right_hom_alternative(*a, alt_form());
    if (name == "left-hom-alternative")
      return check_left_hom_alternative(*a);
    if (name == "hom-alternative")
      return check_hom_alternative(*a);
    if (name == "hom-jordan")
      return check_hom_jordan(*a);
    if (name == "lemma-3.1")
      return check_lemma_3_1(*a);
    if (name == "lemma-4.2")
      return check_lemma_4_2(*a, form == "left" ? Side::left : Side::right);
    if (name == "ternary-hom-nambu" || name == "hom-lts" || name == "hom-triple" ||
        name == "hom-bol")
      return wrong_kind();
  } else if (const auto *t = std::get_if<TernaryHomAlgebra>(&v)) {
    if (name == "multiplicative")
      return is_multiplicative_ternary(*t);
    if (name == "ternary-hom-nambu")
      return check_ternary_hom_nambu(*t);
    if (name == "hom-lts")
      return check_hom_lts(*t);
    if (name == "hom-triple")
      return check_hom_triple(*t);
    return wrong_kind();
  } else if (const auto *b = std::get_if<HomBolAlgebra>(&v)) {
    if (name == "hom-bol")
      return check_hom_bol(*b);
    return wrong_kind();
  }
  throw std::invalid_argument("unknown checker '" + full_name + "'");
}

inline const std::vector<std::string> &known_checkers() {
  static const std::vector<std::string> names = {
      "anticommutative", "commutative",      "multiplicative",
      "hom-lie",         "hom-malcev",       "right-hom-alternative",
      "left-hom-alternative", "hom-alternative", "hom-jordan",
      "lemma-3.1",       "lemma-4.2",        "ternary-hom-nambu",
      "hom-lts",         "hom-triple",       "hom-bol"};
  return names;
}

/// An expected checker outcome recorded with a catalog entry.
struct Claim {
  std::string checker;
  Verdict expected = Verdict::holds;
  std::optional<std::vector<std::size_t>> witness;
};

struct CatalogEntry {
  std::string name;
  AlgebraValue payload;
  std::vector<LinearMap> morphisms; // verified at load
  std::vector<Claim> claims;
  std::string provenance;
};

/// Re-runs every claim; throws if any verdict or stored witness does not
/// reproduce. Catalog entries are self-validating.
inline void verify_entry(const CatalogEntry &e) {
  for (const auto &m : e.morphisms) {
    const auto *a = std::get_if<HomAlgebra>(&e.payload);
    if (!a || !check_morphism(*a, m).holds())
      throw std::runtime_error("catalog entry '" + e.name +
                               "': recorded morphism fails verification");
  }
  for (const auto &c : e.claims) {
    CheckReport rep = run_checker(c.checker, e.payload);
    if (rep.verdict != c.expected)
      throw std::runtime_error("catalog entry '" + e.name + "': claim '" + c.checker +
                               "' expected " + to_string(c.expected) + " but got " +
                               to_string(rep.verdict));
    if (c.witness) {
      if (!rep.witness || rep.witness->indices != *c.witness)
        throw std::runtime_error("catalog entry '" + e.name + "': claim '" +
                                 c.checker + "' witness does not reproduce");
      if (is_zero(rep.witness->residual))
        throw std::runtime_error("catalog entry '" + e.name + "': claim '" +
                                 c.checker + "' witness has zero residual");
    }
  }
}

namespace builtin {

inline CatalogEntry zero2() {
  CatalogEntry e;
  e.name = "zero2";
  e.payload = HomAlgebra(2, {"e1", "e2"});
  e.claims = {{"anticommutative", Verdict::holds, {}},
              {"hom-lie", Verdict::holds, {}},
              {"hom-malcev", Verdict::holds, {}},
              {"hom-alternative", Verdict::holds, {}},
              {"hom-jordan", Verdict::holds, {}},
              {"multiplicative", Verdict::holds, {}}};
  e.provenance = "built-in: two-dimensional zero algebra";
  return e;
}

inline HomAlgebra sl2_algebra() {
  HomAlgebra a(3, {"h", "e", "f"});
  auto set_skew = [&](std::size_t i, std::size_t j, std::size_t k, int v) {
    a.product.at(i, j, k) = v;
    a.product.at(j, i, k) = -v;
  };
  set_skew(0, 1, 1, 2);  // [h,e] = 2e
  set_skew(0, 2, 2, -2); // [h,f] = -2f
  set_skew(1, 2, 0, 1);  // [e,f] = h
  return a;
}

inline LinearMap sl2_morphism() {
  return LinearMap::diagonal({Rational(1), Rational(2), Rational(1, 2)});
}

inline CatalogEntry sl2() {
  CatalogEntry e;
  e.name = "sl2";
  e.payload = sl2_algebra();
  e.morphisms = {sl2_morphism()};
  e.claims = {{"anticommutative", Verdict::holds, {}},
              {"hom-lie", Verdict::holds, {}},
              {"hom-malcev", Verdict::holds, {}},
              {"multiplicative", Verdict::holds, {}}};
  e.provenance = "built-in: split simple Lie algebra sl(2), twist id; "
                 "morphism diag(1,2,1/2)";
  return e;
}

inline CatalogEntry sl2_twisted() {
  CatalogEntry e;
  e.name = "sl2-twisted";
  e.payload = yau_twist(sl2_algebra(), sl2_morphism());
  e.claims = {{"anticommutative", Verdict::holds, {}},
              {"hom-lie", Verdict::holds, {}},
              {"hom-malcev", Verdict::holds, {}},
              {"multiplicative", Verdict::holds, {}}};
  e.provenance = "built-in: Yau twist of sl2 along diag(1,2,1/2)";
  return e;
}

inline CatalogEntry assoc2() {
  CatalogEntry e;
  e.name = "assoc2";
  HomAlgebra a(2, {"u", "v"});
  a.product.at(0, 0, 0) = 1; // u*u = u
  a.product.at(0, 1, 1) = 1; // u*v = v
  a.product.at(1, 0, 1) = 1; // v*u = v
  e.payload = std::move(a);
  e.claims = {{"hom-alternative", Verdict::holds, {}},
              {"commutative", Verdict::holds, {}},
              {"hom-jordan", Verdict::holds, {}},
              {"anticommutative", Verdict::fails, std::vector<std::size_t>{0, 0}},
              {"multiplicative", Verdict::holds, {}}};
  e.provenance = "built-in: truncated polynomials K[t]/(t^2), twist id";
  return e;
}

inline HomAlgebra m4_algebra() {
  HomAlgebra a(4);
  auto set_skew = [&](std::size_t i, std::size_t j, std::size_t k, int v) {
    a.product.at(i, j, k) = v;
    a.product.at(j, i, k) = -v;
  };
  set_skew(0, 1, 1, -1); // [e1,e2] = -e2
  set_skew(0, 2, 2, -1); // [e1,e3] = -e3
  set_skew(0, 3, 3, 1);  // [e1,e4] = e4
  set_skew(1, 2, 3, 2);  // [e2,e3] = 2e4
  return a;
}

inline LinearMap m4_morphism() {
  return LinearMap::diagonal({Rational(1), Rational(2), Rational(3), Rational(6)});
}

inline CatalogEntry m4() {
  CatalogEntry e;
  e.name = "m4";
  e.payload = m4_algebra();
  e.morphisms = {m4_morphism()};
  e.claims = {{"anticommutative", Verdict::holds, {}},
              {"hom-malcev", Verdict::holds, {}},
              {"hom-lie", Verdict::fails, std::vector<std::size_t>{0, 1, 2}},
              {"multiplicative", Verdict::holds, {}}};
  e.provenance = "built-in: the four-dimensional solvable non-Lie Malcev "
                 "algebra (Sagle), twist id; morphism diag(1,2,3,6)";
  return e;
}

inline CatalogEntry ra_np() {
  CatalogEntry e;
  e.name = "ra_np";
  HomAlgebra a(3, {"e", "a", "b"});
  a.product.at(0, 0, 0) = 1; // e*e = e
  a.product.at(1, 0, 1) = 1; // a*e = a
  a.product.at(0, 1, 2) = 1; // e*a = b
  e.payload = std::move(a);
  e.claims = {{"right-hom-alternative", Verdict::holds, {}},
              {"right-hom-alternative:direct", Verdict::holds, {}},
              {"left-hom-alternative", Verdict::fails,
               std::vector<std::size_t>{0, 0, 1}},
              {"multiplicative", Verdict::holds, {}}};
  e.provenance = "minted by search (idempotent plus two-dimensional nil part); "
                 "right but not left Hom-alternative, twist id";
  return e;
}

inline CatalogEntry oct() {
  CatalogEntry e;
  e.name = "oct";
  HomAlgebra a(8, {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"});
  for (std::size_t i = 0; i < 8; ++i) {
    a.product.at(0, i, i) = 1;
    a.product.at(i, 0, i) = 1;
  }
  a.product.at(0, 0, 0) = 1;
  for (std::size_t i = 1; i < 8; ++i)
    a.product.at(i, i, 0) = -1;
  constexpr std::size_t fano[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                      {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  for (auto &tr : fano) {
    const std::size_t cyc[3][3] = {{tr[0], tr[1], tr[2]},
                                   {tr[1], tr[2], tr[0]},
                                   {tr[2], tr[0], tr[1]}};
    for (auto &c : cyc) {
      a.product.at(c[0], c[1], c[2]) = 1;
      a.product.at(c[1], c[0], c[2]) = -1;
    }
  }
  e.payload = std::move(a);
  e.claims = {{"hom-alternative", Verdict::holds, {}},
              {"right-hom-alternative", Verdict::holds, {}},
              {"left-hom-alternative", Verdict::holds, {}},
              {"multiplicative", Verdict::holds, {}}};
  e.provenance = "built-in: octonion algebra, standard Fano-plane table, twist id";
  return e;
}

inline CatalogEntry dmalc3() {
  CatalogEntry e;
  e.name = "dmalc3";
  HomAlgebra a(3);
  a.twist = LinearMap::diagonal({Rational(1), Rational(2), Rational(2)});
  auto set_skew = [&](std::size_t i, std::size_t j, std::size_t k, int v) {
    a.product.at(i, j, k) = v;
    a.product.at(j, i, k) = -v;
  };
  set_skew(0, 1, 1, 1); // [e1,e2] = e2 + e3
  set_skew(0, 1, 2, 1);
  set_skew(0, 2, 1, 1); // [e1,e3] = e2 - e3
  set_skew(0, 2, 2, -1);
  e.payload = std::move(a);
  e.claims = {{"anticommutative", Verdict::holds, {}},
              {"multiplicative", Verdict::holds, {}},
              {"hom-malcev", Verdict::holds, {}},
              {"hom-lie", Verdict::holds, {}}};
  e.provenance = "minted by search over diagonal-twist generators, "
                 "weights (1,2,2)";
  return e;
}

inline CatalogEntry nj2() {
  CatalogEntry e;
  e.name = "nj2";
  HomAlgebra a(2, {"u", "v"});
  a.product.at(0, 0, 1) = 1; // u*u = v
  a.product.at(1, 1, 0) = 1; // v*v = u
  e.payload = std::move(a);
  e.claims = {{"commutative", Verdict::holds, {}},
              {"hom-jordan", Verdict::fails, std::vector<std::size_t>{0, 0, 0, 0}},
              {"multiplicative", Verdict::holds, {}}};
  e.provenance = "built-in: commutative two-dimensional non-Jordan control";
  return e;
}

} // namespace builtin

inline const std::vector<std::string> &catalog_names() {
  static const std::vector<std::string> names = {
      "zero2", "sl2", "sl2-twisted", "assoc2", "m4", "ra_np", "oct", "dmalc3", "nj2"};
  return names;
}

/// Looks up a built-in entry and re-verifies every recorded claim.
inline CatalogEntry get(const std::string &name) {
  CatalogEntry e;
  if (name == "zero2")
    e = builtin::zero2();
  else if (name == "sl2")
    e = builtin::sl2();
  else if (name == "sl2-twisted")
    e = builtin::sl2_twisted();
  else if (name == "assoc2")
    e = builtin::assoc2();
  else if (name == "m4")
    e = builtin::m4();
  else if (name == "ra_np")
    e = builtin::ra_np();
  else if (name == "oct")
    e = builtin::oct();
  else if (name == "dmalc3")
    e = builtin::dmalc3();
  else if (name == "nj2")
    e = builtin::nj2();
  else
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
  verify_entry(e);
  return e;
}

// ---------------------------------------------------------------------------
// Seeded generators. std::mt19937_64 output is fully specified, so the
// tensors are byte-identical across platforms; no distribution classes are
// used because their output is not.
// ---------------------------------------------------------------------------

namespace detail {

inline Rational small_coefficient(std::mt19937_64 &rng) {
  // {-2,...,2} over denominators {1,2}, zero with probability ~1/2.
  if (rng() % 2 == 0)
    return Rational(0);
  int num = static_cast<int>(rng() % 5) - 2; // -2..2
  int den = 1 + static_cast<int>(rng() % 2); // 1..2
  if (num == 0)
    num = 1;
  return Rational(num, den);
}

inline std::uint64_t attempt_seed(std::uint64_t seed, std::uint64_t attempt) {
  return seed ^ (attempt * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL);
}

} // namespace detail

/// Skew structure tensor with small rational entries; twist id.
inline HomAlgebra random_anticommutative(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  HomAlgebra a(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Rational v = detail::small_coefficient(rng);
        a.product.at(i, j, k) = v;
        a.product.at(j, i, k) = -v;
      }
  return a;
}

/// Twist diag(weights); structure constants populated only in slots with
/// w_i * w_j = w_k, which forces multiplicativity.
inline HomAlgebra random_with_diagonal_twist(std::size_t dim, std::uint64_t seed,
                                             const std::vector<Rational> &weights) {
  require_dim(weights.size(), dim, "random_with_diagonal_twist");
  for (const auto &w : weights)
    if (w == 0)
      throw std::invalid_argument("random_with_diagonal_twist: zero weight");
  std::mt19937_64 rng(seed);
  HomAlgebra a(dim);
  a.twist = LinearMap::diagonal(weights);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (weights[i] * weights[j] == weights[k])
          a.product.at(i, j, k) = detail::small_coefficient(rng);
  return a;
}

/// Sparse general tensor, twist id: a handful of nonzero slots.
inline HomAlgebra random_sparse(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  HomAlgebra a(dim);
  std::size_t nslots = 1 + rng() % (dim + 1);
  for (std::size_t s = 0; s < nslots; ++s) {
    std::size_t i = rng() % dim, j = rng() % dim, k = rng() % dim;
    int num = static_cast<int>(rng() % 4) - 2; // -2..1
    if (num == 0)
      num = 2;
    int den = 1 + static_cast<int>(rng() % 2);
    a.product.at(i, j, k) = Rational(num, den);
  }
  return a;
}

/// Dense random ternary tensor with small coefficients and identity twists.
inline TernaryHomAlgebra random_ternary(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TernaryHomAlgebra t(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l)
          t.product.at(i, j, k, l) = detail::small_coefficient(rng);
  return t;
}

/// One checker/verdict requirement of a search.
struct Predicate {
  std::string checker;
  Verdict expected = Verdict::holds;
};

/// Deterministic counterexample search: cycles generator families over
/// seeded attempts and returns the first algebra meeting every predicate.
/// Returns nullopt when the budget is exhausted.
inline std::optional<CatalogEntry> search(const std::vector<Predicate> &predicates,
                                          std::size_t dim_lo, std::size_t dim_hi,
                                          std::size_t budget, std::uint64_t seed) {
  if (budget < 1 || dim_lo < 1 || dim_hi < dim_lo)
    throw std::invalid_argument("search: bad parameters");
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::uint64_t sub = detail::attempt_seed(seed, attempt);
    std::mt19937_64 pick(sub);
    std::size_t dim = dim_lo + pick() % (dim_hi - dim_lo + 1);
    HomAlgebra a;
    switch (attempt % 3) {
    case 0:
      a = random_anticommutative(dim, sub);
      break;
    case 1:
      a = random_sparse(dim, sub);
      break;
    default: {
      std::vector<Rational> weights(dim);
      for (auto &w : weights)
        w = Rational(1 + static_cast<int>(pick() % 3)); // 1..3
      a = random_with_diagonal_twist(dim, sub, weights);
      break;
    }
    }
    AlgebraValue payload = a;
    bool ok = true;
    std::vector<Claim> claims;
    for (const auto &p : predicates) {
      CheckReport rep = run_checker(p.checker, payload);
      if (rep.verdict != p.expected) {
        ok = false;
        break;
      }
      Claim c{p.checker, p.expected, {}};
      if (rep.witness)
        c.witness = rep.witness->indices;
      claims.push_back(std::move(c));
    }
    if (!ok)
      continue;
    CatalogEntry e;
    e.name = "searched";
    e.payload = std::move(payload);
    e.claims = std::move(claims);
    e.provenance = "search(seed=" + std::to_string(seed) +
                   ", attempt=" + std::to_string(attempt) +
                   ", dim=" + std::to_string(dim) + ")";
    return e;
  }
  return std::nullopt;
}

} // namespace homalg

#endif
