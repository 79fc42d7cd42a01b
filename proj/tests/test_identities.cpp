#include "homalg/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

using namespace homalg;

namespace {

Element random_element(std::size_t dim, std::mt19937_64 &rng) {
  Element e(dim);
  for (auto &c : e)
    c = Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
  return e;
}

// Element-level residual of the defining (non-polarized) Malcev relation:
// J(a(x), a(y), x*z) - J(x,y,z) * a^2(x). Used as an oracle against the
// basis-scan verdicts: identically zero iff the identity holds, and a random
// rational point is nonzero almost surely when it does not.
Element malcev_definition_residual(const HomAlgebra &a, const Element &x,
                                   const Element &y, const Element &z) {
  LinearMap a2 = power(a.twist, 2);
  Element lhs = hom_jacobian(a, apply_map(a.twist, x), apply_map(a.twist, y),
                             multiply(a, x, z));
  Element rhs = multiply(a, hom_jacobian(a, x, y, z), apply_map(a2, x));
  return sub(lhs, rhs);
}

Element right_alt_definition_residual(const HomAlgebra &a, const Element &x,
                                      const Element &y) {
  return hom_associator(a, x, y, y);
}

Element jordan_definition_residual(const HomAlgebra &a, const Element &x,
                                   const Element &y) {
  return hom_jordan_associator(a, jordan_product(a, x, x),
                               apply_map(a.twist, y), apply_map(a.twist, x));
}

bool probes_all_zero(std::size_t dim, std::uint64_t seed,
                     const std::function<Element(std::mt19937_64 &)> &probe) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 40; ++i)
    if (!is_zero(probe(rng)))
      return false;
  return true;
}

} // namespace

TEST_CASE("hom-lie verdicts") {
  CHECK(check_hom_lie(std::get<HomAlgebra>(get("zero2").payload)).holds());
  CHECK(check_hom_lie(std::get<HomAlgebra>(get("sl2").payload)).holds());
  CHECK(check_hom_lie(std::get<HomAlgebra>(get("sl2-twisted").payload)).holds());
  CHECK(check_hom_lie(std::get<HomAlgebra>(get("dmalc3").payload)).holds());

  auto rep = check_hom_lie(std::get<HomAlgebra>(get("m4").payload));
  CHECK(rep.verdict == Verdict::fails);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(rep.witness->residual == Element{0, 0, 0, Rational(-6)});
}

TEST_CASE("hom-malcev verdicts agree with the definitional residual") {
  for (const char *name : {"zero2", "sl2", "sl2-twisted", "m4", "dmalc3"}) {
    HomAlgebra a = std::get<HomAlgebra>(get(name).payload);
    for (MalcevForm f : {MalcevForm::direct, MalcevForm::eq23, MalcevForm::eq24}) {
      INFO(name << " form " << to_string(f));
      CHECK(check_hom_malcev(a, f).holds());
    }
    CHECK(probes_all_zero(a.dim, 17, [&](std::mt19937_64 &rng) {
      Element x = random_element(a.dim, rng), y = random_element(a.dim, rng),
              z = random_element(a.dim, rng);
      return malcev_definition_residual(a, x, y, z);
    }));
  }
}

TEST_CASE("hom-malcev failing case has nonzero definitional residual") {
  // Anticommutative but non-Malcev algebras exist from dim 5 on; the seeded
  // generator finds them at dim 4 is not guaranteed, so search.
  auto found = search({{"anticommutative", Verdict::holds},
                       {"hom-malcev", Verdict::fails}},
                      3, 4, 5000, 2024);
  REQUIRE(found.has_value());
  const auto &a = std::get<HomAlgebra>(found->payload);
  for (MalcevForm f : {MalcevForm::direct, MalcevForm::eq23, MalcevForm::eq24})
    CHECK(check_hom_malcev(a, f).verdict == Verdict::fails);
  CHECK_FALSE(probes_all_zero(a.dim, 18, [&](std::mt19937_64 &rng) {
    Element x = random_element(a.dim, rng), y = random_element(a.dim, rng),
            z = random_element(a.dim, rng);
    return malcev_definition_residual(a, x, y, z);
  }));
}

TEST_CASE("hom-malcev precondition") {
  auto rep = check_hom_malcev(std::get<HomAlgebra>(get("assoc2").payload));
  CHECK(rep.verdict == Verdict::precondition_failed);
  CHECK(rep.detail == "not anticommutative");
}

TEST_CASE("malcev form equivalence on seeded corpus") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    HomAlgebra a = random_anticommutative(3, seed);
    Verdict v1 = check_hom_malcev(a, MalcevForm::direct).verdict;
    Verdict v2 = check_hom_malcev(a, MalcevForm::eq23).verdict;
    Verdict v3 = check_hom_malcev(a, MalcevForm::eq24).verdict;
    INFO("seed " << seed);
    CHECK(v1 == v2);
    CHECK(v2 == v3);
  }
}

TEST_CASE("right and left hom-alternative") {
  HomAlgebra ra = std::get<HomAlgebra>(get("ra_np").payload);
  for (AltForm f : {AltForm::direct, AltForm::eq41, AltForm::eq42}) {
    INFO("form " << to_string(f));
    CHECK(check_right_hom_alternative(ra, f).holds());
  }
  CHECK(probes_all_zero(ra.dim, 19, [&](std::mt19937_64 &rng) {
    return right_alt_definition_residual(ra, random_element(ra.dim, rng),
                                         random_element(ra.dim, rng));
  }));

  auto rep = check_left_hom_alternative(ra);
  CHECK(rep.verdict == Verdict::fails);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->indices == std::vector<std::size_t>{0, 0, 1});
  CHECK_FALSE(is_zero(rep.witness->residual));

  HomAlgebra oct = std::get<HomAlgebra>(get("oct").payload);
  CHECK(check_hom_alternative(oct).holds());
  CHECK(check_hom_alternative(ra).verdict == Verdict::fails);
}

TEST_CASE("alternative form equivalence on seeded corpus") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    HomAlgebra a = random_sparse(3, seed);
    Verdict v1 = check_right_hom_alternative(a, AltForm::direct).verdict;
    Verdict v2 = check_right_hom_alternative(a, AltForm::eq41).verdict;
    Verdict v3 = check_right_hom_alternative(a, AltForm::eq42).verdict;
    INFO("seed " << seed);
    CHECK(v1 == v2);
    CHECK(v2 == v3);
  }
}

TEST_CASE("hom-jordan") {
  HomAlgebra assoc2 = std::get<HomAlgebra>(get("assoc2").payload);
  CHECK(check_hom_jordan(assoc2).holds());
  CHECK(probes_all_zero(2, 23, [&](std::mt19937_64 &rng) {
    return jordan_definition_residual(assoc2, random_element(2, rng),
                                      random_element(2, rng));
  }));

  HomAlgebra nj2 = std::get<HomAlgebra>(get("nj2").payload);
  auto rep = check_hom_jordan(nj2);
  CHECK(rep.verdict == Verdict::fails);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->indices == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(rep.witness->residual == Element{Rational(-6), 0});
  CHECK_FALSE(probes_all_zero(2, 29, [&](std::mt19937_64 &rng) {
    return jordan_definition_residual(nj2, random_element(2, rng),
                                      random_element(2, rng));
  }));

  // non-commutative input: precondition, not a bare fail
  HomAlgebra sl2 = std::get<HomAlgebra>(get("sl2").payload);
  CHECK(check_hom_jordan(sl2).verdict == Verdict::precondition_failed);
  // ...but the plus algebra of an alternative algebra is Hom-Jordan
  HomAlgebra oct = std::get<HomAlgebra>(get("oct").payload);
  CHECK(check_hom_jordan(plus_algebra(oct)).holds());
}

TEST_CASE("ternary identity checkers") {
  HomAlgebra sl2 = std::get<HomAlgebra>(get("sl2").payload);
  TernaryHomAlgebra loos = loos_ternary(sl2);
  CHECK(check_ternary_hom_nambu(loos).holds());
  CHECK(check_hom_triple(loos).holds());
  CHECK(check_hom_lts(loos).holds());
  CHECK(is_multiplicative_ternary(loos).holds());

  // break left-skew: nambu may survive but the lts report names the
  // offending sub-identity
  TernaryHomAlgebra broken = loos;
  broken.product.at(0, 0, 0, 1) += 1;
  auto rep = check_hom_lts(broken);
  CHECK(rep.verdict == Verdict::fails);
  CHECK(rep.detail.find("left-skew") != std::string::npos);

  TernaryHomAlgebra rnd = random_ternary(2, 7);
  auto nrep = check_ternary_hom_nambu(rnd);
  CHECK(nrep.verdict == Verdict::fails);
  REQUIRE(nrep.witness.has_value());
  // deterministic: the same scan reproduces the same witness
  auto nrep2 = check_ternary_hom_nambu(random_ternary(2, 7));
  REQUIRE(nrep2.witness.has_value());
  CHECK(nrep2.witness->indices == nrep.witness->indices);
  CHECK(nrep2.witness->residual == nrep.witness->residual);
}

TEST_CASE("hom-bol checker") {
  HomAlgebra sl2 = std::get<HomAlgebra>(get("sl2").payload);
  HomBolAlgebra b = bol_from_malcev(sl2);
  CHECK(check_hom_bol(b).holds());

  HomBolAlgebra bad = b;
  bad.triple.at(0, 1, 2, 0) += 1;
  auto rep = check_hom_bol(bad);
  CHECK(rep.verdict == Verdict::fails);
  CHECK_FALSE(rep.detail.empty());

  HomBolAlgebra skew = b;
  skew.bracket.at(0, 1, 1) += 1; // breaks bracket skewness (HB3)
  CHECK(check_hom_bol(skew).verdict == Verdict::fails);
}

TEST_CASE("lemma 3.1 relation") {
  for (const char *name : {"sl2", "sl2-twisted", "m4", "dmalc3"}) {
    INFO(name);
    CHECK(check_lemma_3_1(std::get<HomAlgebra>(get(name).payload)).holds());
  }
  CHECK(check_lemma_3_1(std::get<HomAlgebra>(get("assoc2").payload)).verdict ==
        Verdict::precondition_failed);
}

TEST_CASE("lemma 4.2 relation") {
  HomAlgebra ra = std::get<HomAlgebra>(get("ra_np").payload);
  CHECK(check_lemma_4_2(ra, Side::right).holds());
  HomAlgebra op = opposite_algebra(ra);
  CHECK(check_lemma_4_2(op, Side::left).holds());
  HomAlgebra oct = std::get<HomAlgebra>(get("oct").payload);
  CHECK(check_lemma_4_2(oct, Side::right).holds());
  CHECK(check_lemma_4_2(oct, Side::left).holds());
}

TEST_CASE("octonion commutator facts") {
  HomAlgebra oct = std::get<HomAlgebra>(get("oct").payload);
  HomAlgebra cm = commutator_algebra(oct);
  CHECK(check_anticommutative(cm).holds());
  CHECK(check_hom_malcev(cm).holds());
  auto rep = check_hom_lie(cm);
  CHECK(rep.verdict == Verdict::fails);
  REQUIRE(rep.witness.has_value());
  CHECK_FALSE(is_zero(rep.witness->residual));
}

TEST_CASE("scan determinism under thread caps") {
  // dim 8 arity 4 = 4096 tuples, enough to trigger the parallel path.
  HomAlgebra a(8);
  a.product.at(0, 0, 1) = 1;
  a.product.at(1, 1, 0) = 1; // embedded non-Jordan commutative table
  std::optional<Witness> seen;
  for (const char *threads : {"1", "3", "8"}) {
    setenv("HOMCHECK_THREADS", threads, 1);
    auto rep = check_hom_jordan(a);
    REQUIRE(rep.verdict == Verdict::fails);
    REQUIRE(rep.witness.has_value());
    if (!seen)
      seen = rep.witness;
    CHECK(rep.witness->indices == seen->indices);
    CHECK(rep.witness->residual == seen->residual);
  }
  unsetenv("HOMCHECK_THREADS");
  CHECK(seen->indices == std::vector<std::size_t>{0, 0, 0, 0});
}
