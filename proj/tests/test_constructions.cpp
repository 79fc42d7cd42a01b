#include "homalg/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace homalg;

namespace {

HomAlgebra entry(const char *name) {
  return std::get<HomAlgebra>(get(name).payload);
}

} // namespace

TEST_CASE("morphism check") {
  HomAlgebra sl2 = entry("sl2");
  CHECK(check_morphism(sl2, builtin::sl2_morphism()).holds());
  CHECK(check_morphism(sl2, LinearMap::identity(3)).holds());
  CHECK(check_morphism(sl2, LinearMap(3)).holds()); // zero map

  LinearMap bad = LinearMap::diagonal({Rational(2), Rational(1), Rational(1)});
  auto rep = check_morphism(sl2, bad);
  CHECK(rep.verdict == Verdict::fails);
  REQUIRE(rep.witness.has_value());
  CHECK_FALSE(is_zero(rep.witness->residual));
}

TEST_CASE("yau twist") {
  HomAlgebra sl2 = entry("sl2");
  LinearMap m = builtin::sl2_morphism();
  HomAlgebra tw = yau_twist(sl2, m);

  // hand-computed table: m([h,e]) = m(2e) = 4e, m([h,f]) = -f, m([e,f]) = h
  CHECK(tw.product.at(0, 1, 1) == Rational(4));
  CHECK(tw.product.at(1, 0, 1) == Rational(-4));
  CHECK(tw.product.at(0, 2, 2) == Rational(-1));
  CHECK(tw.product.at(1, 2, 0) == Rational(1));
  CHECK(tw.twist == m); // input twist was the identity
  CHECK(is_multiplicative(tw).holds());
  CHECK(check_hom_lie(tw).holds());

  // twisting the twisted algebra composes twists
  HomAlgebra tw2 = yau_twist(tw, m);
  CHECK(tw2.twist == power(m, 2));

  LinearMap not_morphism = LinearMap::diagonal({Rational(2), Rational(1), Rational(1)});
  CHECK_THROWS_AS(yau_twist(sl2, not_morphism), precondition_error);
}

TEST_CASE("loos ternary structure") {
  for (const char *name : {"zero2", "sl2", "sl2-twisted", "m4", "dmalc3"}) {
    INFO(name);
    HomAlgebra a = entry(name);
    TernaryHomAlgebra t = loos_ternary(a);
    CHECK(t.twist1 == power(a.twist, 2));
    CHECK(t.twist2 == t.twist1);
    CHECK(check_hom_lts(t).holds());
  }
  CHECK_THROWS_AS(loos_ternary(entry("assoc2")), precondition_error);
}

TEST_CASE("alpha-n lts") {
  HomAlgebra sl2 = entry("sl2");
  LinearMap m = builtin::sl2_morphism();

  TernaryHomAlgebra n0 = alpha_n_lts(sl2, m, 0);
  CHECK(n0.twist1.is_identity());
  CHECK(n0.product == loos_ternary(sl2).product); // alpha^0 changes nothing

  for (std::size_t n = 0; n <= 3; ++n) {
    INFO("n = " << n);
    CHECK(check_hom_lts(alpha_n_lts(sl2, m, n)).holds());
  }

  TernaryHomAlgebra via_twist = lts_from_malcev_morphism(sl2, m);
  TernaryHomAlgebra n2 = alpha_n_lts(sl2, m, 2);
  CHECK(n2.product == via_twist.product);
  CHECK(n2.twist1 == via_twist.twist1);
  CHECK(n2.twist2 == via_twist.twist2);

  HomAlgebra m4 = entry("m4");
  LinearMap mm = builtin::m4_morphism();
  CHECK(check_hom_lts(alpha_n_lts(m4, mm, 1)).holds());
  CHECK(alpha_n_lts(m4, mm, 2).product == lts_from_malcev_morphism(m4, mm).product);

  // twist must be the identity for the classical-input construction
  CHECK_THROWS_AS(alpha_n_lts(entry("sl2-twisted"), m, 1), precondition_error);
  LinearMap not_morphism = LinearMap::diagonal({Rational(2), Rational(1), Rational(1)});
  CHECK_THROWS_AS(alpha_n_lts(sl2, not_morphism, 1), precondition_error);
}

TEST_CASE("bol from malcev") {
  for (const char *name : {"sl2", "sl2-twisted", "m4", "dmalc3"}) {
    INFO(name);
    HomAlgebra a = entry(name);
    HomBolAlgebra b = bol_from_malcev(a);
    CHECK(b.bracket == a.product);
    CHECK(b.twist == a.twist);
    CHECK(check_hom_bol(b).holds());
    // the triple is one third of the standalone ternary tensor
    TernaryHomAlgebra t = loos_ternary(a);
    Tensor4 third = t.product;
    for (auto &c : third.a)
      c /= 3;
    CHECK(b.triple == third);
  }
  CHECK_THROWS_AS(bol_from_malcev(entry("assoc2")), precondition_error);
}

TEST_CASE("bol from hom-alternative") {
  HomAlgebra assoc2 = entry("assoc2");
  HomBolAlgebra b = bol_from_hom_alternative(assoc2);
  HomBolAlgebra ref = bol_from_malcev(commutator_algebra(assoc2));
  CHECK(b.bracket == ref.bracket);
  CHECK(b.triple == ref.triple);
  CHECK(check_hom_bol(b).holds());

  CHECK_THROWS_AS(bol_from_hom_alternative(entry("ra_np")), precondition_error);
  CHECK_THROWS_AS(bol_from_hom_alternative(entry("sl2")), precondition_error);
}

TEST_CASE("jordan triple") {
  HomAlgebra ra = entry("ra_np");
  TernaryHomAlgebra t = jordan_triple(ra);
  CHECK(t.twist1 == ra.twist);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Element val = hom_jordan_associator(ra, basis_element(3, j),
                                            basis_element(3, k),
                                            basis_element(3, i));
        for (std::size_t l = 0; l < 3; ++l)
          CHECK(t.product.at(i, j, k, l) == val[l]);
      }
  CHECK(check_hom_triple(t).holds());
  // holds for arbitrary multiplicative input, not just alternative ones
  CHECK(check_hom_triple(jordan_triple(entry("nj2"))).holds());
  CHECK(check_hom_triple(jordan_triple(entry("m4"))).holds());
}

TEST_CASE("ternary from alternative") {
  HomAlgebra ra = entry("ra_np");
  TernaryHomAlgebra t = ternary_from_alternative(ra, Side::right);
  CHECK(t.twist1 == power(ra.twist, 2));
  CHECK(t.product == jordan_triple(ra).product);
  CHECK(check_hom_lts(t).holds());

  HomAlgebra op = opposite_algebra(ra);
  TernaryHomAlgebra tl = ternary_from_alternative(op, Side::left);
  CHECK(tl.product == jordan_triple(op).product);
  CHECK(check_hom_lts(tl).holds());

  // wrong side: the precondition check rejects the input
  CHECK_THROWS_AS(ternary_from_alternative(ra, Side::left), precondition_error);
  CHECK_THROWS_AS(ternary_from_alternative(op, Side::right), precondition_error);
}

TEST_CASE("bol from one-sided alternative") {
  HomAlgebra ra = entry("ra_np");
  HomBolAlgebra b = bol_from_one_sided_alternative(ra, Side::right);
  CHECK(b.bracket == commutator_algebra(ra).product);
  CHECK(b.triple == ternary_from_alternative(ra, Side::right).product);
  CHECK(b.twist == ra.twist);
  CHECK(check_hom_bol(b).holds());

  HomAlgebra op = opposite_algebra(ra);
  CHECK(check_hom_bol(bol_from_one_sided_alternative(op, Side::left)).holds());

  CHECK_THROWS_AS(bol_from_one_sided_alternative(ra, Side::left),
                  precondition_error);
}

TEST_CASE("jordan lts") {
  HomAlgebra ra = entry("ra_np");
  TernaryHomAlgebra jl = jordan_lts(ra);
  Tensor4 doubled = jordan_triple(ra).product;
  for (auto &c : doubled.a)
    c *= 2;
  CHECK(jl.product == doubled);
  CHECK(jl.twist1 == power(ra.twist, 2));
  CHECK(check_hom_lts(jl).holds());

  // commutative Hom-Jordan input works directly
  CHECK(check_hom_lts(jordan_lts(entry("assoc2"))).holds());
  // commutative but not Hom-Jordan: rejected
  CHECK_THROWS_AS(jordan_lts(entry("nj2")), precondition_error);
}
