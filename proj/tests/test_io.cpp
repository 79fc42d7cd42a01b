#include "homalg/io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace homalg;

namespace {

std::string canon(const CatalogEntry &e) {
  return serialize_document(document_from_entry(e));
}

} // namespace

TEST_CASE("round trip is byte-stable for every catalog entry") {
  for (const auto &name : catalog_names()) {
    INFO(name);
    std::string text = canon(get(name));
    Document doc = parse_document(text);
    CHECK(serialize_document(doc) == text);
  }
}

TEST_CASE("parsed binary document matches the source algebra") {
  CatalogEntry e = get("sl2-twisted");
  Document doc = parse_document(canon(e));
  const auto &orig = std::get<HomAlgebra>(e.payload);
  const auto &back = std::get<HomAlgebra>(doc.value);
  CHECK(back.dim == orig.dim);
  CHECK(back.basis == orig.basis);
  CHECK(back.product == orig.product);
  CHECK(back.twist == orig.twist);
  CHECK(doc.name == e.name);
  CHECK(doc.provenance == e.provenance);
  REQUIRE(doc.claims.size() == e.claims.size());
  for (std::size_t i = 0; i < doc.claims.size(); ++i) {
    CHECK(doc.claims[i].checker == e.claims[i].checker);
    CHECK(doc.claims[i].expected == e.claims[i].expected);
    CHECK(doc.claims[i].witness == e.claims[i].witness);
  }
}

TEST_CASE("claim witnesses travel as basis labels") {
  std::string text = canon(get("m4"));
  CHECK(text.find("\"witness\"") != std::string::npos);
  CHECK(text.find("\"e1\"") != std::string::npos);
  Document doc = parse_document(text);
  bool found = false;
  for (const auto &c : doc.claims)
    if (c.checker == "hom-lie") {
      REQUIRE(c.witness.has_value());
      CHECK(*c.witness == std::vector<std::size_t>{0, 1, 2});
      found = true;
    }
  CHECK(found);
}

TEST_CASE("ternary and bol documents round trip") {
  HomAlgebra sl2 = std::get<HomAlgebra>(get("sl2").payload);

  Document t;
  t.name = "sl2:loos";
  t.value = loos_ternary(sl2);
  std::string ttext = serialize_document(t);
  Document tback = parse_document(ttext);
  CHECK(serialize_document(tback) == ttext);
  CHECK(std::get<TernaryHomAlgebra>(tback.value).product ==
        std::get<TernaryHomAlgebra>(t.value).product);

  Document b;
  b.name = "sl2:bol";
  b.value = bol_from_malcev(sl2);
  std::string btext = serialize_document(b);
  Document bback = parse_document(btext);
  CHECK(serialize_document(bback) == btext);
  const auto &bb = std::get<HomBolAlgebra>(bback.value);
  const auto &ob = std::get<HomBolAlgebra>(b.value);
  CHECK(bb.bracket == ob.bracket);
  CHECK(bb.triple == ob.triple);
  CHECK(bb.twist == ob.twist);
}

TEST_CASE("map documents round trip") {
  Document m;
  m.name = "sl2 self-morphism";
  m.value = LinearMap::diagonal({Rational(1), Rational(2), Rational(1, 2)});
  std::string text = serialize_document(m);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  Document back = parse_document(text);
  CHECK(std::get<LinearMap>(back.value) == std::get<LinearMap>(m.value));
  CHECK(serialize_document(back) == text);
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse_document("not json"), parse_error);
  CHECK_THROWS_AS(parse_document("{}"), parse_error);
  CHECK_THROWS_AS(parse_document(R"({"kind":"widget","dim":1,"basis":["x"]})"),
                  parse_error);
  CHECK_THROWS_AS(parse_document(R"({"kind":"binary","dim":0})"), parse_error);

  // basis length mismatch
  CHECK_THROWS_AS(parse_document(R"({"kind":"binary","dim":2,"basis":["x"],
    "twist":[["1","0"],["0","1"]],"products":[]})"),
                  parse_error);
  // duplicate basis label
  CHECK_THROWS_AS(parse_document(R"({"kind":"binary","dim":2,"basis":["x","x"],
    "twist":[["1","0"],["0","1"]],"products":[]})"),
                  parse_error);
  // twist row of wrong length
  CHECK_THROWS_AS(parse_document(R"({"kind":"binary","dim":2,"basis":["x","y"],
    "twist":[["1","0"],["0"]],"products":[]})"),
                  parse_error);
  // unknown label in a product entry
  CHECK_THROWS_AS(parse_document(R"({"kind":"binary","dim":2,"basis":["x","y"],
    "twist":[["1","0"],["0","1"]],
    "products":[{"left":"z","right":"y","components":{"x":"1"}}]})"),
                  parse_error);
  // duplicate product slot
  CHECK_THROWS_AS(parse_document(R"({"kind":"binary","dim":2,"basis":["x","y"],
    "twist":[["1","0"],["0","1"]],
    "products":[{"left":"x","right":"y","components":{"x":"1"}},
                {"left":"x","right":"y","components":{"y":"1"}}]})"),
                  parse_error);
  // decimal scalar
  CHECK_THROWS_AS(parse_document(R"({"kind":"binary","dim":2,"basis":["x","y"],
    "twist":[["1.5","0"],["0","1"]],"products":[]})"),
                  parse_error);
  // ternary document must carry exactly two twists
  CHECK_THROWS_AS(parse_document(R"({"kind":"ternary","dim":1,"basis":["x"],
    "twists":[[["1"]]],"products":[]})"),
                  parse_error);
  // ternary product entry with wrong arity
  CHECK_THROWS_AS(parse_document(R"({"kind":"ternary","dim":1,"basis":["x"],
    "twists":[[["1"]],[["1"]]],
    "products":[{"args":["x","x"],"components":{"x":"1"}}]})"),
                  parse_error);
  // duplicate ternary slot
  CHECK_THROWS_AS(parse_document(R"({"kind":"ternary","dim":1,"basis":["x"],
    "twists":[[["1"]],[["1"]]],
    "products":[{"args":["x","x","x"],"components":{"x":"1"}},
                {"args":["x","x","x"],"components":{"x":"2"}}]})"),
                  parse_error);
  // unknown verdict in a claim
  CHECK_THROWS_AS(parse_document(R"({"kind":"binary","dim":1,"basis":["x"],
    "twist":[["1"]],"products":[],
    "claims":[{"checker":"hom-lie","verdict":"maybe"}]})"),
                  parse_error);
}

TEST_CASE("omitted product slots read as zero") {
  Document doc = parse_document(R"({"kind":"binary","dim":2,"basis":["x","y"],
    "twist":[["1","0"],["0","1"]],
    "products":[{"left":"x","right":"x","components":{"y":"3/2"}}]})");
  const auto &a = std::get<HomAlgebra>(doc.value);
  CHECK(a.product.at(0, 0, 1) == Rational(3, 2));
  CHECK(a.product.at(0, 1, 0) == 0);
  CHECK(a.product.at(1, 1, 1) == 0);
}
