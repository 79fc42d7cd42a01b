#ifndef HOMALG_IO_HPP
#define HOMALG_IO_HPP

#include "homalg/catalog.hpp"

#include <json.hpp> // vendored nlohmann/json

#include <algorithm>
#include <set>
#include <variant>

namespace homalg {

/// A parsed `.homalg` document: an algebra or a linear map, plus optional
/// metadata. Rationals travel as "p" or "p/q" strings; products are sparse
/// (omitted slots are zero); duplicate product slots are an error.
struct Document {
  std::variant<HomAlgebra, TernaryHomAlgebra, HomBolAlgebra, LinearMap> value;
  std::optional<std::string> name;
  std::optional<std::string> provenance;
  std::vector<Claim> claims;
};

namespace io_detail {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

inline Verdict verdict_from_string(const std::string &s) {
  if (s == "holds")
    return Verdict::holds;
  if (s == "fails")
    return Verdict::fails;
  if (s == "precondition-failed")
    return Verdict::precondition_failed;
  throw parse_error("unknown verdict '" + s + "'");
}

inline std::size_t label_index(const std::vector<std::string> &basis,
                               const std::string &label) {
  auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end())
    throw parse_error("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

inline LinearMap parse_matrix(const json &j, std::size_t dim, const char *what) {
  if (!j.is_array() || j.size() != dim)
    throw parse_error(std::string(what) + ": expected " + std::to_string(dim) +
                      " rows");
  LinearMap m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto &row = j[i];
    if (!row.is_array() || row.size() != dim)
      throw parse_error(std::string(what) + ": row " + std::to_string(i) +
                        " has wrong length");
    for (std::size_t k = 0; k < dim; ++k)
      m.at(i, k) = parse_rational(row[k].get<std::string>());
  }
  return m;
}

inline ojson matrix_to_json(const LinearMap &m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.dim; ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.dim; ++j)
      row.push_back(format_rational(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void parse_components(const json &j, const std::vector<std::string> &basis,
                             Element &out) {
  if (!j.is_object())
    throw parse_error("components must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    out[label_index(basis, it.key())] = parse_rational(it.value().get<std::string>());
}

inline void parse_binary_products(const json &j, const std::vector<std::string> &basis,
                                  Tensor3 &c) {
  if (!j.is_array())
    throw parse_error("products must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto &entry : j) {
    std::size_t i = label_index(basis, entry.at("left").get<std::string>());
    std::size_t jj = label_index(basis, entry.at("right").get<std::string>());
    if (!seen.insert({i, jj}).second)
      throw parse_error("duplicate product slot (" + basis[i] + ", " + basis[jj] + ")");
    Element row = zero_element(c.dim);
    parse_components(entry.at("components"), basis, row);
    for (std::size_t k = 0; k < c.dim; ++k)
      c.at(i, jj, k) = row[k];
  }
}

inline void parse_ternary_products(const json &j,
                                   const std::vector<std::string> &basis, Tensor4 &t) {
  if (!j.is_array())
    throw parse_error("products must be an array");
  std::set<std::array<std::size_t, 3>> seen;
  for (const auto &entry : j) {
    const auto &args = entry.at("args");
    if (!args.is_array() || args.size() != 3)
      throw parse_error("ternary product entry needs exactly 3 args");
    std::array<std::size_t, 3> idx{};
    for (std::size_t p = 0; p < 3; ++p)
      idx[p] = label_index(basis, args[p].get<std::string>());
    if (!seen.insert(idx).second)
      throw parse_error("duplicate ternary product slot (" + basis[idx[0]] + ", " +
                        basis[idx[1]] + ", " + basis[idx[2]] + ")");
    Element row = zero_element(t.dim);
    parse_components(entry.at("components"), basis, row);
    for (std::size_t l = 0; l < t.dim; ++l)
      t.at(idx[0], idx[1], idx[2], l) = row[l];
  }
}

inline ojson binary_products_to_json(const Tensor3 &c,
                                     const std::vector<std::string> &basis) {
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = 0; j < c.dim; ++j) {
      ojson comp = ojson::object();
      for (std::size_t k = 0; k < c.dim; ++k)
        if (c.at(i, j, k) != 0)
          comp[basis[k]] = format_rational(c.at(i, j, k));
      if (!comp.empty())
        arr.push_back(ojson{{"left", basis[i]}, {"right", basis[j]},
                            {"components", std::move(comp)}});
    }
  return arr;
}

inline ojson ternary_products_to_json(const Tensor4 &t,
                                      const std::vector<std::string> &basis) {
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j)
      for (std::size_t k = 0; k < t.dim; ++k) {
        ojson comp = ojson::object();
        for (std::size_t l = 0; l < t.dim; ++l)
          if (t.at(i, j, k, l) != 0)
            comp[basis[l]] = format_rational(t.at(i, j, k, l));
        if (!comp.empty())
          arr.push_back(ojson{{"args", {basis[i], basis[j], basis[k]}},
                              {"components", std::move(comp)}});
      }
  return arr;
}

inline std::vector<std::string> parse_basis(const json &j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim)
    throw parse_error("basis must list exactly dim labels");
  std::vector<std::string> basis;
  std::set<std::string> seen;
  for (const auto &l : j) {
    std::string s = l.get<std::string>();
    if (!seen.insert(s).second)
      throw parse_error("duplicate basis label '" + s + "'");
    basis.push_back(std::move(s));
  }
  return basis;
}

inline ojson claims_to_json(const std::vector<Claim> &claims,
                            const std::vector<std::string> &basis) {
  ojson arr = ojson::array();
  for (const auto &c : claims) {
    ojson jc{{"checker", c.checker}, {"verdict", to_string(c.expected)}};
    if (c.witness) {
      ojson w = ojson::array();
      for (auto i : *c.witness)
        w.push_back(basis.at(i));
      jc["witness"] = std::move(w);
    }
    arr.push_back(std::move(jc));
  }
  return arr;
}

inline std::vector<Claim> parse_claims(const json &j,
                                       const std::vector<std::string> &basis) {
  std::vector<Claim> claims;
  for (const auto &jc : j) {
    Claim c;
    c.checker = jc.at("checker").get<std::string>();
    c.expected = verdict_from_string(jc.at("verdict").get<std::string>());
    if (jc.contains("witness")) {
      std::vector<std::size_t> w;
      for (const auto &l : jc.at("witness"))
        w.push_back(label_index(basis, l.get<std::string>()));
      c.witness = std::move(w);
    }
    claims.push_back(std::move(c));
  }
  return claims;
}

} // namespace io_detail

inline Document parse_document(const std::string &text) {
  namespace d = io_detail;
  d::json j;
  try {
    j = d::json::parse(text);
  } catch (const nlohmann::json::exception &ex) {
    throw parse_error(std::string("document syntax error: ") + ex.what());
  }
  try {
    Document doc;
    std::string kind = j.at("kind").get<std::string>();
    if (j.contains("name"))
      doc.name = j.at("name").get<std::string>();
    if (j.contains("provenance"))
      doc.provenance = j.at("provenance").get<std::string>();
    auto dim_j = j.at("dim").get<long long>();
    if (dim_j < 1)
      throw parse_error("dim must be positive");
    std::size_t dim = static_cast<std::size_t>(dim_j);

    if (kind == "map") {
      LinearMap m = d::parse_matrix(j.at("matrix"), dim, "matrix");
      doc.value = std::move(m);
      return doc;
    }

    std::vector<std::string> basis = d::parse_basis(j.at("basis"), dim);
    if (kind == "binary") {
      HomAlgebra a(dim, basis);
      a.twist = d::parse_matrix(j.at("twist"), dim, "twist");
      d::parse_binary_products(j.at("products"), basis, a.product);
      if (j.contains("claims"))
        doc.claims = d::parse_claims(j.at("claims"), basis);
      doc.value = std::move(a);
    } else if (kind == "ternary") {
      TernaryHomAlgebra t(dim, basis);
      const auto &tw = j.at("twists");
      if (!tw.is_array() || tw.size() != 2)
        throw parse_error("ternary document needs a pair of twists");
      t.twist1 = d::parse_matrix(tw[0], dim, "twists[0]");
      t.twist2 = d::parse_matrix(tw[1], dim, "twists[1]");
      d::parse_ternary_products(j.at("products"), basis, t.product);
      if (j.contains("claims"))
        doc.claims = d::parse_claims(j.at("claims"), basis);
      doc.value = std::move(t);
    } else if (kind == "bol") {
      HomBolAlgebra b(dim, basis);
      b.twist = d::parse_matrix(j.at("twist"), dim, "twist");
      d::parse_binary_products(j.at("bracket"), basis, b.bracket);
      d::parse_ternary_products(j.at("triple"), basis, b.triple);
      if (j.contains("claims"))
        doc.claims = d::parse_claims(j.at("claims"), basis);
      doc.value = std::move(b);
    } else {
      throw parse_error("unknown document kind '" + kind + "'");
    }
    return doc;
  } catch (const nlohmann::json::exception &ex) {
    throw parse_error(std::string("malformed document: ") + ex.what());
  }
}

/// Canonical serialization: fixed key order, index-sorted sparse entries,
/// lowest-term rationals. Byte-identical across runs and platforms.
inline std::string serialize_document(const Document &doc) {
  namespace d = io_detail;
  d::ojson j;
  std::visit(
      [&](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LinearMap>) {
          j["kind"] = "map";
          if (doc.name)
            j["name"] = *doc.name;
          j["dim"] = v.dim;
          j["matrix"] = d::matrix_to_json(v);
        } else if constexpr (std::is_same_v<T, HomAlgebra>) {
          j["kind"] = "binary";
          if (doc.name)
            j["name"] = *doc.name;
          j["dim"] = v.dim;
          j["basis"] = v.basis;
          j["twist"] = d::matrix_to_json(v.twist);
          j["products"] = d::binary_products_to_json(v.product, v.basis);
        } else if constexpr (std::is_same_v<T, TernaryHomAlgebra>) {
          j["kind"] = "ternary";
          if (doc.name)
            j["name"] = *doc.name;
          j["dim"] = v.dim;
          j["basis"] = v.basis;
          j["twists"] = d::ojson::array(
              {d::matrix_to_json(v.twist1), d::matrix_to_json(v.twist2)});
          j["products"] = d::ternary_products_to_json(v.product, v.basis);
        } else {
          j["kind"] = "bol";
          if (doc.name)
            j["name"] = *doc.name;
          j["dim"] = v.dim;
          j["basis"] = v.basis;
          j["twist"] = d::matrix_to_json(v.twist);
          j["bracket"] = d::binary_products_to_json(v.bracket, v.basis);
          j["triple"] = d::ternary_products_to_json(v.triple, v.basis);
        }
      },
      doc.value);
  if (!doc.claims.empty()) {
    const std::vector<std::string> *basis = nullptr;
    std::visit(
        [&](const auto &v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (!std::is_same_v<T, LinearMap>)
            basis = &v.basis;
        },
        doc.value);
    if (basis)
      j["claims"] = d::claims_to_json(doc.claims, *basis);
  }
  if (doc.provenance)
    j["provenance"] = *doc.provenance;
  return j.dump(2) + "\n";
}

inline Document document_from_entry(const CatalogEntry &e) {
  Document doc;
  doc.name = e.name;
  doc.provenance = e.provenance;
  doc.claims = e.claims;
  std::visit([&](const auto &v) { doc.value = v; }, e.payload);
  return doc;
}

} // namespace homalg

#endif
