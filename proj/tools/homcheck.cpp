// homcheck: identity checking, construction functors, catalog access,
// counterexample search and theorem suites for structure-constant algebras.
//
// Exit codes: 0 holds / success, 1 identity fails, 2 precondition failure,
// 64 usage or parse error.

#include "homalg/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace homalg;

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_precondition = 2;
constexpr int exit_usage = 64;

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

const std::vector<std::string> &basis_of(const Document &doc) {
  static const std::vector<std::string> empty;
  const std::vector<std::string> *basis = &empty;
  std::visit(
      [&](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (!std::is_same_v<T, LinearMap>)
          basis = &v.basis;
      },
      doc.value);
  return *basis;
}

std::string witness_text(const Witness &w, const std::vector<std::string> &basis) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (i)
      s += ", ";
    s += w.indices[i] < basis.size() ? basis[w.indices[i]]
                                     : std::to_string(w.indices[i]);
  }
  s += ")  residual = [";
  for (std::size_t i = 0; i < w.residual.size(); ++i) {
    if (i)
      s += ", ";
    s += format_rational(w.residual[i]);
  }
  s += "]";
  return s;
}

std::string report_text(const CheckReport &rep,
                        const std::vector<std::string> &basis) {
  std::string s = "identity: " + rep.identity + "\n";
  s += "verdict: " + std::string(to_string(rep.verdict)) + "\n";
  if (rep.witness)
    s += "witness: " + witness_text(*rep.witness, basis) + "\n";
  if (!rep.detail.empty())
    s += "detail: " + rep.detail + "\n";
  return s;
}

int verdict_exit(Verdict v) {
  switch (v) {
  case Verdict::holds:
    return exit_holds;
  case Verdict::fails:
    return exit_fails;
  default:
    return exit_precondition;
  }
}

int cmd_check(const std::string &file, const std::string &identity,
              const std::string &form, const std::string &report_path) {
  Document doc = parse_document(slurp(file));
  if (std::holds_alternative<LinearMap>(doc.value)) {
    std::cerr << "error: '" << file << "' is a map document; no identities apply\n";
    return exit_usage;
  }
  std::string full = identity;
  if (!form.empty())
    full += ":" + form;
  std::vector<std::string> basis = basis_of(doc);
  AlgebraValue value;
  std::visit(
      [&](auto &&v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (!std::is_same_v<T, LinearMap>)
          value = std::move(v);
      },
      doc.value);
  CheckReport rep = run_checker(full, value);
  std::string text = report_text(rep, basis);
  std::cout << text;
  if (!report_path.empty())
    spill(report_path, text);
  return verdict_exit(rep.verdict);
}

int cmd_construct(const std::string &file, const std::string &functor,
                  const std::string &morphism_file, std::size_t n,
                  const std::string &side_name, const std::string &out) {
  Document doc = parse_document(slurp(file));
  const auto *a = std::get_if<HomAlgebra>(&doc.value);
  if (!a) {
    std::cerr << "error: construct expects a binary algebra document\n";
    return exit_usage;
  }
  auto need_morphism = [&]() -> LinearMap {
    if (morphism_file.empty())
      throw parse_error("functor '" + functor + "' needs --morphism");
    Document mdoc = parse_document(slurp(morphism_file));
    const auto *m = std::get_if<LinearMap>(&mdoc.value);
    if (!m)
      throw parse_error("'" + morphism_file + "' is not a map document");
    return *m;
  };
  auto side = [&] {
    if (side_name == "right")
      return Side::right;
    if (side_name == "left")
      return Side::left;
    throw parse_error("functor '" + functor + "' needs --side right|left");
  };

  Document result;
  std::string prov = functor + "(" + (doc.name ? *doc.name : file);
  if (functor == "yau-twist") {
    result.value = yau_twist(*a, need_morphism());
    prov += ", morphism=" + morphism_file;
  } else if (functor == "loos-lts") {
    result.value = loos_ternary(*a);
  } else if (functor == "alpha-n-lts") {
    result.value = alpha_n_lts(*a, need_morphism(), n);
    prov += ", morphism=" + morphism_file + ", n=" + std::to_string(n);
  } else if (functor == "lts-from-malcev-morphism") {
    result.value = lts_from_malcev_morphism(*a, need_morphism());
    prov += ", morphism=" + morphism_file;
  } else if (functor == "bol-from-malcev") {
    result.value = bol_from_malcev(*a);
  } else if (functor == "bol-from-hom-alternative") {
    result.value = bol_from_hom_alternative(*a);
  } else if (functor == "jordan-triple") {
    result.value = jordan_triple(*a);
  } else if (functor == "ternary-from-alternative") {
    result.value = ternary_from_alternative(*a, side());
    prov += ", side=" + side_name;
  } else if (functor == "bol-one-sided") {
    result.value = bol_from_one_sided_alternative(*a, side());
    prov += ", side=" + side_name;
  } else if (functor == "jordan-lts") {
    result.value = jordan_lts(*a);
  } else {
    std::cerr << "error: unknown functor '" << functor << "'\n";
    return exit_usage;
  }
  prov += ")";
  if (doc.name)
    result.name = *doc.name + ":" + functor;
  result.provenance = prov;
  spill(out, serialize_document(result));
  std::cout << "wrote " << out << "\n";
  return exit_holds;
}

int cmd_catalog(const std::string &action, const std::string &name,
                const std::string &out) {
  if (action == "list") {
    for (const auto &n : catalog_names())
      std::cout << n << "\n";
    return exit_holds;
  }
  CatalogEntry e = get(name);
  std::string text = serialize_document(document_from_entry(e));
  if (out.empty())
    std::cout << text;
  else {
    spill(out, text);
    std::cout << "wrote " << out << "\n";
  }
  return exit_holds;
}

int cmd_search(const std::vector<std::string> &wants, const std::string &dims,
               std::size_t budget, std::uint64_t seed, const std::string &out) {
  std::vector<Predicate> preds;
  for (const auto &w : wants) {
    auto eq = w.rfind('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --want expects <checker>=<verdict>\n";
      return exit_usage;
    }
    Predicate p;
    p.checker = w.substr(0, eq);
    std::string verdict = w.substr(eq + 1);
    if (verdict == "holds")
      p.expected = Verdict::holds;
    else if (verdict == "fails")
      p.expected = Verdict::fails;
    else {
      std::cerr << "error: unknown verdict '" << verdict << "'\n";
      return exit_usage;
    }
    preds.push_back(std::move(p));
  }
  auto dots = dims.find("..");
  if (dots == std::string::npos) {
    std::cerr << "error: --dims expects <lo>..<hi>\n";
    return exit_usage;
  }
  std::size_t lo = std::stoul(dims.substr(0, dots));
  std::size_t hi = std::stoul(dims.substr(dots + 2));
  auto found = search(preds, lo, hi, budget, seed);
  if (!found) {
    std::cout << "no match within budget " << budget << "\n";
    return exit_fails;
  }
  std::string text = serialize_document(document_from_entry(*found));
  std::cout << found->provenance << "\n";
  if (out.empty())
    std::cout << text;
  else {
    spill(out, text);
    std::cout << "wrote " << out << "\n";
  }
  return exit_holds;
}

int cmd_verify(const std::string &suite, const std::string &report_path) {
  SuiteResult res = run_suite(suite);
  std::string text = "suite: " + res.suite + "\n";
  for (const auto &row : res.rows)
    text += std::string(row.pass ? "pass" : "FAIL") + "  " + row.subject + "  " +
            row.check + "  " + row.detail + "\n";
  text += res.pass() ? "result: pass\n" : "result: FAIL\n";
  std::cout << text;
  if (!report_path.empty())
    spill(report_path, text);
  return res.pass() ? exit_holds : exit_fails;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact-arithmetic identity checker for structure-constant "
               "Hom-algebras"};
  app.require_subcommand(1);

  std::string file, identity, form, report_path, out;
  auto *check = app.add_subcommand("check", "Check one identity on a document");
  check->add_option("file", file)->required();
  check->add_option("--identity", identity)->required();
  check->add_option("--form", form);
  check->add_option("--report", report_path);

  std::string cfile, functor, morphism_file, side_name;
  std::size_t n = 0;
  std::string construct_out;
  auto *construct =
      app.add_subcommand("construct", "Apply a construction functor");
  construct->add_option("file", cfile)->required();
  construct->add_option("--functor", functor)->required();
  construct->add_option("--morphism", morphism_file);
  construct->add_option("--n", n);
  construct->add_option("--side", side_name);
  construct->add_option("-o,--output", construct_out)->required();

  std::string cat_action, cat_name, cat_out;
  auto *catalog = app.add_subcommand("catalog", "List or export built-in entries");
  catalog->add_option("action", cat_action)
      ->required()
      ->check(CLI::IsMember({"list", "show"}));
  catalog->add_option("name", cat_name);
  catalog->add_option("-o,--output", cat_out);

  std::vector<std::string> wants;
  std::string dims = "2..4", search_out;
  std::size_t budget = 10000;
  std::uint64_t seed = 1;
  auto *search_cmd =
      app.add_subcommand("search", "Seeded search for an algebra meeting "
                                   "checker/verdict predicates");
  search_cmd->add_option("--want", wants)->required();
  search_cmd->add_option("--dims", dims);
  search_cmd->add_option("--budget", budget);
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("-o,--output", search_out);

  std::string suite, verify_report;
  auto *verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite)->required();
  verify->add_option("--report", verify_report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (check->parsed())
      return cmd_check(file, identity, form, report_path);
    if (construct->parsed())
      return cmd_construct(cfile, functor, morphism_file, n, side_name,
                           construct_out);
    if (catalog->parsed()) {
      if (cat_action == "show" && cat_name.empty()) {
        std::cerr << "error: catalog show needs a name\n";
        return exit_usage;
      }
      return cmd_catalog(cat_action, cat_name, cat_out);
    }
    if (search_cmd->parsed())
      return cmd_search(wants, dims, budget, seed, search_out);
    if (verify->parsed())
      return cmd_verify(suite, verify_report);
  } catch (const precondition_error &e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return exit_precondition;
  } catch (const parse_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
