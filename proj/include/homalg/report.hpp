#ifndef HOMALG_REPORT_HPP
#define HOMALG_REPORT_HPP

#include "homalg/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homalg {

enum class Verdict { holds, fails, precondition_failed };

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::holds:
    return "holds";
  case Verdict::fails:
    return "fails";
  default:
    return "precondition-failed";
  }
}

/// Basis-index tuple at which an identity's residual is nonzero.
struct Witness {
  std::vector<std::size_t> indices;
  Element residual;
};

struct CheckReport {
  std::string identity;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  /// Name of the failing sub-identity or precondition, when applicable.
  std::string detail;

  bool holds() const { return verdict == Verdict::holds; }

  static CheckReport pass(std::string name) { return {std::move(name), Verdict::holds, {}, {}}; }

  static CheckReport fail(std::string name, Witness w, std::string detail = {}) {
    return {std::move(name), Verdict::fails, std::move(w), std::move(detail)};
  }

  static CheckReport precondition(std::string name, std::string which,
                                  std::optional<Witness> w = {}) {
    return {std::move(name), Verdict::precondition_failed, std::move(w), std::move(which)};
  }
};

/// Thrown by constructions whose input fails a stated hypothesis.
class precondition_error : public std::runtime_error {
public:
  precondition_error(const std::string &op, CheckReport rep)
      : std::runtime_error(op + ": precondition failed (" + rep.identity +
                           (rep.detail.empty() ? "" : ", " + rep.detail) + ")"),
        report(std::move(rep)) {}
  CheckReport report;
};

} // namespace homalg

#endif
