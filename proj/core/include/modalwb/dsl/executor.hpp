#ifndef MODALWB_DSL_EXECUTOR_HPP_
#define MODALWB_DSL_EXECUTOR_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modalwb/algebra.hpp"
#include "modalwb/dsl/ast.hpp"

namespace modalwb::dsl {

inline constexpr int kReportSchema = 1;

struct ExecOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 12;
  int max_atoms = kMaxPowersetAtoms;
};

struct QueryResult {
  std::string query;
  std::string carrier;
  std::string decision;
  bool passed = true;
  nlohmann::json witnesses = nlohmann::json::object();
  std::optional<std::string> companion;
  std::vector<std::string> certificates;
  std::optional<std::size_t> budget_used;
  nlohmann::json details = nlohmann::json::object();
  std::string error;
};

struct Report {
  std::vector<QueryResult> results;
  // DOT text of every frame a query produced, in query order.
  std::vector<std::string> dot_graphs;

  // 0 when every record passed, 1 otherwise.
  int exit_code() const;
  nlohmann::json to_json(const ExecOptions& opts) const;
  std::string to_text() const;
};

// Static checks: declared names of the right kind, arity, carrier agreement,
// element syntax against the carrier and the atom cap. Throws Error with a
// "line:column: " prefix. Every failure here maps to exit status 2.
void validate(const Script& script, const ExecOptions& opts = {});

// Validates, then runs statements in order. Runtime errors become failed
// records; only validation errors throw.
Report execute(const Script& script, const ExecOptions& opts = {});

Element evaluate(const ElemExpr& e, const Carrier& c);

}  // namespace modalwb::dsl

#endif  // MODALWB_DSL_EXECUTOR_HPP_
