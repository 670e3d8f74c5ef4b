#pragma once

// TPTP problem emission and external prover orchestration.

#include <anthem/fol/syntax.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace anthem::atp {

struct NamedFormula {
  std::string name;
  fol::Formula formula;

  bool operator==(const NamedFormula &) const = default;
};

struct Problem {
  std::string name;
  std::vector<NamedFormula> axioms;
  NamedFormula conjecture;
};

/// Symbols a problem uses, collected for declarations and background axioms.
struct Signature {
  PredicateSet predicates;
  std::set<std::string> symbols;
  std::map<std::string, fol::Sort> function_constants;
};

Signature signature(const Problem &problem);

/// Background theory for standard interpretations, as TFF annotated formulas:
/// sort and symbol declarations, injectivity and disjointness of the integer and
/// symbol embeddings, and the total order on the general sort with #inf and #sup
/// at its ends. Symbolic constants are ordered lexicographically.
std::vector<std::string> standard_axioms(const Signature &signature);

/// Complete TFF problem text: standard axioms, declarations, axioms, conjecture.
/// Throws ClosureError when a formula has free variables.
std::string emit_tptp(const Problem &problem);

enum class ProverStatus { Theorem, CounterSatisfiable, Timeout, GaveUp, Error };

std::string_view to_string(ProverStatus status);

/// Status from the `SZS status <Status>` line; nullopt when no such line exists.
std::optional<ProverStatus> parse_szs(std::string_view output);

struct ProverResult {
  ProverStatus status = ProverStatus::Error;
  double seconds = 0;
  std::string output;
};

enum class ProverKind { Auto, Vampire, Z3 };

struct ProverConfig {
  ProverKind kind = ProverKind::Auto;
  std::string binary;          // empty: resolved from ANTHEM_PROVER or PATH
  unsigned time_limit = 60;    // seconds per problem
  unsigned cores = 1;
  std::vector<std::string> extra_flags;
};

/// Fills in binary and kind. Throws ProverUnavailable when nothing can be found.
ProverConfig resolve(const ProverConfig &config);

/// Command line (without the problem path) for a resolved configuration.
std::vector<std::string> command_line(const ProverConfig &config);

/// Runs one problem in a subprocess. Throws ProverUnavailable when the binary
/// cannot be started.
ProverResult run_prover(const std::string &problem_text, const ProverConfig &config);

} // namespace anthem::atp
