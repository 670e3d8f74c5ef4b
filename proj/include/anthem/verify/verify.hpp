#pragma once

#include <anthem/asp/syntax.hpp>
#include <anthem/atp/atp.hpp>
#include <anthem/control/control.hpp>
#include <anthem/fol/syntax.hpp>
#include <anthem/translate/translate.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace anthem::verify {

using atp::NamedFormula;
using control::Direction;

enum class ClaimStatus { Pending, Trivial, Proven, NotProven, Timeout, Error };

std::string_view to_string(ClaimStatus status);

struct Claim {
  std::string name;
  Direction direction = Direction::Forward;
  std::vector<NamedFormula> axioms;
  fol::Formula conjecture;
  ClaimStatus status = ClaimStatus::Pending;
  /// Claims that must be proven before this one may use their formulas.
  std::vector<std::string> requires_claims;
};

/// True when the conjecture is `#true` or alpha-equivalent to one of the axioms.
bool is_trivial(const Claim &claim);

struct Task {
  std::string name;
  std::vector<Claim> claims;
  std::vector<std::string> warnings;
};

/// One claim per formula of each program: the gamma-translated formulas of one
/// side plus the ordering axioms as axioms, a gamma-translated formula of the
/// other side as conjecture. Claims already among their axioms are marked trivial.
Task assemble_strong_equivalence(const asp::Program &left, const asp::Program &right,
                                 translate::TranslationKind representation = translate::TranslationKind::TauStar,
                                 Direction direction = Direction::Universal);

/// Base case `forall X F(n)` and step `forall X N (N >= n and F(N) -> F(N + 1))`
/// of `forall X N (N >= n -> F(N))` (universal closure applied first).
/// Throws ShapeError when the formula does not match.
std::pair<fol::Formula, fol::Formula> split_inductive_lemma(const fol::Formula &formula);

struct RenamingMap {
  std::map<Predicate, Predicate> mapping;

  bool operator==(const RenamingMap &) const = default;
};

/// Renames every predicate of `theory` outside the guide's inputs and outputs:
/// the original name is kept when free, otherwise `_p` is appended until it
/// is. New names are added to `taken`.
std::pair<fol::Theory, RenamingMap> rename_private_predicates(const fol::Theory &theory,
                                                              const control::UserGuide &guide, PredicateSet &taken);

/// Claims for the lemmas of `outline` that apply to `direction`, each proved from
/// `base` plus all earlier outline formulas of that direction. The returned
/// axioms are `base` extended by every outline formula.
struct OutlineSequence {
  std::vector<Claim> claims;
  std::vector<NamedFormula> axioms;
  std::vector<std::string> requirements;
};
OutlineSequence sequence_outline(const control::ProofOutline &outline, const std::vector<NamedFormula> &base,
                                 Direction direction, const std::map<std::string, fol::Sort> &placeholders = {});

using Side = std::variant<asp::Program, control::Specification>;

struct ExternalOptions {
  Direction direction = Direction::Universal;
  bool bypass_tightness = false;
};

/// Forward claims prove the right side's public part from the left side, backward
/// claims the converse. A specification side is expected on the left.
/// Throws RefusedNotTight / RefusedPrivateRecursion unless bypassed, and
/// ValidationError for inconsistent inputs.
Task assemble_external_equivalence(const Side &left, const Side &right, const control::UserGuide &guide,
                                   const control::ProofOutline &outline, const ExternalOptions &options = {});

/// Predicate renamings used by assemble_external_equivalence, for reporting.
std::pair<RenamingMap, RenamingMap> private_renamings(const asp::Program &left, const asp::Program &right,
                                                      const control::UserGuide &guide,
                                                      const control::ProofOutline &outline = {});

enum class Verdict { Success, Failure, Inconclusive };

std::string_view to_string(Verdict verdict);

struct ReportEntry {
  std::string claim;
  Direction direction = Direction::Forward;
  ClaimStatus status = ClaimStatus::Pending;
  double seconds = 0;
  std::string detail;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  Verdict verdict = Verdict::Success;
};

struct RunOptions {
  /// Directory to write each claim's problem to, or empty.
  std::string save_problems;
  /// Skips prover calls; non-trivial claims stay not proven.
  bool dry_run = false;
  /// Called from worker threads after each claim finishes.
  std::function<void(const ReportEntry &)> on_result;
};

/// Runs non-trivial claims through the prover, respecting claim dependencies and
/// running independent claims concurrently (at most `config.cores` at a time).
VerificationReport run_verification(Task &task, const atp::ProverConfig &config, const RunOptions &options = {});

/// Problem for a claim, named `<task>_<claim>_<direction>`.
atp::Problem problem_for(const Task &task, const Claim &claim);

} // namespace anthem::verify
