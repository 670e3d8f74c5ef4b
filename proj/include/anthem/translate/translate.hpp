#pragma once

#include <anthem/asp/syntax.hpp>
#include <anthem/fol/syntax.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace anthem::translate {

enum class TranslationKind { TauStar, Natural, Mu, Completion, Gamma };

std::string_view to_string(TranslationKind kind);
/// Accepts the CLI spellings `tau-star`, `natural`, `mu`, `completion`, `gamma`.
std::optional<TranslationKind> parse_translation_kind(std::string_view text);

/// Formula stating that `z` is a value of `term`. Helper variables are chosen
/// fresh with respect to `taken`.
fol::Formula val(const asp::Term &term, const fol::Variable &z, const std::set<std::string> &taken = {});

fol::Theory tau_star(const asp::Program &program);
fol::Formula tau_star(const asp::Rule &rule);

bool is_regular(const asp::Rule &rule);

/// Throws NotRegular naming the first rule outside the regular fragment.
fol::Theory natural(const asp::Program &program);
fol::Formula natural(const asp::Rule &rule);

/// Natural translation for regular rules, tau-star for the rest.
fol::Theory mu(const asp::Program &program);

} // namespace anthem::translate
