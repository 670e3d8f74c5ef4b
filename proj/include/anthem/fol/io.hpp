#pragma once

#include <anthem/fol/syntax.hpp>

#include <string>
#include <string_view>

namespace anthem::fol {

/// Parses a single formula in the custom syntax; a trailing `.` is optional.
/// Variables: `X`, `X$g`, `X$general` (general); `X$`, `X$i`, `X$integer` (integer);
/// `X$s`, `X$symbol` (symbol). Lowercase names with a sort suffix (`n$i`) are
/// function constants. Throws SyntaxError or SortError.
Formula parse_formula(std::string_view text);

/// Parses a sequence of `.`-terminated formulas.
Theory parse_theory(std::string_view text);

std::string format_term(const Term &term);
std::string format_variable(const Variable &variable);
std::string format_default(const Formula &formula);
/// One formula per line, each terminated by `.`.
std::string format_default(const Theory &theory);

/// TPTP TFF rendering of a closed formula. Throws ClosureError when the formula
/// has free variables.
std::string format_tptp(const Formula &formula);

} // namespace anthem::fol
