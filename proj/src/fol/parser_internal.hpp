#pragma once

#include <anthem/fol/syntax.hpp>

#include "lexer.hpp"

namespace anthem::fol::detail {

/// Parses one formula from a shared token stream; used by the control-language parsers.
Formula parse_formula(anthem::detail::TokenStream &tokens);

/// Parses a variable token (`X`, `X$`, `X$i`, ...) into a sorted variable.
Variable parse_variable(const anthem::detail::Token &token);

} // namespace anthem::fol::detail
