// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "ncproof/formula.hpp"

namespace testutil {

inline ncproof::Formula F(std::string_view text, const ncproof::Field& field = ncproof::Field::rationals()) {
  ncproof::FormulaSyntax syntax;
  syntax.field = field;
  return ncproof::parse_formula(text, syntax);
}

inline ncproof::NCPoly nc(std::string_view text, const ncproof::Field& field = ncproof::Field::rationals()) {
  return ncproof::expand(F(text, field), field);
}

inline ncproof::CPoly cp(std::string_view text, const ncproof::Field& field = ncproof::Field::rationals()) {
  return ncproof::erase_order(nc(text, field));
}

inline ncproof::VarId x(std::uint32_t i) { return ncproof::VarId::x(i); }
inline ncproof::VarId X(std::uint32_t i) { return ncproof::VarId::bar(i); }

}  // namespace testutil
