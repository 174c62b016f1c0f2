#pragma once

#include "whf/pc_symbol.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace whf {

using Symbol = std::variant<RationalSymbol, PCSymbol>;

PCSymbol as_pc(const Symbol& s);
cplx eval_symbol(const Symbol& s, double x);

// key = value lines, '#' starts a comment. Complex numbers are "re,im",
// lists are space separated.
Symbol parse_symbol(std::string_view text);
std::string serialize_symbol(const Symbol& s);

/// A path to a symbol file, or one of the shorthands
/// r^K | sign:<lambda> | tanh:<lambda> | power:<alpha>.
Symbol load_symbol(const std::string& spec);

} // namespace whf
