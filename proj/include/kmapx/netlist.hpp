#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kmapx/expr.hpp"

namespace kmapx
{

/*!
  \brief Line-based gate list: "input <names>", one "nK = AND|OR|NOT x y"
  line per gate, "output f <net>". K-ary nodes decompose left-associated
  into k-1 two-input gates, so the AND/OR line count equals gate_cost.
  Inverted inputs share one NOT line per variable.
*/
void emit_netlist( const expr& e, std::ostream& os, const std::vector<std::string>& var_names,
                   const std::vector<std::string>& comments = {} );

std::string emit_netlist( const expr& e, const std::vector<std::string>& var_names,
                          const std::vector<std::string>& comments = {} );

} // namespace kmapx
