#pragma once

#include <string>

#include "kmapx/solver.hpp"

namespace kmapx
{

/*!
  \brief ASCII K-map for 2..4 variables: Gray-coded headers, cells 0/1/-.

  Layout follows the common textbook convention: n=4 has columns ab and rows cd, n=3
  columns ab and rows c, n=2 columns a and rows b, Gray sequence
  00,01,11,10. With a cover, each group gets a letter tag, covered cells
  list their tags and a legend line per group shows its expression.
  Wraparound groups simply tag their disjoint border cells.
*/
std::string render_kmap( const bool_func& f, const cover* cov = nullptr );

} // namespace kmapx
