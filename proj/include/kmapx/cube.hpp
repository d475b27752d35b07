/*!
  \file cube.hpp
  \brief Subcube algebra over the boolean n-space

  A cube holds one trit per variable: '0' (fixed to 0), '1' (fixed to 1) or
  '-' (free). It is the algebraic form of a K-map rectangle; cells adjacent
  across the map border share a cube, so wraparound needs no special case.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kmapx/common.hpp"

namespace kmapx
{

class cube
{
public:
  cube() = default;

  /*! \brief All-free cube covering the whole space. */
  explicit cube( int var_count );

  /*! \brief Parse the canonical trit-string form, e.g. "--01". */
  static cube from_string( std::string_view trits );

  /*! \brief Fully fixed cube holding a single cell. */
  static cube from_minterm( int var_count, int minterm );

  /*! \brief Inverse of id(). */
  static cube from_id( int var_count, int id );

  int var_count() const { return var_count_; }
  char trit( int var ) const;

  int literal_count() const;
  int free_count() const { return var_count_ - literal_count(); }
  int cell_count() const { return 1 << free_count(); }

  /*! \brief Bitmask of the minterms matching every fixed trit. */
  uint64_t cells() const;

  bool contains_minterm( int minterm ) const;

  /*! \brief True iff every fixed trit of this cube is fixed equally in inner. */
  bool contains( const cube& inner ) const;

  /*! \brief Rank in canonical order: lexicographic over trit strings, '0' < '1' < '-'. */
  int id() const;

  std::string to_string() const;

  bool operator==( const cube& ) const = default;

private:
  uint8_t var_count_ = 0;
  uint8_t fixed_ = 0; /* minterm-bit positions carrying a fixed value */
  uint8_t value_ = 0; /* the fixed values; subset of fixed_ */
};

/*! \brief All 3^var_count cubes in canonical order. */
std::vector<cube> all_cubes( int var_count );

bool cube_less( const cube& a, const cube& b );

} // namespace kmapx
