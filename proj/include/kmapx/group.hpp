/*!
  \file group.hpp
  \brief Generalized K-map groups: an enclosing cube minus excluded subcubes

  An exclusion-free group is an ordinary implicant rectangle. Each exclusion
  is a proper subcube of the base; by De Morgan it contributes one
  OR-of-complemented-literals factor to the group's product term, so a group
  of 2^n - 1 cells is a base minus one single-cell exclusion, and a 3x3
  square is the full map minus two 4-cell exclusions.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmapx/bool_func.hpp"
#include "kmapx/cube.hpp"
#include "kmapx/expr.hpp"

namespace kmapx
{

struct group
{
  cube base;
  std::vector<cube> exclusions; /* strictly inside base, canonical order */

  bool operator==( const group& ) const = default;
};

/*!
  \brief Check the group invariants; throws std::invalid_argument on
  violation. Every exclusion must be strictly contained in the base, the
  covered set must be non-empty, and each exclusion must remove at least one
  cell not removed by the others.
*/
void validate_group( const group& g );

/*! \brief Covered cells: base cells minus the union of all exclusion cells. */
uint64_t group_cells( const group& g );

/*!
  \brief The group's product term: one literal per fixed base trit plus, per
  exclusion, an OR of the complemented literals of the variables fixed in
  the exclusion but free in the base.
*/
expr group_expression( const group& g );

/*! \brief 2-input gate count of the group's term (closed form). */
int group_cost( const group& g );

/*! \brief True iff the group covers no OFF cell and at least one ON cell. */
bool is_valid_group( const group& g, const bool_func& f );

/*! \brief Canonical order: base id, then exclusion id lists lexicographically. */
bool group_less( const group& a, const group& b );

/*! \brief Debug form, e.g. "base --01 \\ {0001}". */
std::string group_debug_string( const group& g );

/*!
  \brief All valid groups with at most max_exclusions exclusions,
  deduplicated by covered-cell set keeping the cheapest representative
  (ties broken by canonical order), in canonical order.
*/
std::vector<group> enumerate_groups( const bool_func& f, int max_exclusions );

namespace detail
{

struct group_candidate
{
  group grp;
  uint64_t cells;
  int cost;
};

/* Same enumeration with cells and cost precomputed; backbone of the solver. */
std::vector<group_candidate> enumerate_group_candidates( const bool_func& f, int max_exclusions );

} // namespace detail

} // namespace kmapx
