/*!
  \file solver.hpp
  \brief Minimum-gate-count covers over conventional or extended candidates

  Conventional mode covers the ON-set with prime implicants only and yields
  a sum of products; extended mode draws from the generalized group
  candidates. The exact method is a branch-and-bound over ON cells with an
  admissible lower bound; greedy is the documented scoring heuristic.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmapx/group.hpp"

namespace kmapx
{

enum class group_mode
{
  conventional,
  extended
};

enum class solve_method
{
  exact,
  greedy,
  oracle
};

std::string to_string( group_mode m );
std::string to_string( solve_method m );

struct solver_config
{
  int max_exclusions = 2;
  solve_method method = solve_method::exact;
  uint64_t node_budget = 50'000'000;
};

struct cover
{
  bool_func func;
  std::vector<group> groups; /* canonical order */
  group_mode mode = group_mode::extended;
  solve_method method = solve_method::exact;

  /*! \brief Empty cover: the function has no ON cell. */
  bool constant_zero() const { return groups.empty(); }
};

struct minimize_result
{
  cover best;
  bool optimal = true; /* false iff the exact search hit the node budget */
  uint64_t search_nodes = 0;
};

/*! \brief Maximal implicants (cells within ON u DC, touching ON), canonical order. */
std::vector<cube> prime_implicants( const bool_func& f );

/*! \brief Union of the cover's group cells. */
uint64_t covered_cells( const cover& c );

/*! \brief Sum of group costs plus one joining OR gate per group beyond the first. */
int cover_cost( const cover& c );

/*! \brief OR of the group terms; constant 0 for an empty cover. */
expr cover_expression( const cover& c );

/*! \brief Covered cells include every ON cell and no OFF cell. */
bool verify_cover( const cover& c );

/*! \brief No group can be dropped without uncovering an ON cell. */
bool cover_irredundant( const cover& c );

/*!
  \brief Drop redundant groups, highest cost first (ties by canonical
  order), until every group covers an ON cell of its own.
*/
cover irredundant( cover c );

minimize_result minimize( const bool_func& f, group_mode mode, const solver_config& config = {} );

} // namespace kmapx
