/*!
  \file expr.hpp
  \brief Boolean expression trees and the 2-input gate cost model

  Cost counts every k-ary AND/OR node as k-1 two-input gates; inverters are
  free (complemented inputs assumed available). Depth assumes a balanced
  decomposition of k-ary nodes.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kmapx/bool_func.hpp"
#include "kmapx/common.hpp"

namespace kmapx
{

struct expr
{
  enum class op : uint8_t
  {
    constant,
    variable,
    negation,
    conjunction,
    disjunction
  };

  op kind = op::constant;
  bool value = false;           /* constant */
  int var = -1;                 /* variable */
  std::vector<expr> children;   /* negation: 1; conjunction/disjunction: >= 2 */

  static expr constant_of( bool v );
  static expr variable_of( int var );

  /*! \brief var or var'. */
  static expr literal_of( int var, bool positive );

  static expr negation_of( expr e );

  /*! \brief AND of factors; flattens nested ANDs, collapses arity < 2. */
  static expr conjunction_of( std::vector<expr> factors );

  /*! \brief OR of terms; flattens nested ORs, collapses arity < 2. */
  static expr disjunction_of( std::vector<expr> terms );

  bool is_literal() const;

  bool operator==( const expr& ) const = default;
};

/*! \brief Number of 2-input AND/OR gates: sum of (arity - 1) over AND/OR nodes. */
int gate_cost( const expr& e );

/*! \brief Logic levels under balanced decomposition; 0 for literals and constants. */
int expr_depth( const expr& e );

/*! \brief assignment[i] is the value of variable i. */
bool eval_expr( const expr& e, const std::vector<bool>& assignment );

/*! \brief Bitmask over all 2^var_count minterms where e evaluates to 1. */
uint64_t truth_table( const expr& e, int var_count );

bool_func expr_to_func( const expr& e, int var_count );

bool equivalent( const expr& a, const expr& b, int var_count );

int max_var_index( const expr& e );

/*! \brief Equality up to reordering of AND/OR children. */
bool structurally_equal( const expr& a, const expr& b );

/*!
  \brief Render in the text grammar: postfix ' for NOT, juxtaposition for
  AND, + for OR. AND factors print base literals in variable order followed
  by parenthesized OR factors; OR children print in canonical order.
*/
std::string print_expr( const expr& e, const std::vector<std::string>& var_names );

/*!
  \brief Parse the expression grammar. Literals are variable names with an
  optional postfix '; juxtaposition or * is AND; + is OR; constants 0 and 1;
  parentheses group; whitespace is ignored.
*/
expr parse_expr( std::string_view text, const std::vector<std::string>& var_names );

} // namespace kmapx
