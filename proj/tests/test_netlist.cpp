#include "doctest.h"

#include <random>

#include "kmapx/netlist.hpp"
#include "kmapx/solver.hpp"
#include "support/helpers.hpp"

using namespace kmapx;

namespace
{

const std::vector<std::string> abcd = { "a", "b", "c", "d" };

void check_netlist_matches( const expr& e, int var_count,
                            const std::vector<std::string>& names )
{
  const auto n = test_helpers::parse_netlist( emit_netlist( e, names ) );
  CHECK( n.and_or_count() == gate_cost( e ) );
  const uint64_t tt = truth_table( e, var_count );
  for ( int m = 0; m < ( 1 << var_count ); ++m )
  {
    std::vector<bool> inputs( var_count );
    for ( int v = 0; v < var_count; ++v )
      inputs[v] = ( m & static_cast<int>( minterm_bit( v, var_count ) ) ) != 0;
    CHECK( test_helpers::simulate_netlist( n, inputs ) == ( ( tt >> m ) & 1 ) );
  }
}

} // namespace

TEST_CASE( "netlist gate counts" )
{
  const auto factored = test_helpers::parse_netlist(
      emit_netlist( parse_expr( "(a+b)c'd", abcd ), abcd ) );
  int ors = 0, nots = 0, ands = 0;
  for ( const auto& g : factored.gates )
  {
    if ( g.op == "OR" )
      ++ors;
    if ( g.op == "NOT" )
      ++nots;
    if ( g.op == "AND" )
      ++ands;
  }
  CHECK( ors == 1 );
  CHECK( nots == 1 );
  CHECK( ands == 2 );
  CHECK( factored.and_or_count() == 3 );

  CHECK( test_helpers::parse_netlist( emit_netlist( parse_expr( "(a+b)(c+d)", abcd ), abcd ) )
             .and_or_count() == 3 );
}

TEST_CASE( "wire-only netlist" )
{
  const auto n = test_helpers::parse_netlist( emit_netlist( parse_expr( "a", abcd ), abcd ) );
  CHECK( n.gates.empty() );
  CHECK( n.output_net == "a" );

  const auto c = test_helpers::parse_netlist(
      emit_netlist( expr::constant_of( false ), abcd ) );
  CHECK( c.gates.empty() );
  CHECK( c.output_net == "0" );
}

TEST_CASE( "shared inverter per variable" )
{
  const auto n = test_helpers::parse_netlist(
      emit_netlist( parse_expr( "ac'd + bc'd", abcd ), abcd ) );
  int nots = 0;
  for ( const auto& g : n.gates )
    if ( g.op == "NOT" )
      ++nots;
  CHECK( nots == 1 );
  CHECK( n.and_or_count() == 5 );
}

TEST_CASE( "comments pass through" )
{
  const std::string text =
      emit_netlist( parse_expr( "ab", abcd ), abcd, { "f = ab", "group base 11--" } );
  CHECK( text.find( "# f = ab\n" ) == 0 );
  CHECK( text.find( "# group base 11--\n" ) != std::string::npos );
}

TEST_CASE( "netlists simulate to the expression truth table" )
{
  check_netlist_matches( parse_expr( "(a+b)c'd", abcd ), 4, abcd );
  check_netlist_matches( parse_expr( "d(a+b+c)", abcd ), 4, abcd );
  check_netlist_matches( expr::constant_of( true ), 2, { "a", "b" } );

  std::mt19937_64 rng( 59 );
  for ( int iter = 0; iter < 25; ++iter )
  {
    const bool_func f( 4, rng() & 0xffffu, 0 );
    const auto mode = ( iter & 1 ) ? group_mode::extended : group_mode::conventional;
    const auto r = minimize( f, mode );
    check_netlist_matches( cover_expression( r.best ), 4, f.var_names() );
  }
}
