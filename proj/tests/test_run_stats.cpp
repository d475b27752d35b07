#include "doctest.h"

#include "kmapx/run_stats.hpp"

using namespace kmapx;

TEST_CASE( "stats fields" )
{
  const auto f = bool_func::from_minterms( 4, { 5, 9, 13 } );
  const auto r = minimize( f, group_mode::extended );
  const auto s = stats_for( r, 1.5 );
  CHECK( s.var_count == 4 );
  CHECK( s.on_count == 3 );
  CHECK( s.dc_count == 0 );
  CHECK( s.cost == 3 );
  CHECK( s.group_count == 1 );
  CHECK( s.expression == "c'd(a+b)" );
  CHECK( s.optimal );
  CHECK( s.cost >= 0 );

  const std::string json = run_stats_to_json( s );
  for ( const char* field : { "\"schema\":1", "\"var_count\":4", "\"mode\":\"extended\"",
                              "\"method\":\"exact\"", "\"cost\":3", "\"depth\":",
                              "\"search_nodes\":", "\"elapsed_ms\":", "\"expression\":" } )
    CHECK( json.find( field ) != std::string::npos );
}

TEST_CASE( "depth is zero exactly for literals and constants" )
{
  /* f = d: single one-literal group */
  const auto literal = minimize( bool_func::from_minterms( 4, { 1, 3, 5, 7, 9, 11, 13, 15 } ),
                                 group_mode::conventional );
  CHECK( stats_for( literal, 0 ).depth == 0 );

  const auto constant = minimize( bool_func::from_minterms( 2, {} ), group_mode::extended );
  CHECK( stats_for( constant, 0 ).depth == 0 );

  const auto gate = minimize( bool_func::from_minterms( 4, { 5, 9, 13 } ), group_mode::extended );
  CHECK( stats_for( gate, 0 ).depth > 0 );
}
