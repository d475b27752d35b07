#include "doctest.h"

#include "kmapx/expr.hpp"

using namespace kmapx;

namespace
{

const std::vector<std::string> abcd = { "a", "b", "c", "d" };

expr lit( int var, bool positive = true )
{
  return expr::literal_of( var, positive );
}

} // namespace

TEST_CASE( "gate cost" )
{
  /* a c' d + b c' d */
  const expr sop = expr::disjunction_of(
      { expr::conjunction_of( { lit( 0 ), lit( 2, false ), lit( 3 ) } ),
        expr::conjunction_of( { lit( 1 ), lit( 2, false ), lit( 3 ) } ) } );
  CHECK( gate_cost( sop ) == 5 );

  /* (a+b) c' d */
  const expr factored = expr::conjunction_of(
      { expr::disjunction_of( { lit( 0 ), lit( 1 ) } ), lit( 2, false ), lit( 3 ) } );
  CHECK( gate_cost( factored ) == 3 );

  /* b c' d + (c'+d) a b' */
  const expr mixed = expr::disjunction_of(
      { expr::conjunction_of( { lit( 1 ), lit( 2, false ), lit( 3 ) } ),
        expr::conjunction_of(
            { expr::disjunction_of( { lit( 2, false ), lit( 3 ) } ), lit( 0 ), lit( 1, false ) } ) } );
  CHECK( gate_cost( mixed ) == 6 );

  CHECK( gate_cost( lit( 0 ) ) == 0 );
  CHECK( gate_cost( lit( 2, false ) ) == 0 );
}

TEST_CASE( "eval" )
{
  const expr e = parse_expr( "(a+b)c'd", abcd );
  CHECK( eval_expr( e, { true, false, false, true } ) );
  CHECK( !eval_expr( e, { false, false, false, true } ) );
  CHECK( !eval_expr( expr::constant_of( false ), {} ) );
  CHECK_THROWS_AS( eval_expr( parse_expr( "d", abcd ), { true } ), std::out_of_range );
}

TEST_CASE( "tabulation" )
{
  const auto f = expr_to_func( parse_expr( "d(a+b+c)", abcd ), 4 );
  uint64_t expected = 0;
  for ( int m : { 3, 5, 7, 9, 11, 13, 15 } )
    expected |= uint64_t( 1 ) << m;
  CHECK( f.on_mask() == expected );

  const auto nine = expr_to_func( parse_expr( "(a+b)(c+d)", abcd ), 4 );
  CHECK( nine.on_count() == 9 );

  const auto one = expr_to_func( expr::constant_of( true ), 2 );
  CHECK( one.on_mask() == 0xfu );

  CHECK_THROWS_AS( expr_to_func( parse_expr( "d", abcd ), 2 ), std::invalid_argument );
}

TEST_CASE( "equivalence" )
{
  CHECK( equivalent( parse_expr( "ac'd + bc'd", abcd ), parse_expr( "(a+b)c'd", abcd ), 4 ) );
  CHECK( equivalent( parse_expr( "a(c'+d) + (a+b)d", abcd ),
                     parse_expr( "ac' + (a+b)d", abcd ), 4 ) );
  CHECK( !equivalent( parse_expr( "a", abcd ), parse_expr( "a'", abcd ), 4 ) );
  CHECK( !equivalent( parse_expr( "a", abcd ), parse_expr( "b", abcd ), 4 ) );
}

TEST_CASE( "parse structure" )
{
  const expr e = parse_expr( "bd(c'+a)", abcd );
  const expr expected = expr::conjunction_of(
      { lit( 1 ), lit( 3 ), expr::disjunction_of( { lit( 2, false ), lit( 0 ) } ) } );
  CHECK( e == expected );

  CHECK( parse_expr( "1", abcd ) == expr::constant_of( true ) );
  CHECK( parse_expr( "a*b", abcd ) == parse_expr( "ab", abcd ) );
  CHECK( parse_expr( " a b ", abcd ) == parse_expr( "ab", abcd ) );
}

TEST_CASE( "parse errors carry a position" )
{
  CHECK_THROWS_AS( parse_expr( "(a+", abcd ), parse_error );
  CHECK_THROWS_AS( parse_expr( "a +", abcd ), parse_error );
  CHECK_THROWS_AS( parse_expr( "", abcd ), parse_error );
  CHECK_THROWS_AS( parse_expr( "a)b", abcd ), parse_error );
  try
  {
    parse_expr( "ab + e", abcd );
    FAIL( "expected parse_error" );
  }
  catch ( const parse_error& err )
  {
    CHECK( err.position == 5 );
  }
}

TEST_CASE( "printing" )
{
  /* AND factors: base literals in variable order, then OR factors. */
  const expr factored = expr::conjunction_of(
      { expr::disjunction_of( { lit( 1 ), lit( 0 ) } ), lit( 3 ), lit( 2, false ) } );
  CHECK( print_expr( factored, abcd ) == "c'd(a+b)" );

  CHECK( print_expr( parse_expr( "d(a+b+c)", abcd ), abcd ) == "d(a+b+c)" );
  CHECK( print_expr( parse_expr( "bc'd + ac'd", abcd ), abcd ) == "ac'd + bc'd" );
  CHECK( print_expr( parse_expr( "(c+d)(a+b)", abcd ), abcd ) == "(a+b)(c+d)" );
  CHECK( print_expr( parse_expr( "bd(c'+a)", abcd ), abcd ) == "bd(a+c')" );
  CHECK( print_expr( expr::constant_of( false ), abcd ) == "0" );
}

TEST_CASE( "parse of print is identity up to ordering" )
{
  for ( const char* text : { "ac'd + bc'd", "(a+b)c'd", "d(a+b+c)", "bd(c'+a)", "a", "a'",
                             "0", "1", "ab + cd + a'b'c'd'", "(a+b)(c+d) + ab" } )
  {
    const expr e = parse_expr( text, abcd );
    const expr back = parse_expr( print_expr( e, abcd ), abcd );
    CHECK( structurally_equal( e, back ) );
    CHECK( equivalent( e, back, 4 ) );
  }
}

TEST_CASE( "depth under balanced decomposition" )
{
  CHECK( expr_depth( lit( 0 ) ) == 0 );
  CHECK( expr_depth( lit( 0, false ) ) == 0 );
  CHECK( expr_depth( expr::constant_of( true ) ) == 0 );
  CHECK( expr_depth( parse_expr( "ab", abcd ) ) == 1 );
  CHECK( expr_depth( parse_expr( "abc", abcd ) ) == 2 );
  CHECK( expr_depth( parse_expr( "abcd", abcd ) ) == 2 );
  CHECK( expr_depth( parse_expr( "ac'd + bc'd", abcd ) ) == 3 );
  /* each k-ary node contributes ceil(log2 k) levels */
  CHECK( expr_depth( parse_expr( "(a+b)c'd", abcd ) ) == 3 );
  CHECK( expr_depth( parse_expr( "(a+b)d", abcd ) ) == 2 );
}

TEST_CASE( "conjunction_of flattens and collapses" )
{
  const expr nested = expr::conjunction_of(
      { lit( 0 ), expr::conjunction_of( { lit( 1 ), lit( 2 ) } ) } );
  CHECK( nested.children.size() == 3 );
  CHECK( gate_cost( nested ) == 2 );

  CHECK( expr::conjunction_of( { lit( 0 ) } ) == lit( 0 ) );
  CHECK( expr::conjunction_of( {} ) == expr::constant_of( true ) );
  CHECK( expr::disjunction_of( {} ) == expr::constant_of( false ) );
}
