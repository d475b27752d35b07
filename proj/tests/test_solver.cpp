#include "doctest.h"

#include <random>
#include <set>

#include "kmapx/solver.hpp"
#include "support/oracle.hpp"

using namespace kmapx;

namespace
{

std::set<std::string> prime_strings( const bool_func& f )
{
  std::set<std::string> out;
  for ( const auto& p : prime_implicants( f ) )
    out.insert( p.to_string() );
  return out;
}

group make_group( const char* base, std::vector<const char*> exclusions = {} )
{
  group g;
  g.base = cube::from_string( base );
  for ( const char* x : exclusions )
    g.exclusions.push_back( cube::from_string( x ) );
  return g;
}

cover make_cover( const bool_func& f, std::vector<group> groups )
{
  return cover{ f, std::move( groups ), group_mode::extended, solve_method::exact };
}

int exact_cost( const bool_func& f, group_mode mode )
{
  const auto r = minimize( f, mode );
  REQUIRE( r.optimal );
  REQUIRE( verify_cover( r.best ) );
  return cover_cost( r.best );
}

const bool_func eq1 = bool_func::from_minterms( 4, { 5, 9, 13 } );
const bool_func two_triples = bool_func::from_minterms( 4, { 5, 8, 9, 11, 13 } );
const bool_func nine_square = bool_func::from_minterms( 4, { 5, 6, 7, 9, 10, 11, 13, 14, 15 } );
const bool_func six_blocks = bool_func::from_minterms( 4, { 5, 7, 8, 9, 11, 12, 13, 15 } );
const bool_func seven_cells = bool_func::from_minterms( 4, { 3, 5, 7, 9, 11, 13, 15 } );

} // namespace

TEST_CASE( "prime implicants" )
{
  CHECK( prime_strings( eq1 ) == std::set<std::string>{ "-101", "1-01" } );
  CHECK( prime_strings( nine_square ) == std::set<std::string>{ "-1-1", "1--1", "-11-", "1-1-" } );
  CHECK( prime_strings( bool_func::from_minterms( 2, { 0, 1, 2, 3 } ) ) ==
         std::set<std::string>{ "--" } );
  /* don't-cares extend implicants but cannot be the only ON contact */
  CHECK( prime_strings( bool_func::from_minterms( 4, { 5, 13 }, { 9 } ) ) ==
         std::set<std::string>{ "-101", "1-01" } );
}

TEST_CASE( "textbook scenarios, exact costs" )
{
  CHECK( exact_cost( eq1, group_mode::conventional ) == 5 );
  CHECK( exact_cost( eq1, group_mode::extended ) == 3 );

  CHECK( exact_cost( two_triples, group_mode::conventional ) == 8 );
  CHECK( exact_cost( two_triples, group_mode::extended ) == 6 );

  CHECK( exact_cost( nine_square, group_mode::conventional ) == 7 );
  CHECK( exact_cost( nine_square, group_mode::extended ) == 3 );

  CHECK( exact_cost( six_blocks, group_mode::conventional ) == 5 );
  CHECK( exact_cost( six_blocks, group_mode::extended ) == 4 );

  CHECK( exact_cost( seven_cells, group_mode::conventional ) == 5 );
  CHECK( exact_cost( seven_cells, group_mode::extended ) == 3 );
}

TEST_CASE( "textbook scenario expressions" )
{
  const auto conv = minimize( eq1, group_mode::conventional );
  CHECK( print_expr( cover_expression( conv.best ), eq1.var_names() ) == "ac'd + bc'd" );

  const auto ext = minimize( eq1, group_mode::extended );
  REQUIRE( ext.best.groups.size() == 1 );
  CHECK( ext.best.groups[0] == make_group( "--01", { "0001" } ) );
  CHECK( print_expr( cover_expression( ext.best ), eq1.var_names() ) == "c'd(a+b)" );

  const auto seven_ext = minimize( seven_cells, group_mode::extended );
  CHECK( print_expr( cover_expression( seven_ext.best ), seven_cells.var_names() ) == "d(a+b+c)" );

  /* bc'd together with ab' minus cd', in canonical group order */
  const auto triples_ext = minimize( two_triples, group_mode::extended );
  REQUIRE( triples_ext.best.groups.size() == 2 );
  CHECK( triples_ext.best.groups[0] == make_group( "10--", { "1010" } ) );
  CHECK( triples_ext.best.groups[1] == make_group( "-101" ) );
}

TEST_CASE( "extended mode without exclusions matches conventional cost" )
{
  std::mt19937_64 rng( 61 );
  solver_config no_exclusions;
  no_exclusions.max_exclusions = 0;
  for ( int iter = 0; iter < 25; ++iter )
  {
    const bool_func f( 4, rng() & 0xffffu, 0 );
    const auto conventional = minimize( f, group_mode::conventional );
    const auto implicants_only = minimize( f, group_mode::extended, no_exclusions );
    CHECK( cover_cost( conventional.best ) == cover_cost( implicants_only.best ) );
  }
}

TEST_CASE( "constant functions" )
{
  const auto zero = minimize( bool_func::from_minterms( 3, {} ), group_mode::extended );
  CHECK( zero.best.constant_zero() );
  CHECK( cover_cost( zero.best ) == 0 );
  CHECK( cover_expression( zero.best ) == expr::constant_of( false ) );

  const auto one = minimize( bool_func::from_minterms( 2, { 0, 1, 2, 3 } ), group_mode::extended );
  REQUIRE( one.best.groups.size() == 1 );
  CHECK( cover_cost( one.best ) == 0 );
  CHECK( cover_expression( one.best ) == expr::constant_of( true ) );

  /* only don't-cares: nothing must be covered */
  const auto dc_only = minimize( bool_func( 2, 0, 0xf ), group_mode::conventional );
  CHECK( dc_only.best.constant_zero() );
}

TEST_CASE( "cover cost" )
{
  const cover mixed_cover = make_cover( two_triples, { make_group( "-101" ), make_group( "10--", { "1010" } ) } );
  CHECK( verify_cover( mixed_cover ) );
  CHECK( cover_cost( mixed_cover ) == 6 );

  const cover two_sixes = make_cover(
      six_blocks, { make_group( "1---", { "1-10" } ), make_group( "---1", { "00-1" } ) } );
  CHECK( verify_cover( two_sixes ) );
  CHECK( cover_cost( two_sixes ) == 5 );

  const cover seven_cover = make_cover( seven_cells, { make_group( "---1", { "0001" } ) } );
  CHECK( verify_cover( seven_cover ) );
  CHECK( cover_cost( seven_cover ) == 3 );

  /* cost equals the gate count of the assembled expression */
  for ( const cover* c : { &mixed_cover, &two_sixes, &seven_cover } )
    CHECK( cover_cost( *c ) == gate_cost( cover_expression( *c ) ) );
}

TEST_CASE( "irredundant" )
{
  const cover redundant = make_cover(
      eq1, { make_group( "-101" ), make_group( "1-01" ), make_group( "1101" ) } );
  CHECK( !cover_irredundant( redundant ) );
  const cover reduced = irredundant( redundant );
  REQUIRE( reduced.groups.size() == 2 );
  CHECK( cover_irredundant( reduced ) );
  CHECK( verify_cover( reduced ) );
  for ( const auto& g : reduced.groups )
    CHECK( g.base.to_string() != "1101" );

  const cover essential = make_cover(
      two_triples, { make_group( "-101" ), make_group( "100-" ), make_group( "10-1" ) } );
  CHECK( irredundant( essential ).groups.size() == 3 );

  CHECK( irredundant( make_cover( bool_func::from_minterms( 4, {} ), {} ) ).groups.empty() );
}

TEST_CASE( "oracle reference points" )
{
  /* f = c (the LSB variable): a single free-heavy cube, zero gates */
  const auto literal = bool_func::from_minterms( 3, { 1, 3, 5, 7 } );
  CHECK( test_oracle::oracle_minimize( literal, group_mode::conventional ) == 0 );
  CHECK( test_oracle::oracle_minimize( literal, group_mode::extended ) == 0 );

  /* a lone minterm costs n-1 AND gates */
  const auto lone = bool_func::from_minterms( 3, { 0 } );
  CHECK( test_oracle::oracle_minimize( lone, group_mode::conventional ) == 2 );
  CHECK( test_oracle::oracle_minimize( lone, group_mode::extended ) == 2 );

  /* 3-input majority */
  const auto majority = bool_func::from_minterms( 3, { 3, 5, 6, 7 } );
  CHECK( test_oracle::oracle_minimize( majority, group_mode::conventional ) == 5 );
  CHECK( test_oracle::oracle_minimize( majority, group_mode::extended ) == 4 );
}

TEST_CASE( "solver agrees with the oracle on sampled functions" )
{
  std::mt19937_64 rng( 41 );
  for ( int iter = 0; iter < 40; ++iter )
  {
    const bool_func f( 3, rng() & 0xffu, 0 );
    for ( group_mode mode : { group_mode::conventional, group_mode::extended } )
    {
      const int solver_cost = exact_cost( f, mode );
      const int oracle_cost = test_oracle::oracle_minimize( f, mode );
      CHECK_MESSAGE( solver_cost == oracle_cost,
                     "on=", f.on_mask(), " mode=", to_string( mode ) );
    }
  }
}

TEST_CASE( "extended never costs more than conventional" )
{
  std::mt19937_64 rng( 43 );
  for ( int iter = 0; iter < 30; ++iter )
  {
    const bool_func f( 4, rng() & 0xffffu, 0 );
    CHECK( exact_cost( f, group_mode::extended ) <= exact_cost( f, group_mode::conventional ) );
  }
}

TEST_CASE( "greedy covers are correct, irredundant and no better than exact" )
{
  std::mt19937_64 rng( 47 );
  solver_config greedy_config;
  greedy_config.method = solve_method::greedy;
  for ( int iter = 0; iter < 30; ++iter )
  {
    const uint64_t on = rng() & 0xffffu;
    const uint64_t dc = rng() & 0xffffu & ~on;
    const bool_func f( 4, on, dc );
    for ( group_mode mode : { group_mode::conventional, group_mode::extended } )
    {
      const auto greedy = minimize( f, mode, greedy_config );
      CHECK( verify_cover( greedy.best ) );
      CHECK( cover_irredundant( greedy.best ) );
      CHECK( cover_cost( greedy.best ) >= exact_cost( f, mode ) );
    }
  }
}

TEST_CASE( "determinism" )
{
  for ( group_mode mode : { group_mode::conventional, group_mode::extended } )
    for ( const bool_func* f : { &two_triples, &nine_square, &six_blocks } )
    {
      const auto a = minimize( *f, mode );
      const auto b = minimize( *f, mode );
      CHECK( a.best.groups == b.best.groups );
      CHECK( a.search_nodes == b.search_nodes );
    }
}

TEST_CASE( "node budget abort still returns a correct cover" )
{
  solver_config tiny;
  tiny.node_budget = 1;
  const auto r = minimize( nine_square, group_mode::extended, tiny );
  CHECK( !r.optimal );
  CHECK( verify_cover( r.best ) );

  solver_config zero;
  zero.node_budget = 0;
  CHECK_THROWS_AS( minimize( nine_square, group_mode::extended, zero ), std::invalid_argument );
}
