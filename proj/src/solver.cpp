#include "kmapx/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace kmapx
{

std::string to_string( group_mode m )
{
  return m == group_mode::conventional ? "conventional" : "extended";
}

std::string to_string( solve_method m )
{
  switch ( m )
  {
  case solve_method::exact:
    return "exact";
  case solve_method::greedy:
    return "greedy";
  case solve_method::oracle:
    return "oracle";
  }
  return "?";
}

std::vector<cube> prime_implicants( const bool_func& f )
{
  const uint64_t on = f.on_mask();
  const uint64_t care = on | f.dc_mask();

  std::vector<cube> implicants;
  std::vector<uint64_t> cells;
  for ( const auto& c : all_cubes( f.var_count() ) )
  {
    const uint64_t cc = c.cells();
    if ( ( cc & ~care ) == 0 && ( cc & on ) != 0 )
    {
      implicants.push_back( c );
      cells.push_back( cc );
    }
  }

  /* Maximal under containment: no other implicant strictly contains it. */
  std::vector<cube> primes;
  for ( size_t i = 0; i < implicants.size(); ++i )
  {
    bool maximal = true;
    for ( size_t j = 0; j < implicants.size() && maximal; ++j )
      if ( j != i && ( cells[i] & ~cells[j] ) == 0 && cells[i] != cells[j] )
        maximal = false;
    if ( maximal )
      primes.push_back( implicants[i] );
  }
  return primes;
}

uint64_t covered_cells( const cover& c )
{
  uint64_t cells = 0;
  for ( const auto& g : c.groups )
    cells |= group_cells( g );
  return cells;
}

int cover_cost( const cover& c )
{
  if ( c.groups.empty() )
    return 0;
  int cost = static_cast<int>( c.groups.size() ) - 1;
  for ( const auto& g : c.groups )
    cost += group_cost( g );
  return cost;
}

expr cover_expression( const cover& c )
{
  std::vector<expr> terms;
  terms.reserve( c.groups.size() );
  for ( const auto& g : c.groups )
    terms.push_back( group_expression( g ) );
  if ( terms.empty() )
    return expr::constant_of( false );
  return expr::disjunction_of( std::move( terms ) );
}

bool verify_cover( const cover& c )
{
  const uint64_t cells = covered_cells( c );
  return ( c.func.on_mask() & ~cells ) == 0 && ( cells & c.func.off_mask() ) == 0;
}

bool cover_irredundant( const cover& c )
{
  for ( size_t i = 0; i < c.groups.size(); ++i )
  {
    uint64_t others = 0;
    for ( size_t j = 0; j < c.groups.size(); ++j )
      if ( j != i )
        others |= group_cells( c.groups[j] );
    if ( ( group_cells( c.groups[i] ) & c.func.on_mask() & ~others ) == 0 )
      return false;
  }
  return true;
}

cover irredundant( cover c )
{
  while ( true )
  {
    const uint64_t on = c.func.on_mask();
    int victim = -1;
    for ( size_t i = 0; i < c.groups.size(); ++i )
    {
      uint64_t others = 0;
      for ( size_t j = 0; j < c.groups.size(); ++j )
        if ( j != i )
          others |= group_cells( c.groups[j] );
      if ( ( on & ~others ) != 0 )
        continue; /* removal would uncover an ON cell */
      if ( victim < 0 || group_cost( c.groups[i] ) > group_cost( c.groups[victim] ) ||
           ( group_cost( c.groups[i] ) == group_cost( c.groups[victim] ) &&
             group_less( c.groups[i], c.groups[victim] ) ) )
        victim = static_cast<int>( i );
    }
    if ( victim < 0 )
      return c;
    c.groups.erase( c.groups.begin() + victim );
  }
}

namespace
{

using detail::group_candidate;

std::vector<group_candidate> conventional_candidates( const bool_func& f )
{
  std::vector<group_candidate> candidates;
  for ( auto& p : prime_implicants( f ) )
  {
    group g{ p, {} };
    const uint64_t cells = p.cells();
    const int cost = group_cost( g );
    candidates.push_back( { std::move( g ), cells, cost } );
  }
  return candidates;
}

/* Greedy scoring per the documented heuristic: maximize newly covered ON
 * cells per gate (group cost plus one joining OR); ties prefer
 * exclusion-free groups, then larger groups, then canonical order. */
std::vector<size_t> greedy_selection( uint64_t on, const std::vector<group_candidate>& candidates )
{
  std::vector<size_t> picked;
  uint64_t covered = 0;
  while ( ( on & ~covered ) != 0 )
  {
    int best = -1;
    int best_new = 0;
    for ( size_t i = 0; i < candidates.size(); ++i )
    {
      const int newly = std::popcount( candidates[i].cells & on & ~covered );
      if ( newly == 0 )
        continue;
      if ( best < 0 )
      {
        best = static_cast<int>( i );
        best_new = newly;
        continue;
      }
      const auto& a = candidates[i];
      const auto& b = candidates[best];
      const long lhs = static_cast<long>( newly ) * ( b.cost + 1 );
      const long rhs = static_cast<long>( best_new ) * ( a.cost + 1 );
      bool better = lhs > rhs;
      if ( lhs == rhs )
      {
        const bool a_plain = a.grp.exclusions.empty();
        const bool b_plain = b.grp.exclusions.empty();
        if ( a_plain != b_plain )
          better = a_plain;
        else if ( std::popcount( a.cells ) != std::popcount( b.cells ) )
          better = std::popcount( a.cells ) > std::popcount( b.cells );
        else
          better = group_less( a.grp, b.grp );
      }
      if ( better )
      {
        best = static_cast<int>( i );
        best_new = newly;
      }
    }
    if ( best < 0 )
      throw std::logic_error( "candidate set does not cover the ON-set" );
    picked.push_back( static_cast<size_t>( best ) );
    covered |= candidates[best].cells;
  }
  return picked;
}

struct exact_search
{
  uint64_t on;
  const std::vector<group_candidate>& candidates;
  std::vector<std::vector<int>> cell_candidates; /* per ON cell, cost-ascending */
  std::vector<int> cell_min_cost;
  int cell_count;

  uint64_t node_budget;
  uint64_t nodes = 0;
  bool aborted = false;

  int best_cost;
  std::vector<int> best_selection;
  std::vector<int> selection;

  exact_search( uint64_t on_mask, const std::vector<group_candidate>& cands, int n_cells,
                uint64_t budget )
      : on( on_mask ), candidates( cands ), cell_count( n_cells ), node_budget( budget )
  {
    cell_candidates.resize( cell_count );
    cell_min_cost.assign( cell_count, std::numeric_limits<int>::max() );

    std::vector<int> order( candidates.size() );
    for ( size_t i = 0; i < order.size(); ++i )
      order[i] = static_cast<int>( i );
    std::sort( order.begin(), order.end(), [&]( int a, int b ) {
      if ( candidates[a].cost != candidates[b].cost )
        return candidates[a].cost < candidates[b].cost;
      return group_less( candidates[a].grp, candidates[b].grp );
    } );

    for ( int idx : order )
    {
      const uint64_t cells = candidates[idx].cells & on;
      for ( int cell = 0; cell < cell_count; ++cell )
        if ( cells & ( uint64_t( 1 ) << cell ) )
        {
          cell_candidates[cell].push_back( idx );
          cell_min_cost[cell] = std::min( cell_min_cost[cell], candidates[idx].cost );
        }
    }
  }

  void run( uint64_t covered, int cost_sum )
  {
    if ( aborted )
      return;
    if ( ++nodes > node_budget )
    {
      aborted = true;
      return;
    }
    const int chosen = static_cast<int>( selection.size() );
    const int partial = cost_sum + ( chosen >= 1 ? chosen - 1 : 0 );
    const uint64_t uncovered = on & ~covered;
    if ( uncovered == 0 )
    {
      if ( partial < best_cost )
      {
        best_cost = partial;
        best_selection = selection;
      }
      return;
    }

    /* Admissible bound: the cheapest candidate for any remaining cell plus
     * one joining gate if the partial cover is non-empty. */
    int min_next = std::numeric_limits<int>::max();
    int pick = -1;
    size_t pick_width = std::numeric_limits<size_t>::max();
    for ( uint64_t rest = uncovered; rest != 0; rest &= rest - 1 )
    {
      const int cell = std::countr_zero( rest );
      min_next = std::min( min_next, cell_min_cost[cell] );
      if ( cell_candidates[cell].size() < pick_width )
      {
        pick_width = cell_candidates[cell].size();
        pick = cell;
      }
    }
    if ( min_next == std::numeric_limits<int>::max() )
      return; /* some cell has no candidate at all */
    if ( partial + min_next + ( chosen >= 1 ? 1 : 0 ) >= best_cost )
      return;

    for ( int idx : cell_candidates[pick] )
    {
      selection.push_back( idx );
      run( covered | candidates[idx].cells, cost_sum + candidates[idx].cost );
      selection.pop_back();
      if ( aborted )
        return;
    }
  }
};

cover make_cover( const bool_func& f, std::vector<group> groups, group_mode mode,
                  solve_method method )
{
  std::sort( groups.begin(), groups.end(), group_less );
  return cover{ f, std::move( groups ), mode, method };
}

} // namespace

minimize_result minimize( const bool_func& f, group_mode mode, const solver_config& config )
{
  if ( config.node_budget == 0 )
    throw std::invalid_argument( "node_budget must be positive" );

  minimize_result result;

  /* Constant functions need no search. */
  if ( f.on_mask() == 0 )
  {
    result.best = make_cover( f, {}, mode, config.method );
    return result;
  }
  if ( f.off_mask() == 0 )
  {
    result.best = make_cover( f, { group{ cube( f.var_count() ), {} } }, mode, config.method );
    return result;
  }

  const auto candidates = mode == group_mode::conventional
                              ? conventional_candidates( f )
                              : detail::enumerate_group_candidates( f, config.max_exclusions );

  if ( config.method == solve_method::greedy )
  {
    std::vector<group> groups;
    for ( size_t idx : greedy_selection( f.on_mask(), candidates ) )
      groups.push_back( candidates[idx].grp );
    result.best = irredundant( make_cover( f, std::move( groups ), mode, config.method ) );
    return result;
  }

  /* Exact search over a dominance-pruned candidate set: a candidate whose
   * cells fit inside a no-costlier candidate can never improve a cover. */
  std::vector<group_candidate> pruned;
  if ( mode == group_mode::extended )
  {
    for ( size_t i = 0; i < candidates.size(); ++i )
    {
      bool dominated = false;
      for ( size_t j = 0; j < candidates.size() && !dominated; ++j )
        if ( j != i && ( candidates[i].cells & ~candidates[j].cells ) == 0 &&
             candidates[j].cost <= candidates[i].cost )
          dominated = true;
      if ( !dominated )
        pruned.push_back( candidates[i] );
    }
  }
  const auto& search_set = mode == group_mode::extended ? pruned : candidates;

  /* Seed the incumbent with the greedy cover so a budget abort still
   * carries a correct cover. */
  cover seed = irredundant(
      make_cover( f,
                  [&] {
                    std::vector<group> gs;
                    for ( size_t idx : greedy_selection( f.on_mask(), search_set ) )
                      gs.push_back( search_set[idx].grp );
                    return gs;
                  }(),
                  mode, solve_method::exact ) );

  exact_search search( f.on_mask(), search_set, 1 << f.var_count(), config.node_budget );
  search.best_cost = cover_cost( seed );
  search.run( 0, 0 );

  std::vector<group> best_groups;
  if ( search.best_selection.empty() )
    best_groups = seed.groups; /* search never improved on the seed */
  else
    for ( int idx : search.best_selection )
      best_groups.push_back( search_set[idx].grp );

  result.best = make_cover( f, std::move( best_groups ), mode, solve_method::exact );
  result.optimal = !search.aborted;
  result.search_nodes = search.nodes;
  return result;
}

} // namespace kmapx
