#include "kmapx/group.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <unordered_map>

namespace kmapx
{

void validate_group( const group& g )
{
  if ( g.base.var_count() < 1 )
    throw std::invalid_argument( "group base is uninitialized" );
  uint64_t removed = 0;
  for ( const auto& x : g.exclusions )
  {
    if ( x.var_count() != g.base.var_count() )
      throw std::invalid_argument( "exclusion var_count mismatch" );
    if ( !g.base.contains( x ) || x == g.base )
      throw std::invalid_argument( "exclusion " + x.to_string() +
                                   " is not strictly contained in base " + g.base.to_string() );
    removed |= x.cells();
  }
  if ( ( g.base.cells() & ~removed ) == 0 )
    throw std::invalid_argument( "group covers no cells" );
  for ( size_t i = 0; i < g.exclusions.size(); ++i )
  {
    uint64_t others = 0;
    for ( size_t j = 0; j < g.exclusions.size(); ++j )
      if ( j != i )
        others |= g.exclusions[j].cells();
    if ( ( g.exclusions[i].cells() & ~others ) == 0 )
      throw std::invalid_argument( "exclusion " + g.exclusions[i].to_string() +
                                   " removes no cell of its own" );
  }
}

uint64_t group_cells( const group& g )
{
  uint64_t cells = g.base.cells();
  for ( const auto& x : g.exclusions )
    cells &= ~x.cells();
  return cells;
}

expr group_expression( const group& g )
{
  const int n = g.base.var_count();
  std::vector<expr> factors;
  for ( int v = 0; v < n; ++v )
  {
    const char t = g.base.trit( v );
    if ( t != '-' )
      factors.push_back( expr::literal_of( v, t == '1' ) );
  }
  for ( const auto& x : g.exclusions )
  {
    /* De Morgan of the exclusion's residual product. */
    std::vector<expr> complemented;
    for ( int v = 0; v < n; ++v )
    {
      if ( g.base.trit( v ) != '-' )
        continue;
      const char t = x.trit( v );
      if ( t != '-' )
        complemented.push_back( expr::literal_of( v, t == '0' ) );
    }
    factors.push_back( expr::disjunction_of( std::move( complemented ) ) );
  }
  return expr::conjunction_of( std::move( factors ) );
}

int group_cost( const group& g )
{
  const int base_literals = g.base.literal_count();
  const int factor_count = base_literals + static_cast<int>( g.exclusions.size() );
  int cost = factor_count >= 1 ? factor_count - 1 : 0;
  for ( const auto& x : g.exclusions )
    cost += x.literal_count() - base_literals - 1;
  return cost;
}

bool is_valid_group( const group& g, const bool_func& f )
{
  if ( g.base.var_count() != f.var_count() )
    throw std::invalid_argument( "group/function var_count mismatch" );
  const uint64_t cells = group_cells( g );
  return ( cells & f.off_mask() ) == 0 && ( cells & f.on_mask() ) != 0;
}

bool group_less( const group& a, const group& b )
{
  if ( a.base.id() != b.base.id() )
    return a.base.id() < b.base.id();
  const size_t n = std::min( a.exclusions.size(), b.exclusions.size() );
  for ( size_t i = 0; i < n; ++i )
    if ( a.exclusions[i].id() != b.exclusions[i].id() )
      return a.exclusions[i].id() < b.exclusions[i].id();
  return a.exclusions.size() < b.exclusions.size();
}

std::string group_debug_string( const group& g )
{
  std::string s = "base " + g.base.to_string();
  if ( !g.exclusions.empty() )
  {
    s += " \\ {";
    for ( size_t i = 0; i < g.exclusions.size(); ++i )
    {
      if ( i )
        s += ", ";
      s += g.exclusions[i].to_string();
    }
    s += "}";
  }
  return s;
}

namespace detail
{

namespace
{

/* Function-independent tables per variable count: every cube's cells and,
 * per base, the ids of proper subcubes fixing at least two extra variables.
 * Subcubes fixing exactly one extra variable never help: folding the fixed
 * value into the base yields the same cells at the same cost with a
 * canonically smaller key, so the dedup winner never uses them. */
struct cube_table
{
  std::vector<cube> cubes;
  std::vector<uint64_t> cells;
  std::vector<int> literal_count;
  std::vector<std::vector<uint16_t>> subcube_ids;
};

const cube_table& table_for( int var_count )
{
  static std::array<cube_table, max_var_count + 1> tables;
  static std::array<std::once_flag, max_var_count + 1> flags;
  if ( var_count < 1 || var_count > max_var_count )
    throw std::invalid_argument( "var_count must be in 1.." + std::to_string( max_var_count ) );
  std::call_once( flags[var_count], [var_count]() {
    cube_table t;
    t.cubes = all_cubes( var_count );
    const size_t count = t.cubes.size();
    t.cells.reserve( count );
    t.literal_count.reserve( count );
    for ( const auto& c : t.cubes )
    {
      t.cells.push_back( c.cells() );
      t.literal_count.push_back( c.literal_count() );
    }
    t.subcube_ids.resize( count );
    for ( size_t base = 0; base < count; ++base )
    {
      for ( size_t sub = 0; sub < count; ++sub )
      {
        if ( sub == base )
          continue;
        if ( t.literal_count[sub] < t.literal_count[base] + 2 )
          continue;
        if ( t.cubes[base].contains( t.cubes[sub] ) )
          t.subcube_ids[base].push_back( static_cast<uint16_t>( sub ) );
      }
    }
    tables[var_count] = std::move( t );
  } );
  return tables[var_count];
}

struct enumerator
{
  const cube_table& table;
  uint64_t on, off;
  int max_exclusions;

  std::vector<group_candidate> out;
  std::unordered_map<uint64_t, size_t> by_cells;

  std::vector<uint16_t> chosen;

  void consider( int base_id, uint64_t cells )
  {
    const int base_literals = table.literal_count[base_id];
    const int factor_count = base_literals + static_cast<int>( chosen.size() );
    int cost = factor_count >= 1 ? factor_count - 1 : 0;
    for ( uint16_t x : chosen )
      cost += table.literal_count[x] - base_literals - 1;

    group grp;
    grp.base = table.cubes[base_id];
    grp.exclusions.reserve( chosen.size() );
    for ( uint16_t x : chosen )
      grp.exclusions.push_back( table.cubes[x] );

    auto [it, inserted] = by_cells.try_emplace( cells, out.size() );
    if ( inserted )
      out.push_back( { std::move( grp ), cells, cost } );
    else
    {
      auto& prev = out[it->second];
      if ( cost < prev.cost || ( cost == prev.cost && group_less( grp, prev.grp ) ) )
        prev = { std::move( grp ), cells, cost };
    }
  }

  /* Extend the current exclusion set with subcubes after `from`. */
  void extend( int base_id, uint64_t base_cells, uint64_t covered, size_t from )
  {
    if ( static_cast<int>( chosen.size() ) >= max_exclusions )
      return;
    const auto& subs = table.subcube_ids[base_id];
    for ( size_t i = from; i < subs.size(); ++i )
    {
      const uint16_t x = subs[i];
      const uint64_t xc = table.cells[x];
      if ( ( covered & xc ) == 0 )
        continue; /* removes nothing new */
      const uint64_t next = covered & ~xc;
      chosen.push_back( x );
      if ( ( next & off ) == 0 && ( next & on ) != 0 && each_exclusion_contributes( base_cells ) )
        consider( base_id, next );
      extend( base_id, base_cells, next, i + 1 );
      chosen.pop_back();
    }
  }

  bool each_exclusion_contributes( uint64_t base_cells ) const
  {
    for ( size_t i = 0; i < chosen.size(); ++i )
    {
      uint64_t others = 0;
      for ( size_t j = 0; j < chosen.size(); ++j )
        if ( j != i )
          others |= table.cells[chosen[j]];
      if ( ( table.cells[chosen[i]] & base_cells & ~others ) == 0 )
        return false;
    }
    return true;
  }

  void run()
  {
    for ( size_t base_id = 0; base_id < table.cubes.size(); ++base_id )
    {
      const uint64_t base_cells = table.cells[base_id];
      if ( ( base_cells & on ) == 0 )
        continue;
      if ( ( base_cells & off ) == 0 )
        consider( static_cast<int>( base_id ), base_cells );
      extend( static_cast<int>( base_id ), base_cells, base_cells, 0 );
    }
    std::sort( out.begin(), out.end(), []( const group_candidate& a, const group_candidate& b ) {
      return group_less( a.grp, b.grp );
    } );
  }
};

} // namespace

std::vector<group_candidate> enumerate_group_candidates( const bool_func& f, int max_exclusions )
{
  if ( max_exclusions < 0 )
    throw std::invalid_argument( "max_exclusions must be >= 0" );
  enumerator e{ table_for( f.var_count() ), f.on_mask(), f.off_mask(), max_exclusions, {}, {}, {} };
  e.run();
  return std::move( e.out );
}

} // namespace detail

std::vector<group> enumerate_groups( const bool_func& f, int max_exclusions )
{
  auto candidates = detail::enumerate_group_candidates( f, max_exclusions );
  std::vector<group> groups;
  groups.reserve( candidates.size() );
  for ( auto& c : candidates )
    groups.push_back( std::move( c.grp ) );
  return groups;
}

} // namespace kmapx
