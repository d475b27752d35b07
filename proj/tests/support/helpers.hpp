/* Test-side readers for the textual outputs: a K-map grid parser that
 * recovers the ON-set from rendered maps, and a netlist parser/simulator
 * independent of the emitter. */

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace test_helpers
{

/* Recover the ON-set of a rendered K-map. The grid's header row carries the
 * Gray column labels; each body row starts with its Gray row label. */
inline uint64_t read_kmap_on_set( const std::string& text, int var_count )
{
  std::istringstream is( text );
  std::string line;
  std::getline( is, line ); /* column variable names */
  std::getline( is, line ); /* column labels */
  std::istringstream header( line );
  std::string row_vars;
  header >> row_vars;
  std::vector<int> col_values;
  std::string label;
  while ( header >> label )
    col_values.push_back( static_cast<int>( std::stoul( label, nullptr, 2 ) ) );

  const int row_bits = var_count - ( var_count == 2 ? 1 : 2 );
  uint64_t on = 0;
  while ( std::getline( is, line ) )
  {
    std::istringstream row( line );
    std::string row_label;
    if ( !( row >> row_label ) )
      break; /* blank line before the legend */
    const int row_value = static_cast<int>( std::stoul( row_label, nullptr, 2 ) );
    for ( int col = 0; col < static_cast<int>( col_values.size() ); ++col )
    {
      std::string cell;
      if ( !( row >> cell ) )
        throw std::runtime_error( "short K-map row" );
      const int minterm = ( col_values[col] << row_bits ) | row_value;
      if ( cell[0] == '1' )
        on |= uint64_t( 1 ) << minterm;
    }
  }
  return on;
}

struct netlist
{
  std::vector<std::string> inputs;
  struct gate
  {
    std::string net, op, lhs, rhs; /* rhs empty for NOT */
  };
  std::vector<gate> gates;
  std::string output_net;

  int and_or_count() const
  {
    int count = 0;
    for ( const auto& g : gates )
      if ( g.op == "AND" || g.op == "OR" )
        ++count;
    return count;
  }
};

inline netlist parse_netlist( const std::string& text )
{
  netlist n;
  std::istringstream is( text );
  std::string line;
  while ( std::getline( is, line ) )
  {
    if ( line.empty() || line[0] == '#' )
      continue;
    std::istringstream ls( line );
    std::string first;
    ls >> first;
    if ( first == "input" )
    {
      std::string name;
      while ( ls >> name )
        n.inputs.push_back( name );
    }
    else if ( first == "output" )
    {
      std::string label;
      ls >> label >> n.output_net;
    }
    else
    {
      netlist::gate g;
      g.net = first;
      std::string eq;
      ls >> eq >> g.op >> g.lhs;
      if ( g.op != "NOT" )
        ls >> g.rhs;
      if ( eq != "=" || ( g.op != "AND" && g.op != "OR" && g.op != "NOT" ) )
        throw std::runtime_error( "bad netlist line: " + line );
      n.gates.push_back( g );
    }
  }
  return n;
}

/* Topological evaluation; gate lines appear in dependency order. */
inline bool simulate_netlist( const netlist& n, const std::vector<bool>& input_values )
{
  std::map<std::string, bool> values{ { "0", false }, { "1", true } };
  for ( size_t i = 0; i < n.inputs.size(); ++i )
    values[n.inputs[i]] = input_values.at( i );
  for ( const auto& g : n.gates )
  {
    if ( g.op == "NOT" )
      values[g.net] = !values.at( g.lhs );
    else if ( g.op == "AND" )
      values[g.net] = values.at( g.lhs ) && values.at( g.rhs );
    else
      values[g.net] = values.at( g.lhs ) || values.at( g.rhs );
  }
  return values.at( n.output_net );
}

} // namespace test_helpers
