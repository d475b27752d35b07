#include "kmapx/bool_func.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace kmapx
{

namespace
{

uint64_t mask_from_minterms( int var_count, const std::vector<int>& minterms )
{
  uint64_t mask = 0;
  for ( int m : minterms )
  {
    if ( m < 0 || m >= ( 1 << var_count ) )
      throw std::out_of_range( "minterm index " + std::to_string( m ) + " out of range for " +
                               std::to_string( var_count ) + " variables" );
    mask |= uint64_t( 1 ) << m;
  }
  return mask;
}

std::vector<int> minterms_of( uint64_t mask )
{
  std::vector<int> out;
  for ( int m = 0; m < 64; ++m )
    if ( mask & ( uint64_t( 1 ) << m ) )
      out.push_back( m );
  return out;
}

} // namespace

bool_func::bool_func( int var_count, uint64_t on_mask, uint64_t dc_mask,
                      std::vector<std::string> var_names )
{
  if ( var_count < 1 || var_count > max_var_count )
    throw std::invalid_argument( "var_count must be in 1.." + std::to_string( max_var_count ) );
  const uint64_t full = full_cell_mask( var_count );
  if ( ( on_mask & ~full ) || ( dc_mask & ~full ) )
    throw std::out_of_range( "minterm index out of range" );
  if ( on_mask & dc_mask )
    throw std::invalid_argument( "on_set and dc_set overlap" );
  var_count_ = static_cast<uint8_t>( var_count );
  on_ = on_mask;
  dc_ = dc_mask;
  if ( var_names.empty() )
    var_names_ = default_var_names( var_count );
  else
  {
    if ( static_cast<int>( var_names.size() ) != var_count )
      throw std::invalid_argument( "var_names size does not match var_count" );
    var_names_ = std::move( var_names );
  }
}

bool_func bool_func::from_minterms( int var_count, const std::vector<int>& on,
                                    const std::vector<int>& dc,
                                    std::vector<std::string> var_names )
{
  if ( var_count < 1 || var_count > max_var_count )
    throw std::invalid_argument( "var_count must be in 1.." + std::to_string( max_var_count ) );
  return bool_func( var_count, mask_from_minterms( var_count, on ),
                    mask_from_minterms( var_count, dc ), std::move( var_names ) );
}

int bool_func::on_count() const
{
  return std::popcount( on_ );
}

int bool_func::dc_count() const
{
  return std::popcount( dc_ );
}

truth_value bool_func::value_at( int minterm ) const
{
  if ( minterm < 0 || minterm >= ( 1 << var_count_ ) )
    throw std::out_of_range( "minterm index out of range" );
  const uint64_t bit = uint64_t( 1 ) << minterm;
  if ( on_ & bit )
    return truth_value::one;
  if ( dc_ & bit )
    return truth_value::dc;
  return truth_value::zero;
}

std::vector<int> bool_func::on_minterms() const
{
  return minterms_of( on_ );
}

std::vector<int> bool_func::dc_minterms() const
{
  return minterms_of( dc_ );
}

std::vector<std::string> default_var_names( int var_count )
{
  std::vector<std::string> names;
  if ( var_count <= 4 )
  {
    const char* letters[] = { "a", "b", "c", "d" };
    for ( int i = 0; i < var_count; ++i )
      names.push_back( letters[i] );
  }
  else
  {
    for ( int i = 0; i < var_count; ++i )
      names.push_back( "x" + std::to_string( i + 1 ) );
  }
  return names;
}

namespace
{

std::string strip_comment( const std::string& line )
{
  const auto pos = line.find( '#' );
  std::string s = pos == std::string::npos ? line : line.substr( 0, pos );
  const auto first = s.find_first_not_of( " \t\r" );
  if ( first == std::string::npos )
    return {};
  const auto last = s.find_last_not_of( " \t\r" );
  return s.substr( first, last - first + 1 );
}

std::vector<std::string> split_ws( const std::string& s )
{
  std::vector<std::string> out;
  std::istringstream is( s );
  std::string tok;
  while ( is >> tok )
    out.push_back( tok );
  return out;
}

/* Expand one PLA cube line into the accumulated masks. */
void add_pla_cube( const std::string& in_part, char out_char, int var_count, uint64_t& on,
                   uint64_t& dc, size_t line_no )
{
  uint64_t fixed = 0, value = 0;
  for ( int v = 0; v < var_count; ++v )
  {
    const uint64_t bit = minterm_bit( v, var_count );
    switch ( in_part[v] )
    {
    case '0':
      fixed |= bit;
      break;
    case '1':
      fixed |= bit;
      value |= bit;
      break;
    case '-':
      break;
    default:
      throw parse_error( "bad character '" + std::string( 1, in_part[v] ) + "' in cube", line_no );
    }
  }
  const uint64_t free_bits = ~fixed & ( ( uint64_t( 1 ) << var_count ) - 1 );
  uint64_t cells = 0;
  for ( uint64_t s = free_bits;; s = ( s - 1 ) & free_bits )
  {
    cells |= uint64_t( 1 ) << ( value | s );
    if ( s == 0 )
      break;
  }
  if ( out_char == '1' )
    on |= cells;
  else
    dc |= cells;
}

} // namespace

bool_func parse_pla( std::string_view text )
{
  int var_count = -1;
  int out_count = -1;
  bool ended = false;
  uint64_t on = 0, dc = 0;
  std::vector<std::string> names;

  std::istringstream is{ std::string( text ) };
  std::string raw;
  size_t line_no = 0;
  while ( std::getline( is, raw ) )
  {
    ++line_no;
    const std::string line = strip_comment( raw );
    if ( line.empty() || ended )
      continue;

    if ( line[0] == '.' )
    {
      const auto toks = split_ws( line );
      const std::string& dir = toks[0];
      if ( dir == ".i" )
      {
        if ( toks.size() != 2 )
          throw parse_error( ".i expects one argument", line_no );
        var_count = std::stoi( toks[1] );
        if ( var_count < 1 || var_count > max_var_count )
          throw parse_error( ".i must be in 1.." + std::to_string( max_var_count ), line_no );
      }
      else if ( dir == ".o" )
      {
        if ( toks.size() != 2 )
          throw parse_error( ".o expects one argument", line_no );
        out_count = std::stoi( toks[1] );
        if ( out_count != 1 )
          throw parse_error( "multi-output PLA unsupported (.o must be 1)", line_no );
      }
      else if ( dir == ".ilb" )
      {
        if ( var_count < 0 )
          throw parse_error( ".ilb before .i", line_no );
        if ( static_cast<int>( toks.size() ) != var_count + 1 )
          throw parse_error( ".ilb expects one name per input", line_no );
        names.assign( toks.begin() + 1, toks.end() );
      }
      else if ( dir == ".ob" || dir == ".p" )
      {
        /* output label / product count: informational */
      }
      else if ( dir == ".type" )
      {
        if ( toks.size() != 2 || toks[1] != "fr" )
          throw parse_error( "only .type fr is supported", line_no );
      }
      else if ( dir == ".e" || dir == ".end" )
      {
        ended = true;
      }
      else
      {
        throw parse_error( "unknown directive " + dir, line_no );
      }
      continue;
    }

    if ( var_count < 0 || out_count < 0 )
      throw parse_error( "cube line before .i/.o headers", line_no );
    const auto toks = split_ws( line );
    std::string in_part, out_part;
    if ( toks.size() == 2 )
    {
      in_part = toks[0];
      out_part = toks[1];
    }
    else if ( toks.size() == 1 && static_cast<int>( toks[0].size() ) == var_count + 1 )
    {
      in_part = toks[0].substr( 0, var_count );
      out_part = toks[0].substr( var_count );
    }
    else
    {
      throw parse_error( "malformed cube line", line_no );
    }
    if ( static_cast<int>( in_part.size() ) != var_count )
      throw parse_error( "cube width does not match .i", line_no );
    if ( out_part.size() != 1 || ( out_part[0] != '1' && out_part[0] != '-' ) )
      throw parse_error( "output must be '1' or '-'", line_no );
    add_pla_cube( in_part, out_part[0], var_count, on, dc, line_no );
  }

  if ( var_count < 0 || out_count < 0 )
    throw parse_error( "missing .i/.o headers", line_no );
  if ( on & dc )
  {
    const int cell = std::countr_zero( on & dc );
    throw parse_error( "cell " + std::to_string( cell ) + " claimed both ON and DC", line_no );
  }
  return bool_func( var_count, on, dc, std::move( names ) );
}

std::string to_pla( const bool_func& f )
{
  std::ostringstream os;
  os << ".i " << f.var_count() << "\n.o 1\n.ilb";
  for ( const auto& n : f.var_names() )
    os << ' ' << n;
  os << "\n.ob f\n";
  const int n = f.var_count();
  auto emit = [&]( int m, char out ) {
    for ( int v = 0; v < n; ++v )
      os << ( ( m & static_cast<int>( minterm_bit( v, n ) ) ) ? '1' : '0' );
    os << ' ' << out << '\n';
  };
  for ( int m : f.on_minterms() )
    emit( m, '1' );
  for ( int m : f.dc_minterms() )
    emit( m, '-' );
  os << ".e\n";
  return os.str();
}

namespace
{

std::vector<int> parse_int_list( const std::string& s, size_t line_pos )
{
  std::vector<int> out;
  size_t i = 0;
  while ( i < s.size() )
  {
    while ( i < s.size() && ( s[i] == ' ' || s[i] == ',' ) )
      ++i;
    if ( i >= s.size() )
      break;
    size_t j = i;
    while ( j < s.size() && std::isdigit( static_cast<unsigned char>( s[j] ) ) )
      ++j;
    if ( j == i )
      throw parse_error( "expected integer in minterm list", line_pos + i );
    out.push_back( std::stoi( s.substr( i, j - i ) ) );
    i = j;
  }
  return out;
}

} // namespace

bool_func parse_minterm_list( std::string_view text )
{
  int vars = -1;
  std::vector<int> on, dc;
  bool saw_on = false, saw_dc = false;

  size_t pos = 0;
  const std::string s( text );
  while ( pos < s.size() )
  {
    size_t end = s.find( ';', pos );
    if ( end == std::string::npos )
      end = s.size();
    std::string field = s.substr( pos, end - pos );
    const size_t field_pos = pos;
    pos = end + 1;

    const auto first = field.find_first_not_of( " \t\r\n" );
    if ( first == std::string::npos )
      continue;
    const auto last = field.find_last_not_of( " \t\r\n" );
    field = field.substr( first, last - first + 1 );

    const auto eq = field.find( '=' );
    if ( eq == std::string::npos )
      throw parse_error( "expected key=value", field_pos );
    std::string key = field.substr( 0, eq );
    key.erase( key.find_last_not_of( " \t" ) + 1 );
    const std::string value = field.substr( eq + 1 );

    if ( key == "vars" )
      vars = std::stoi( value );
    else if ( key == "on" )
    {
      on = parse_int_list( value, field_pos );
      saw_on = true;
    }
    else if ( key == "dc" )
    {
      dc = parse_int_list( value, field_pos );
      saw_dc = true;
    }
    else
      throw parse_error( "unknown key '" + key + "'", field_pos );
  }
  if ( vars < 0 )
    throw parse_error( "missing vars= field", 0 );
  if ( !saw_on && !saw_dc )
    throw parse_error( "missing on=/dc= fields", 0 );
  return bool_func::from_minterms( vars, on, dc );
}

std::string to_minterm_list( const bool_func& f )
{
  std::ostringstream os;
  os << "vars=" << f.var_count() << "; on=";
  bool first = true;
  for ( int m : f.on_minterms() )
  {
    if ( !first )
      os << ',';
    os << m;
    first = false;
  }
  os << "; dc=";
  first = true;
  for ( int m : f.dc_minterms() )
  {
    if ( !first )
      os << ',';
    os << m;
    first = false;
  }
  os << ";";
  return os.str();
}

} // namespace kmapx
