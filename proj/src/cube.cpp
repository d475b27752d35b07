#include "kmapx/cube.hpp"

#include <bit>

namespace kmapx
{

namespace
{

void check_var_count( int var_count )
{
  if ( var_count < 1 || var_count > max_var_count )
    throw std::invalid_argument( "var_count must be in 1.." + std::to_string( max_var_count ) );
}

int pow3( int n )
{
  int p = 1;
  while ( n-- > 0 )
    p *= 3;
  return p;
}

} // namespace

cube::cube( int var_count )
{
  check_var_count( var_count );
  var_count_ = static_cast<uint8_t>( var_count );
}

cube cube::from_string( std::string_view trits )
{
  check_var_count( static_cast<int>( trits.size() ) );
  cube c( static_cast<int>( trits.size() ) );
  for ( int v = 0; v < c.var_count_; ++v )
  {
    const uint8_t bit = static_cast<uint8_t>( minterm_bit( v, c.var_count_ ) );
    switch ( trits[v] )
    {
    case '0':
      c.fixed_ |= bit;
      break;
    case '1':
      c.fixed_ |= bit;
      c.value_ |= bit;
      break;
    case '-':
      break;
    default:
      throw std::invalid_argument( "invalid trit character in cube string" );
    }
  }
  return c;
}

cube cube::from_minterm( int var_count, int minterm )
{
  check_var_count( var_count );
  if ( minterm < 0 || minterm >= ( 1 << var_count ) )
    throw std::out_of_range( "minterm index out of range" );
  cube c( var_count );
  c.fixed_ = static_cast<uint8_t>( ( 1u << var_count ) - 1 );
  c.value_ = static_cast<uint8_t>( minterm );
  return c;
}

cube cube::from_id( int var_count, int id )
{
  check_var_count( var_count );
  if ( id < 0 || id >= pow3( var_count ) )
    throw std::out_of_range( "cube id out of range" );
  cube c( var_count );
  for ( int v = var_count - 1; v >= 0; --v )
  {
    const int digit = id % 3;
    id /= 3;
    const uint8_t bit = static_cast<uint8_t>( minterm_bit( v, var_count ) );
    if ( digit < 2 )
    {
      c.fixed_ |= bit;
      if ( digit == 1 )
        c.value_ |= bit;
    }
  }
  return c;
}

char cube::trit( int var ) const
{
  if ( var < 0 || var >= var_count_ )
    throw std::out_of_range( "variable index out of range" );
  const uint8_t bit = static_cast<uint8_t>( minterm_bit( var, var_count_ ) );
  if ( !( fixed_ & bit ) )
    return '-';
  return ( value_ & bit ) ? '1' : '0';
}

int cube::literal_count() const
{
  return std::popcount( fixed_ );
}

uint64_t cube::cells() const
{
  const uint8_t free_bits = static_cast<uint8_t>( ~fixed_ & ( ( 1u << var_count_ ) - 1 ) );
  uint64_t mask = 0;
  for ( uint8_t s = free_bits;; s = static_cast<uint8_t>( ( s - 1 ) & free_bits ) )
  {
    mask |= uint64_t( 1 ) << ( value_ | s );
    if ( s == 0 )
      break;
  }
  return mask;
}

bool cube::contains_minterm( int minterm ) const
{
  if ( minterm < 0 || minterm >= ( 1 << var_count_ ) )
    throw std::out_of_range( "minterm index out of range" );
  return ( static_cast<uint8_t>( minterm ) & fixed_ ) == value_;
}

bool cube::contains( const cube& inner ) const
{
  if ( inner.var_count_ != var_count_ )
    throw std::invalid_argument( "cube var_count mismatch" );
  return ( fixed_ & inner.fixed_ ) == fixed_ && ( inner.value_ & fixed_ ) == value_;
}

int cube::id() const
{
  int id = 0;
  for ( int v = 0; v < var_count_; ++v )
  {
    const uint8_t bit = static_cast<uint8_t>( minterm_bit( v, var_count_ ) );
    const int digit = ( fixed_ & bit ) ? ( ( value_ & bit ) ? 1 : 0 ) : 2;
    id = id * 3 + digit;
  }
  return id;
}

std::string cube::to_string() const
{
  std::string s;
  s.reserve( var_count_ );
  for ( int v = 0; v < var_count_; ++v )
    s.push_back( trit( v ) );
  return s;
}

std::vector<cube> all_cubes( int var_count )
{
  check_var_count( var_count );
  const int count = pow3( var_count );
  std::vector<cube> cubes;
  cubes.reserve( count );
  for ( int id = 0; id < count; ++id )
    cubes.push_back( cube::from_id( var_count, id ) );
  return cubes;
}

bool cube_less( const cube& a, const cube& b )
{
  return a.id() < b.id();
}

} // namespace kmapx
