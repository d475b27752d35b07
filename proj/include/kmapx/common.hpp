#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kmapx
{

inline constexpr int max_var_count = 6;

/* Cell sets are bitmasks over minterm indices; 2^6 = 64 cells fit a word. */
constexpr uint64_t full_cell_mask( int var_count )
{
  return var_count >= 6 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << ( 1u << var_count ) ) - 1 );
}

/* Minterm encoding is MSB-first: the first variable owns the highest bit,
 * so for n = 4 with names a,b,c,d the index is 8a + 4b + 2c + d. */
constexpr unsigned minterm_bit( int var, int var_count )
{
  return 1u << ( var_count - 1 - var );
}

struct parse_error : std::runtime_error
{
  size_t position;

  parse_error( const std::string& msg, size_t pos )
      : std::runtime_error( msg ), position( pos )
  {
  }
};

} // namespace kmapx
