#include "kmapx/render.hpp"

#include <sstream>

namespace kmapx
{

namespace
{

const int gray2[4] = { 0, 1, 3, 2 };

std::string gray_label( int value, int bits )
{
  std::string s;
  for ( int b = bits - 1; b >= 0; --b )
    s.push_back( ( value >> b ) & 1 ? '1' : '0' );
  return s;
}

char tag_letter( size_t i )
{
  if ( i < 26 )
    return static_cast<char>( 'A' + i );
  return static_cast<char>( 'a' + ( i - 26 ) % 26 );
}

} // namespace

std::string render_kmap( const bool_func& f, const cover* cov )
{
  const int n = f.var_count();
  if ( n < 2 || n > 4 )
    throw std::invalid_argument( "rendering supports 2..4 variables" );

  const int col_bits = n == 2 ? 1 : 2;
  const int row_bits = n - col_bits;
  const int cols = 1 << col_bits;
  const int rows = 1 << row_bits;

  /* Column variables are the leading (high) variables. */
  auto minterm_at = [&]( int row, int col ) {
    const int col_value = col_bits == 1 ? col : gray2[col];
    const int row_value = row_bits == 1 ? row : gray2[row];
    return ( col_value << row_bits ) | row_value;
  };

  std::vector<uint64_t> group_masks;
  if ( cov )
    for ( const auto& g : cov->groups )
      group_masks.push_back( group_cells( g ) );

  /* Cell text: value character plus the tags of covering groups. */
  std::vector<std::vector<std::string>> cell( rows, std::vector<std::string>( cols ) );
  size_t cell_width = 1;
  for ( int r = 0; r < rows; ++r )
    for ( int c = 0; c < cols; ++c )
    {
      const int m = minterm_at( r, c );
      std::string s;
      switch ( f.value_at( m ) )
      {
      case truth_value::zero:
        s = "0";
        break;
      case truth_value::one:
        s = "1";
        break;
      case truth_value::dc:
        s = "-";
        break;
      }
      for ( size_t gi = 0; gi < group_masks.size(); ++gi )
        if ( group_masks[gi] & ( uint64_t( 1 ) << m ) )
          s.push_back( tag_letter( gi ) );
      cell_width = std::max( cell_width, s.size() );
      cell[r][c] = std::move( s );
    }

  std::string col_vars, row_vars;
  for ( int v = 0; v < col_bits; ++v )
    col_vars += f.var_names()[v];
  for ( int v = col_bits; v < n; ++v )
    row_vars += f.var_names()[v];

  const size_t w = cell_width + 2;
  std::ostringstream os;
  auto pad_right = [&]( const std::string& s, size_t width ) {
    os << std::string( width > s.size() ? width - s.size() : 0, ' ' ) << s;
  };

  const size_t row_header = row_vars.size() + 1;
  os << std::string( row_header, ' ' );
  pad_right( col_vars, w );
  os << '\n';
  os << row_vars << ' ';
  for ( int c = 0; c < cols; ++c )
    pad_right( gray_label( col_bits == 1 ? c : gray2[c], col_bits ), w );
  os << '\n';
  for ( int r = 0; r < rows; ++r )
  {
    const std::string label = gray_label( row_bits == 1 ? r : gray2[r], row_bits );
    os << label << std::string( row_header - label.size(), ' ' );
    for ( int c = 0; c < cols; ++c )
      pad_right( cell[r][c], w );
    os << '\n';
  }

  if ( cov && !cov->groups.empty() )
  {
    os << '\n';
    for ( size_t gi = 0; gi < cov->groups.size(); ++gi )
      os << tag_letter( gi ) << " = " << print_expr( group_expression( cov->groups[gi] ), f.var_names() )
         << "   [" << group_debug_string( cov->groups[gi] ) << "]\n";
  }
  return os.str();
}

} // namespace kmapx
