#include "kmapx/expr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace kmapx
{

expr expr::constant_of( bool v )
{
  expr e;
  e.kind = op::constant;
  e.value = v;
  return e;
}

expr expr::variable_of( int var )
{
  if ( var < 0 )
    throw std::invalid_argument( "negative variable index" );
  expr e;
  e.kind = op::variable;
  e.var = var;
  return e;
}

expr expr::literal_of( int var, bool positive )
{
  return positive ? variable_of( var ) : negation_of( variable_of( var ) );
}

expr expr::negation_of( expr child )
{
  expr e;
  e.kind = op::negation;
  e.children.push_back( std::move( child ) );
  return e;
}

namespace
{

expr nary_of( expr::op kind, std::vector<expr> children )
{
  std::vector<expr> flat;
  flat.reserve( children.size() );
  for ( auto& c : children )
  {
    if ( c.kind == kind )
      for ( auto& gc : c.children )
        flat.push_back( std::move( gc ) );
    else
      flat.push_back( std::move( c ) );
  }
  if ( flat.empty() )
    return expr::constant_of( kind == expr::op::conjunction );
  if ( flat.size() == 1 )
    return std::move( flat.front() );
  expr e;
  e.kind = kind;
  e.children = std::move( flat );
  return e;
}

} // namespace

expr expr::conjunction_of( std::vector<expr> factors )
{
  return nary_of( op::conjunction, std::move( factors ) );
}

expr expr::disjunction_of( std::vector<expr> terms )
{
  return nary_of( op::disjunction, std::move( terms ) );
}

bool expr::is_literal() const
{
  return kind == op::variable ||
         ( kind == op::negation && children.size() == 1 && children[0].kind == op::variable );
}

int gate_cost( const expr& e )
{
  int cost = 0;
  if ( e.kind == expr::op::conjunction || e.kind == expr::op::disjunction )
    cost += static_cast<int>( e.children.size() ) - 1;
  for ( const auto& c : e.children )
    cost += gate_cost( c );
  return cost;
}

int expr_depth( const expr& e )
{
  switch ( e.kind )
  {
  case expr::op::constant:
  case expr::op::variable:
    return 0;
  case expr::op::negation:
    return expr_depth( e.children[0] );
  case expr::op::conjunction:
  case expr::op::disjunction:
  {
    int child_depth = 0;
    for ( const auto& c : e.children )
      child_depth = std::max( child_depth, expr_depth( c ) );
    const int k = static_cast<int>( e.children.size() );
    return child_depth + std::bit_width( static_cast<unsigned>( k - 1 ) );
  }
  }
  return 0;
}

bool eval_expr( const expr& e, const std::vector<bool>& assignment )
{
  switch ( e.kind )
  {
  case expr::op::constant:
    return e.value;
  case expr::op::variable:
    if ( e.var < 0 || static_cast<size_t>( e.var ) >= assignment.size() )
      throw std::out_of_range( "unbound variable index " + std::to_string( e.var ) );
    return assignment[e.var];
  case expr::op::negation:
    return !eval_expr( e.children[0], assignment );
  case expr::op::conjunction:
    for ( const auto& c : e.children )
      if ( !eval_expr( c, assignment ) )
        return false;
    return true;
  case expr::op::disjunction:
    for ( const auto& c : e.children )
      if ( eval_expr( c, assignment ) )
        return true;
    return false;
  }
  return false;
}

namespace
{

uint64_t var_projection( int var, int var_count )
{
  uint64_t mask = 0;
  const int cells = 1 << var_count;
  const unsigned bit = minterm_bit( var, var_count );
  for ( int m = 0; m < cells; ++m )
    if ( m & bit )
      mask |= uint64_t( 1 ) << m;
  return mask;
}

} // namespace

uint64_t truth_table( const expr& e, int var_count )
{
  const uint64_t full = full_cell_mask( var_count );
  switch ( e.kind )
  {
  case expr::op::constant:
    return e.value ? full : 0;
  case expr::op::variable:
    if ( e.var < 0 || e.var >= var_count )
      throw std::invalid_argument( "var_count too small for expression" );
    return var_projection( e.var, var_count );
  case expr::op::negation:
    return full & ~truth_table( e.children[0], var_count );
  case expr::op::conjunction:
  {
    uint64_t t = full;
    for ( const auto& c : e.children )
      t &= truth_table( c, var_count );
    return t;
  }
  case expr::op::disjunction:
  {
    uint64_t t = 0;
    for ( const auto& c : e.children )
      t |= truth_table( c, var_count );
    return t;
  }
  }
  return 0;
}

bool_func expr_to_func( const expr& e, int var_count )
{
  return bool_func( var_count, truth_table( e, var_count ), 0 );
}

bool equivalent( const expr& a, const expr& b, int var_count )
{
  return truth_table( a, var_count ) == truth_table( b, var_count );
}

int max_var_index( const expr& e )
{
  int m = e.kind == expr::op::variable ? e.var : -1;
  for ( const auto& c : e.children )
    m = std::max( m, max_var_index( c ) );
  return m;
}

namespace
{

/* Canonical child order: constants, then literals by (variable, polarity),
 * then composite nodes compared recursively. */
int compare_exprs( const expr& a, const expr& b )
{
  auto rank = []( const expr& e ) {
    if ( e.kind == expr::op::constant )
      return 0;
    if ( e.is_literal() )
      return 1;
    return e.kind == expr::op::disjunction ? 2 : 3;
  };
  const int ra = rank( a ), rb = rank( b );
  if ( ra != rb )
    return ra < rb ? -1 : 1;
  switch ( ra )
  {
  case 0:
    return a.value == b.value ? 0 : ( !a.value ? -1 : 1 );
  case 1:
  {
    const int va = a.kind == expr::op::variable ? a.var : a.children[0].var;
    const int vb = b.kind == expr::op::variable ? b.var : b.children[0].var;
    if ( va != vb )
      return va < vb ? -1 : 1;
    const bool pa = a.kind == expr::op::variable;
    const bool pb = b.kind == expr::op::variable;
    if ( pa != pb )
      return pa ? -1 : 1;
    return 0;
  }
  default:
  {
    const size_t n = std::min( a.children.size(), b.children.size() );
    for ( size_t i = 0; i < n; ++i )
      if ( int c = compare_exprs( a.children[i], b.children[i] ); c != 0 )
        return c;
    if ( a.children.size() != b.children.size() )
      return a.children.size() < b.children.size() ? -1 : 1;
    return 0;
  }
  }
}

expr canonicalized( const expr& e )
{
  expr out = e;
  for ( auto& c : out.children )
    c = canonicalized( c );
  if ( out.kind == expr::op::conjunction || out.kind == expr::op::disjunction )
    std::stable_sort( out.children.begin(), out.children.end(),
                      []( const expr& x, const expr& y ) { return compare_exprs( x, y ) < 0; } );
  return out;
}

} // namespace

bool structurally_equal( const expr& a, const expr& b )
{
  return canonicalized( a ) == canonicalized( b );
}

namespace
{

std::string print_node( const expr& e, const std::vector<std::string>& names, bool nested );

std::string print_literal( const expr& e, const std::vector<std::string>& names )
{
  const bool positive = e.kind == expr::op::variable;
  const int var = positive ? e.var : e.children[0].var;
  if ( var < 0 || static_cast<size_t>( var ) >= names.size() )
    throw std::invalid_argument( "no name for variable index " + std::to_string( var ) );
  return positive ? names[var] : names[var] + "'";
}

std::string print_conjunction( const expr& e, const std::vector<std::string>& names )
{
  /* Base literals in variable order first, then OR factors. */
  std::vector<const expr*> literals, factors;
  for ( const auto& c : e.children )
    ( c.is_literal() || c.kind == expr::op::constant ? literals : factors ).push_back( &c );
  std::sort( literals.begin(), literals.end(),
             []( const expr* x, const expr* y ) { return compare_exprs( *x, *y ) < 0; } );

  std::vector<std::string> factor_strs;
  for ( const expr* f : factors )
    factor_strs.push_back( print_node( *f, names, true ) );
  std::sort( factor_strs.begin(), factor_strs.end() );

  std::string out;
  for ( const expr* l : literals )
    out += print_node( *l, names, true );
  for ( const auto& s : factor_strs )
    out += "(" + s + ")";
  return out;
}

std::string print_disjunction( const expr& e, const std::vector<std::string>& names, bool nested )
{
  std::vector<std::string> terms;
  for ( const auto& c : e.children )
    terms.push_back( print_node( c, names, true ) );
  std::sort( terms.begin(), terms.end() );
  std::string out;
  const char* sep = nested ? "+" : " + ";
  for ( size_t i = 0; i < terms.size(); ++i )
  {
    if ( i )
      out += sep;
    out += terms[i];
  }
  return out;
}

std::string print_node( const expr& e, const std::vector<std::string>& names, bool nested )
{
  switch ( e.kind )
  {
  case expr::op::constant:
    return e.value ? "1" : "0";
  case expr::op::variable:
    return print_literal( e, names );
  case expr::op::negation:
    if ( !e.is_literal() )
      throw std::invalid_argument( "cannot print negation of a non-variable" );
    return print_literal( e, names );
  case expr::op::conjunction:
    return print_conjunction( e, names );
  case expr::op::disjunction:
    return print_disjunction( e, names, nested );
  }
  return {};
}

} // namespace

std::string print_expr( const expr& e, const std::vector<std::string>& var_names )
{
  /* The caller parenthesizes a disjunction when embedding it; at top level
   * terms are joined with " + ". */
  return print_node( e, var_names, false );
}

namespace
{

class expr_parser
{
public:
  expr_parser( std::string_view text, const std::vector<std::string>& names )
      : text_( text ), names_( names )
  {
  }

  expr parse()
  {
    expr e = parse_disjunction();
    skip_ws();
    if ( pos_ != text_.size() )
      throw parse_error( "unexpected character '" + std::string( 1, text_[pos_] ) + "'", pos_ );
    return e;
  }

private:
  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
      ++pos_;
  }

  bool at_factor_start()
  {
    skip_ws();
    if ( pos_ >= text_.size() )
      return false;
    const char c = text_[pos_];
    if ( c == '(' || c == '0' || c == '1' )
      return true;
    return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_';
  }

  expr parse_disjunction()
  {
    std::vector<expr> terms;
    terms.push_back( parse_conjunction() );
    while ( true )
    {
      skip_ws();
      if ( pos_ < text_.size() && text_[pos_] == '+' )
      {
        ++pos_;
        terms.push_back( parse_conjunction() );
      }
      else
        break;
    }
    return expr::disjunction_of( std::move( terms ) );
  }

  expr parse_conjunction()
  {
    std::vector<expr> factors;
    factors.push_back( parse_factor() );
    while ( true )
    {
      skip_ws();
      if ( pos_ < text_.size() && text_[pos_] == '*' )
      {
        ++pos_;
        factors.push_back( parse_factor() );
      }
      else if ( at_factor_start() )
      {
        factors.push_back( parse_factor() );
      }
      else
        break;
    }
    return expr::conjunction_of( std::move( factors ) );
  }

  expr parse_factor()
  {
    skip_ws();
    if ( pos_ >= text_.size() )
      throw parse_error( "unexpected end of expression", pos_ );
    const char c = text_[pos_];
    if ( c == '(' )
    {
      ++pos_;
      expr inner = parse_disjunction();
      skip_ws();
      if ( pos_ >= text_.size() || text_[pos_] != ')' )
        throw parse_error( "expected ')'", pos_ );
      ++pos_;
      return inner;
    }
    if ( c == '0' || c == '1' )
    {
      ++pos_;
      return expr::constant_of( c == '1' );
    }
    return parse_literal();
  }

  expr parse_literal()
  {
    /* Longest-match against the known variable names. */
    int best = -1;
    size_t best_len = 0;
    for ( size_t i = 0; i < names_.size(); ++i )
    {
      const auto& name = names_[i];
      if ( name.size() > best_len && text_.compare( pos_, name.size(), name ) == 0 )
      {
        best = static_cast<int>( i );
        best_len = name.size();
      }
    }
    if ( best < 0 )
    {
      size_t j = pos_;
      while ( j < text_.size() && ( std::isalnum( static_cast<unsigned char>( text_[j] ) ) ||
                                    text_[j] == '_' ) )
        ++j;
      if ( j == pos_ )
        throw parse_error( "expected a literal, constant or '('", pos_ );
      throw parse_error( "unknown variable '" + std::string( text_.substr( pos_, j - pos_ ) ) + "'",
                         pos_ );
    }
    pos_ += best_len;
    bool positive = true;
    if ( pos_ < text_.size() && text_[pos_] == '\'' )
    {
      positive = false;
      ++pos_;
    }
    return expr::literal_of( best, positive );
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  size_t pos_ = 0;
};

} // namespace

expr parse_expr( std::string_view text, const std::vector<std::string>& var_names )
{
  return expr_parser( text, var_names ).parse();
}

} // namespace kmapx
