#include "kmapx/netlist.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace kmapx
{

namespace
{

struct emitter
{
  std::ostream& os;
  const std::vector<std::string>& names;
  int next_net = 1;
  std::map<int, std::string> not_nets; /* one NOT line per inverted variable */

  std::string fresh()
  {
    return "n" + std::to_string( next_net++ );
  }

  std::string emit( const expr& e )
  {
    switch ( e.kind )
    {
    case expr::op::constant:
      return e.value ? "1" : "0";
    case expr::op::variable:
      if ( e.var < 0 || static_cast<size_t>( e.var ) >= names.size() )
        throw std::invalid_argument( "no name for variable index " + std::to_string( e.var ) );
      return names[e.var];
    case expr::op::negation:
    {
      if ( e.children[0].kind == expr::op::variable )
      {
        const int var = e.children[0].var;
        auto it = not_nets.find( var );
        if ( it != not_nets.end() )
          return it->second;
        const std::string net = fresh();
        os << net << " = NOT " << emit( e.children[0] ) << '\n';
        not_nets.emplace( var, net );
        return net;
      }
      const std::string child = emit( e.children[0] );
      const std::string net = fresh();
      os << net << " = NOT " << child << '\n';
      return net;
    }
    case expr::op::conjunction:
    case expr::op::disjunction:
    {
      const char* gate = e.kind == expr::op::conjunction ? "AND" : "OR";
      std::string acc = emit( e.children[0] );
      for ( size_t i = 1; i < e.children.size(); ++i )
      {
        const std::string rhs = emit( e.children[i] );
        const std::string net = fresh();
        os << net << " = " << gate << ' ' << acc << ' ' << rhs << '\n';
        acc = net;
      }
      return acc;
    }
    }
    return "0";
  }
};

} // namespace

void emit_netlist( const expr& e, std::ostream& os, const std::vector<std::string>& var_names,
                   const std::vector<std::string>& comments )
{
  for ( const auto& c : comments )
    os << "# " << c << '\n';
  os << "input";
  for ( const auto& n : var_names )
    os << ' ' << n;
  os << '\n';
  emitter em{ os, var_names, 1, {} };
  const std::string net = em.emit( e );
  os << "output f " << net << '\n';
}

std::string emit_netlist( const expr& e, const std::vector<std::string>& var_names,
                          const std::vector<std::string>& comments )
{
  std::ostringstream os;
  emit_netlist( e, os, var_names, comments );
  return os.str();
}

} // namespace kmapx
