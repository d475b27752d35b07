#include "kmapx/run_stats.hpp"

#include "json.hpp"

namespace kmapx
{

run_stats stats_for( const minimize_result& r, double elapsed_ms )
{
  const expr e = cover_expression( r.best );
  run_stats s;
  s.var_count = r.best.func.var_count();
  s.on_count = r.best.func.on_count();
  s.dc_count = r.best.func.dc_count();
  s.mode = r.best.mode;
  s.method = r.best.method;
  s.cost = cover_cost( r.best );
  s.group_count = static_cast<int>( r.best.groups.size() );
  s.depth = expr_depth( e );
  s.search_nodes = r.search_nodes;
  s.elapsed_ms = elapsed_ms;
  s.expression = print_expr( e, r.best.func.var_names() );
  s.optimal = r.optimal;
  return s;
}

std::string run_stats_to_json( const run_stats& s )
{
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["var_count"] = s.var_count;
  j["on_count"] = s.on_count;
  j["dc_count"] = s.dc_count;
  j["mode"] = to_string( s.mode );
  j["method"] = to_string( s.method );
  j["cost"] = s.cost;
  j["group_count"] = s.group_count;
  j["depth"] = s.depth;
  j["search_nodes"] = s.search_nodes;
  j["elapsed_ms"] = s.elapsed_ms;
  j["expression"] = s.expression;
  j["optimal"] = s.optimal;
  return j.dump();
}

} // namespace kmapx
